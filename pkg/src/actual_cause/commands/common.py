#                           PUBLIC DOMAIN NOTICE
#              National Center for Biotechnology Information
#
# This software is a "United States Government Work" under the
# terms of the United States Copyright Act.  It was written as part of
# the authors' official duties as United States Government employees and
# thus cannot be copyrighted.  This software is freely available
# to the public for use.  The National Library of Medicine and the U.S.
# Government have not placed any restriction on its use or reproduction.
#
# Although all reasonable efforts have been taken to ensure the accuracy
# and reliability of the software and data, the NLM and the U.S.
# Government do not and cannot warrant the performance or results that
# may be obtained by using this software or data.  The NLM and the U.S.
# Government disclaim all warranties, express or implied, including
# warranties of performance, merchantability or fitness for any particular
# purpose.
#
# Please cite NCBI in any work or product based on this material.

"""
src/actual_cause/commands/common.py - Command line options and inputs shared
by the analyze and bench commands

Created: Sun 18 Oct 2026 09:20:14 AM EDT
"""

import argparse
import configparser
import logging
from typing import Tuple

from actual_cause.base import NameList, PositiveInteger, NonNegativeInteger
from actual_cause.base import UnitFraction, NonNegativeFloat
from actual_cause.config import engine_config
from actual_cause.constants import Mode, IngestionMode, INPUT_ERROR
from actual_cause.engine_config import EngineConfig
from actual_cause.formula import Formula, parse_formula
from actual_cause.trace_model import Signature, TraceLog
from actual_cause.trace_model import load_signature, load_trace_log
from actual_cause.util import UserReportError


def add_input_options(parser: argparse.ArgumentParser) -> None:
    """ Trace log and signature files """
    parser.add_argument('--log', type=str, required=True,
                        help='Trace log CSV file, - for standard input')
    parser.add_argument('--signature', type=str, required=True,
                        help='Signature JSON file')


def add_search_options(parser: argparse.ArgumentParser) -> None:
    """ Search parameters. Options default to None so that values from the
    configuration file and the environment are only overridden when given. """
    parser.add_argument('--effect', type=str,
                        help='Effect formula, for example "pos(n) != 0.6"')
    parser.add_argument('--cause-vars', type=NameList,
                        help='Comma separated endogenous variables a cause may refer to')
    parser.add_argument('--mode', type=Mode, choices=list(Mode),
                        help='Execution mode, default: direct_full')
    parser.add_argument('--alpha', type=UnitFraction,
                        help='Initial fraction of traces in the under-approximation')
    parser.add_argument('--beta', type=NonNegativeFloat,
                        help='Grid cell width of the over-approximation')
    parser.add_argument('--seed', type=NonNegativeInteger,
                        help='Seed of the trace sampling')
    parser.add_argument('--max-conjuncts', type=PositiveInteger,
                        help='Largest number of equalities in a cause')
    parser.add_argument('--same-context', action=argparse.BooleanOptionalAction,
                        default=None,
                        help='Counterfactual traces must share the exogenous values of the witness')
    parser.add_argument('--equiv-prefix', action=argparse.BooleanOptionalAction,
                        default=None,
                        help='Compare traces only up to the last step of the cause')
    parser.add_argument('--ingestion', type=IngestionMode, choices=list(IngestionMode),
                        help='Handling of out-of-domain values in the trace log')
    parser.add_argument('--partition-context', action=argparse.BooleanOptionalAction,
                        default=None,
                        help='Analyze each exogenous context separately')
    parser.add_argument('--max-outer-iters', type=PositiveInteger,
                        help='Cap on under-approximation rounds')
    parser.add_argument('--max-inner-iters', type=NonNegativeInteger,
                        help='Cap on over-approximation refinements per candidate')
    parser.add_argument('--timeout-ms', type=NonNegativeInteger,
                        help='Search deadline in milliseconds, 0 for none')


def load_inputs(args: argparse.Namespace, cfg: configparser.ConfigParser) \
        -> Tuple[EngineConfig, Signature, TraceLog, Formula]:
    """ Resolve the search configuration, then read the signature, the trace
    log and the effect formula named on the command line.

    Raises:
        UserReportError for missing or invalid inputs
    """
    ecfg = engine_config(cfg)
    if not ecfg.effect:
        raise UserReportError(INPUT_ERROR, 'An effect formula is required, use --effect')
    if not ecfg.cause_vars:
        raise UserReportError(INPUT_ERROR, 'Cause variables are required, use --cause-vars')
    sig = load_signature(args.signature)
    log = load_trace_log(args.log, sig, ecfg.ingestion)
    effect = parse_formula(ecfg.effect, sig)
    logging.debug(f'Effect: {ecfg.effect}, cause variables: {ecfg.cause_vars}')
    return ecfg, sig, log, effect
