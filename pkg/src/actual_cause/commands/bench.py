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
src/actual_cause/commands/bench.py - time the execution modes on prefixes of
a trace log

Created: Sun 18 Oct 2026 10:36:02 AM EDT
"""

import logging
import configparser
from typing import List, Optional

from actual_cause.base import UnitFraction
from actual_cause.commands.common import add_input_options, add_search_options
from actual_cause.commands.common import load_inputs
from actual_cause.constants import Mode, INPUT_ERROR
from actual_cause.engine import bench_modes, write_bench_csv
from actual_cause.filehelper import open_for_write
from actual_cause.util import UserReportError, parse_name_list, parse_positive_int_list


def create_arg_parser(subparser, common_opts_parser):
    """ Create the command line options subparser for the bench command. """
    parser = subparser.add_parser('bench', parents=[common_opts_parser],
                                  help='Time the execution modes on prefixes of a trace log')
    add_input_options(parser)
    add_search_options(parser)
    parser.add_argument('--sizes', type=str,
                        help='Comma separated numbers of leading traces to analyze, default: all traces')
    parser.add_argument('--modes', type=str,
                        help='Comma separated execution modes, default: the configured mode')
    parser.add_argument('--alphas', type=str,
                        help='Comma separated initial under-approximation fractions for the abstraction modes')
    parser.add_argument('--out', type=str, default='-',
                        help='CSV output file, default: standard output')
    parser.set_defaults(func=_bench)


def _parse_modes(val: Optional[str]) -> List[Mode]:
    if not val:
        return []
    try:
        return [Mode(m) for m in parse_name_list(val)]
    except ValueError as err:
        raise UserReportError(INPUT_ERROR, f'Invalid --modes "{val}": {err}, should be among {", ".join(m.value for m in Mode)}')


def _parse_alphas(val: Optional[str]) -> List[float]:
    if not val:
        return []
    try:
        return [float(UnitFraction(a)) for a in parse_name_list(val)]
    except ValueError as err:
        raise UserReportError(INPUT_ERROR, f'Invalid --alphas "{val}": {err}')


def _bench(args, cfg: configparser.ConfigParser) -> int:
    """ Entry point to benchmark the execution modes. Searches that time out
    are reported as rows, not errors. """
    modes = _parse_modes(args.modes)
    alphas = _parse_alphas(args.alphas)
    ecfg, _, log, effect = load_inputs(args, cfg)
    sizes = parse_positive_int_list(args.sizes) if args.sizes else [len(log)]
    rows = bench_modes(log, effect, ecfg, sizes, modes, alphas)
    with open_for_write(args.out) as f:
        write_bench_csv(rows, f)
    logging.info(f'{len(rows)} benchmark rows written to {args.out}')
    return 0
