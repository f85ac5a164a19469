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
src/actual_cause/commands/analyze.py - search a trace log for an actual cause

Created: Sun 18 Oct 2026 09:41:55 AM EDT
"""

import logging
import configparser

from actual_cause.commands.common import add_input_options, add_search_options
from actual_cause.commands.common import load_inputs
from actual_cause.constants import NoCauseReason, NO_CAUSE, CAUSE_DFLT_REPORT
from actual_cause.engine import find_actual_cause, SearchTimeout
from actual_cause.filehelper import open_for_write
from actual_cause.hp_checker import derive_partition
from actual_cause.report import NoCause, SearchStats, report_json, summary_lines


def create_arg_parser(subparser, common_opts_parser):
    """ Create the command line options subparser for the analyze command. """
    parser = subparser.add_parser('analyze', parents=[common_opts_parser],
                                  help='Find the actual cause of an effect in a trace log')
    add_input_options(parser)
    add_search_options(parser)
    parser.add_argument('--out', type=str, default=CAUSE_DFLT_REPORT,
                        help=f'JSON report file, default: {CAUSE_DFLT_REPORT}')
    parser.set_defaults(func=_analyze)


def _analyze(args, cfg: configparser.ConfigParser) -> int:
    """ Entry point to search for an actual cause """
    ecfg, sig, log, effect = load_inputs(args, cfg)
    try:
        result = find_actual_cause(log, effect, ecfg)
    except SearchTimeout as err:
        logging.warning(err.message)
        result = NoCause(NoCauseReason.CAPS, err.message, ecfg.mode,
                         err.stats or SearchStats(),
                         derive_partition(sig, ecfg.cause_vars), ecfg.asdict())

    with open_for_write(args.out) as f:
        f.write(report_json(result, sig))
    logging.debug(f'Report written to {args.out}')
    for line in summary_lines(result, sig):
        print(line)
    return 0 if result.found else NO_CAUSE
