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
src/actual_cause/commands/generate.py - generate benchmark trace logs

Created: Sun 18 Oct 2026 10:07:31 AM EDT
"""

import logging
import configparser

from actual_cause.constants import MCAR_DFLT_HORIZON, MCAR_DFLT_POLICIES, INPUT_ERROR
from actual_cause.generators import MountainCarParams, PolicyFamily
from actual_cause.generators import generate_log, write_generated
from actual_cause.util import UserReportError, check_positive_int

SYSTEMS = ['mountain-car']


def create_arg_parser(subparser, common_opts_parser):
    """ Create the command line options subparser for the generate command. """
    parser = subparser.add_parser('generate', parents=[common_opts_parser],
                                  help='Generate a trace log and its signature')
    parser.add_argument('system', choices=SYSTEMS, help='System to simulate')
    parser.add_argument('--n', type=check_positive_int, required=True,
                        help='Number of traces')
    parser.add_argument('--seed', type=int, default=0,
                        help='Seed of the initial state sampling, default: 0')
    parser.add_argument('--horizon', type=check_positive_int, default=MCAR_DFLT_HORIZON,
                        help=f'Last step of traces that miss the goal, default: {MCAR_DFLT_HORIZON}')
    parser.add_argument('--policies', type=str, default=MCAR_DFLT_POLICIES,
                        help='Comma separated policy family: always-right, always-left, '
                        'bang-bang, velocity-threshold[:THETA] or mixed, '
                        f'default: {MCAR_DFLT_POLICIES}')
    parser.add_argument('--velocity-first', action='store_true',
                        help='Move the car with the updated velocity')
    parser.add_argument('--out', type=str, default='.',
                        help='Directory for log.csv and signature.json, default: current directory')
    parser.set_defaults(func=_generate)


def _generate(args, cfg: configparser.ConfigParser) -> int:
    """ Entry point to generate a trace log """
    if args.seed < 0:
        raise UserReportError(INPUT_ERROR, f'Seed must be non-negative, got {args.seed}')
    family = PolicyFamily.parse(args.policies)
    params = MountainCarParams(horizon=args.horizon, velocity_first=args.velocity_first)
    gen = generate_log(args.n, family, args.seed, params)
    log_path, sig_path = write_generated(gen, args.out)
    logging.info(f'Wrote {log_path} and {sig_path}')
    print(f'traces: {len(gen.log)}')
    print(f'success rate: {gen.success_rate:.3f}')
    return 0
