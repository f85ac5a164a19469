#!/usr/bin/env python3
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
actual-cause.py - See DESC constant below

Created: Sun 18 Oct 2026 11:02:19 AM EDT
"""
import os
import sys
import argparse
import logging
from actual_cause import VERSION
from actual_cause.commands import analyze, generate, bench
from actual_cause.config import configure
from actual_cause.constants import INPUT_ERROR
from actual_cause.util import UserReportError, config_logging


DESC = r"""This application finds the actual cause of an effect, typically a
safety failure, in a log of execution traces. It also generates benchmark
trace logs and times the execution modes of the search."""


class ArgumentParser(argparse.ArgumentParser):
    """ Usage errors are input errors """
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f'{self.prog}: error: {message}\n')


def main(argv=None):
    """ Entry point into this program. """
    parser = create_arg_parser()
    args = parser.parse_args(argv)
    if not getattr(args, 'func', None):
        parser.print_help(sys.stderr)
        return INPUT_ERROR
    try:
        config_logging(args)
        cfg = configure(args)
        logging.info(f'actual-cause {VERSION} {args.subcommand}')
        return args.func(args, cfg)
    except UserReportError as err:
        logging.error(err.message)
        return err.returncode
    except (FileNotFoundError, PermissionError) as err:
        logging.error(str(err))
        return INPUT_ERROR


def create_arg_parser():
    """ Create the command line options parser object for this script. """
    prog = os.path.basename(os.path.splitext(sys.argv[0])[0])
    parser = ArgumentParser(prog=prog, description=DESC)

    common_opts_parser = ArgumentParser(add_help=False)
    common_opts_parser.add_argument('--cfg', type=str,
                                    help='INI configuration file')
    common_opts_parser.add_argument('--logfile', type=str,
                                    help='Default: actual-cause.log, stderr logs everything to standard error')
    common_opts_parser.add_argument('--loglevel',
                                    choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
    common_opts_parser.add_argument('--version', action='version',
                                    version='%(prog)s ' + VERSION)

    sp = parser.add_subparsers(dest='subcommand', title='Subcommands')
    analyze.create_arg_parser(sp, common_opts_parser)
    generate.create_arg_parser(sp, common_opts_parser)
    bench.create_arg_parser(sp, common_opts_parser)
    return parser


if __name__ == "__main__":
    import traceback
    from actual_cause.constants import UNKNOWN_ERROR
    try:
        sys.exit(main())
    except Exception as e:
        traceback.print_exc(file=sys.stderr)
        sys.exit(UNKNOWN_ERROR)
