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
src/actual_cause/config.py - Functionality to configure actual-cause

Created: Sat 17 Oct 2026 01:48:30 PM EDT
"""

import os
import argparse
import logging
import configparser
from typing import List

from .constants import CFG_ANALYSIS, CFG_ANALYSIS_EFFECT, CFG_ANALYSIS_CAUSE_VARS
from .constants import CFG_ANALYSIS_MODE, CFG_ANALYSIS_MAX_CONJUNCTS
from .constants import CFG_ANALYSIS_SAME_CONTEXT, CFG_ANALYSIS_EQUIV_PREFIX
from .constants import CFG_ANALYSIS_INGESTION, CFG_ANALYSIS_PARTITION_CONTEXT
from .constants import CFG_ABSTRACTION, CFG_ABSTRACTION_ALPHA, CFG_ABSTRACTION_BETA
from .constants import CFG_ABSTRACTION_SEED
from .constants import CFG_LIMITS, CFG_LIMITS_MAX_OUTER, CFG_LIMITS_MAX_INNER
from .constants import CFG_LIMITS_TIMEOUT_MS, INPUT_ERROR
from .engine_config import EngineConfig
from .util import UserReportError

# Environment variables and the parameters they set
ENV_PARAMS = {
    'CAUSE_MODE': (CFG_ANALYSIS, CFG_ANALYSIS_MODE),
    'CAUSE_ALPHA': (CFG_ABSTRACTION, CFG_ABSTRACTION_ALPHA),
    'CAUSE_BETA': (CFG_ABSTRACTION, CFG_ABSTRACTION_BETA),
    'CAUSE_SEED': (CFG_ABSTRACTION, CFG_ABSTRACTION_SEED),
    'CAUSE_MAX_OUTER_ITERS': (CFG_LIMITS, CFG_LIMITS_MAX_OUTER),
    'CAUSE_TIMEOUT_MS': (CFG_LIMITS, CFG_LIMITS_TIMEOUT_MS),
}

# Command line arguments (argparse dest) and the parameters they set
ARG_PARAMS = {
    'effect': (CFG_ANALYSIS, CFG_ANALYSIS_EFFECT),
    'cause_vars': (CFG_ANALYSIS, CFG_ANALYSIS_CAUSE_VARS),
    'mode': (CFG_ANALYSIS, CFG_ANALYSIS_MODE),
    'max_conjuncts': (CFG_ANALYSIS, CFG_ANALYSIS_MAX_CONJUNCTS),
    'same_context': (CFG_ANALYSIS, CFG_ANALYSIS_SAME_CONTEXT),
    'equiv_prefix': (CFG_ANALYSIS, CFG_ANALYSIS_EQUIV_PREFIX),
    'ingestion': (CFG_ANALYSIS, CFG_ANALYSIS_INGESTION),
    'partition_context': (CFG_ANALYSIS, CFG_ANALYSIS_PARTITION_CONTEXT),
    'alpha': (CFG_ABSTRACTION, CFG_ABSTRACTION_ALPHA),
    'beta': (CFG_ABSTRACTION, CFG_ABSTRACTION_BETA),
    'seed': (CFG_ABSTRACTION, CFG_ABSTRACTION_SEED),
    'max_outer_iters': (CFG_LIMITS, CFG_LIMITS_MAX_OUTER),
    'max_inner_iters': (CFG_LIMITS, CFG_LIMITS_MAX_INNER),
    'timeout_ms': (CFG_LIMITS, CFG_LIMITS_TIMEOUT_MS),
}


def _set_sections(cfg: configparser.ConfigParser) -> None:
    """Sets the top level sections for the configuration object"""
    for section in (CFG_ANALYSIS, CFG_ABSTRACTION, CFG_LIMITS):
        if not cfg.has_section(section):
            cfg.add_section(section)


def _load_config_from_environment(cfg: configparser.ConfigParser) -> None:
    """Selected environment variables can be used to configure actual-cause"""
    for var, (section, key) in ENV_PARAMS.items():
        if var in os.environ:
            cfg[section][key] = os.environ[var]


def _to_cfg_value(value) -> str:
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)
    return str(value)


def configure(args: argparse.Namespace) -> configparser.ConfigParser:
    """Sets up the application's configuration.

    The order of precedence for configuration settings is as follows (lowest to highest):
    1. Application defaults
    2. Configuration file
    3. Environment variables (CAUSE_*)
    4. Command line parameters
    """
    retval = configparser.ConfigParser(empty_lines_in_values=False)
    _set_sections(retval)
    if hasattr(args, 'cfg') and args.cfg:
        if not os.path.isfile(args.cfg):
            raise FileNotFoundError(f'Configuration file "{args.cfg}" was not found')
        logging.debug(f'Reading {args.cfg}')
        retval.read(args.cfg)

    _load_config_from_environment(retval)

    # These command line options override the config value settings;
    # options left at None were not given
    for dest, (section, key) in ARG_PARAMS.items():
        value = getattr(args, dest, None)
        if value is not None:
            retval[section][key] = _to_cfg_value(value)
    return retval


def engine_config(cfg: configparser.ConfigParser) -> EngineConfig:
    """Create the search configuration, reporting all problems at once"""
    try:
        return EngineConfig.create_from_cfg(cfg)
    except ValueError as err:
        report_config_error(str(err).split('\n'))
        raise


def report_config_error(msg: List[str]) -> None:
    """Raise UserReportError with given error message."""
    err_msg = '\n'.join(['actual-cause configuration error(s):'] + msg + [
        'Configuration can be set in a config file provided with --cfg option, environment variables, or command line options.'])
    raise UserReportError(returncode=INPUT_ERROR, message=err_msg)
