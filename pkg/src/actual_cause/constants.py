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
src/actual_cause/constants.py - Definitions for constants used in actual-cause

Created: Mon 12 Oct 2026 09:14:05 AM EDT
"""

from enum import Enum


class Mode(Enum):
    """ Execution modes of the cause search. The direct modes scan trace sets
        in log order, the backend modes hand the same queries to a constraint
        solver. The *_FULL modes work on the concrete log only, the *_ABS
        modes run the under/over-approximation refinement loops. """
    DIRECT_FULL  = 'direct_full'
    DIRECT_ABS   = 'direct_abs'
    BACKEND_FULL = 'backend_full'
    BACKEND_ABS  = 'backend_abs'

    def __str__(self):
        return self.value

    def uses_abstraction(self) -> bool:
        return self in (Mode.DIRECT_ABS, Mode.BACKEND_ABS)

    def uses_solver(self) -> bool:
        return self in (Mode.BACKEND_FULL, Mode.BACKEND_ABS)


class NoCauseReason(Enum):
    """ Machine readable reasons for a search that ends without a cause """
    AC1_UNSAT  = 'ac1-unsat'    # no candidate has an actual witness trace
    AC2A_UNSAT = 'ac2a-unsat'   # no witnessed candidate has a counterfactual
    AC2B_CEX   = 'ac2b-cex'     # every remaining candidate has a genuine counterexample
    CAPS       = 'caps'         # iteration caps hit before a decision

    def __str__(self):
        return self.value


class VarKind(Enum):
    """ Exogenous variables are fixed by the context of a trace, endogenous
        ones are produced by the system dynamics """
    EXOGENOUS = 'exogenous'
    ENDOGENOUS = 'endogenous'

    def __repr__(self):
        return f"'{self.value}'"


class IngestionMode(Enum):
    """ How out-of-domain values in a trace log are handled """
    STRICT = 'strict'
    CLAMP = 'clamp'

    def __str__(self):
        return self.value


class Outcome(Enum):
    """ Outcome of a single benchmark cell """
    CAUSE = 'cause'
    NO_CAUSE = 'no-cause'
    TIMEOUT = 'timeout'

    def __str__(self):
        return self.value


# Exit codes
INPUT_ERROR = 1
DEPENDENCY_ERROR = 2
NO_CAUSE = 3
UNKNOWN_ERROR = 255

# File format versions
SIDECAR_FORMAT_VERSION = 1
REPORT_VERSION = 1

# Trace log columns
CSV_TRACE_ID = 'trace_id'
CSV_STEP = 'step'

# Formula defaults
CAUSE_DFLT_TOLERANCE = 1e-6

# Engine defaults
CAUSE_DFLT_MODE = Mode.DIRECT_FULL
CAUSE_DFLT_ALPHA = 0.1
CAUSE_DFLT_BETA = 0.05
CAUSE_DFLT_SEED = 0
CAUSE_DFLT_MAX_CONJUNCTS = 1
CAUSE_DFLT_MAX_OUTER_ITERS = 16
# 0 means the natural bound: the number of concrete states in the log
CAUSE_DFLT_MAX_INNER_ITERS = 0
# 0 means no deadline
CAUSE_DFLT_TIMEOUT_MS = 0
CAUSE_DFLT_SAME_CONTEXT = True
CAUSE_DFLT_EQUIV_PREFIX = False
CAUSE_DFLT_PARTITION_CONTEXT = False
CAUSE_DFLT_INGESTION = IngestionMode.STRICT
CAUSE_DFLT_REPORT = 'report.json'

# Mountain car defaults
MCAR_DFLT_GRAVITY = 0.0025
MCAR_DFLT_FORCE = 0.001
MCAR_DFLT_HORIZON = 100
MCAR_DFLT_GOAL = 0.6
MCAR_POS_MIN = -1.2
MCAR_POS_MAX = 0.6
MCAR_VEL_MIN = -0.07
MCAR_VEL_MAX = 0.07
MCAR_DFLT_POLICIES = 'mixed'
MCAR_LOG_FILE = 'log.csv'
MCAR_SIGNATURE_FILE = 'signature.json'

# Logging
CAUSE_DFLT_LOGLEVEL = 'DEBUG'
CAUSE_DFLT_LOGFILE = 'actual-cause.log'

# Config sections and keys
CFG_ANALYSIS = 'analysis'
CFG_ANALYSIS_EFFECT = 'effect'
CFG_ANALYSIS_CAUSE_VARS = 'cause-vars'
CFG_ANALYSIS_MODE = 'mode'
CFG_ANALYSIS_MAX_CONJUNCTS = 'max-conjuncts'
CFG_ANALYSIS_SAME_CONTEXT = 'same-context'
CFG_ANALYSIS_EQUIV_PREFIX = 'equiv-prefix'
CFG_ANALYSIS_INGESTION = 'ingestion'
CFG_ANALYSIS_PARTITION_CONTEXT = 'partition-context'

CFG_ABSTRACTION = 'abstraction'
CFG_ABSTRACTION_ALPHA = 'alpha'
CFG_ABSTRACTION_BETA = 'beta'
CFG_ABSTRACTION_SEED = 'seed'

CFG_LIMITS = 'limits'
CFG_LIMITS_MAX_OUTER = 'max-outer-iters'
CFG_LIMITS_MAX_INNER = 'max-inner-iters'
CFG_LIMITS_TIMEOUT_MS = 'timeout-ms'
