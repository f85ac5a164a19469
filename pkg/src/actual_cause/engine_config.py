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
src/actual_cause/engine_config.py - Configuration of the actual cause search

Created: Fri 16 Oct 2026 09:12:26 AM EDT
"""

from dataclasses import dataclass, field
from dataclasses_json import dataclass_json, LetterCase
from typing import Any, Dict, List

from .base import ParamInfo, ConfigParserToDataclassMapper
from .base import PositiveInteger, NonNegativeInteger, UnitFraction, NonNegativeFloat
from .base import NameList
from .constants import Mode, IngestionMode
from .constants import CAUSE_DFLT_MODE, CAUSE_DFLT_ALPHA, CAUSE_DFLT_BETA
from .constants import CAUSE_DFLT_SEED, CAUSE_DFLT_MAX_CONJUNCTS
from .constants import CAUSE_DFLT_MAX_OUTER_ITERS, CAUSE_DFLT_MAX_INNER_ITERS
from .constants import CAUSE_DFLT_TIMEOUT_MS, CAUSE_DFLT_SAME_CONTEXT
from .constants import CAUSE_DFLT_EQUIV_PREFIX, CAUSE_DFLT_PARTITION_CONTEXT
from .constants import CAUSE_DFLT_INGESTION
from .constants import CFG_ANALYSIS, CFG_ANALYSIS_EFFECT, CFG_ANALYSIS_CAUSE_VARS
from .constants import CFG_ANALYSIS_MODE, CFG_ANALYSIS_MAX_CONJUNCTS
from .constants import CFG_ANALYSIS_SAME_CONTEXT, CFG_ANALYSIS_EQUIV_PREFIX
from .constants import CFG_ANALYSIS_INGESTION, CFG_ANALYSIS_PARTITION_CONTEXT
from .constants import CFG_ABSTRACTION, CFG_ABSTRACTION_ALPHA, CFG_ABSTRACTION_BETA
from .constants import CFG_ABSTRACTION_SEED
from .constants import CFG_LIMITS, CFG_LIMITS_MAX_OUTER, CFG_LIMITS_MAX_INNER
from .constants import CFG_LIMITS_TIMEOUT_MS
from .hp_checker import CheckOptions
from .trace_model import Signature


@dataclass_json(letter_case=LetterCase.KEBAB)
@dataclass
class EngineConfig(ConfigParserToDataclassMapper):
    """Parameters of the actual cause search.

    Attributes:
        effect: effect formula text
        cause_vars: endogenous variables the cause may refer to
        mode: execution mode
        alpha: initial fraction of traces in the under-approximation
        beta: grid cell width of the over-approximation
        seed: seed of the trace sampling
        max_conjuncts: largest number of equalities in a cause
        same_context: counterfactual must share the exogenous values of the
            witness
        equiv_prefix: compare traces only up to the last step of the cause
        ingestion: handling of out-of-domain values in the trace log
        partition_context: analyze each exogenous context separately
        max_outer_iters: cap on under-approximation rounds
        max_inner_iters: cap on over-approximation refinements per
            candidate, 0 for the number of concrete states
        timeout_ms: deadline of a search in milliseconds, 0 for none
    """
    effect: str = ''
    cause_vars: NameList = field(default_factory=NameList)
    mode: Mode = CAUSE_DFLT_MODE
    alpha: UnitFraction = UnitFraction(CAUSE_DFLT_ALPHA)
    beta: NonNegativeFloat = NonNegativeFloat(CAUSE_DFLT_BETA)
    seed: NonNegativeInteger = NonNegativeInteger(CAUSE_DFLT_SEED)
    max_conjuncts: PositiveInteger = PositiveInteger(CAUSE_DFLT_MAX_CONJUNCTS)
    same_context: bool = CAUSE_DFLT_SAME_CONTEXT
    equiv_prefix: bool = CAUSE_DFLT_EQUIV_PREFIX
    ingestion: IngestionMode = CAUSE_DFLT_INGESTION
    partition_context: bool = CAUSE_DFLT_PARTITION_CONTEXT
    max_outer_iters: PositiveInteger = PositiveInteger(CAUSE_DFLT_MAX_OUTER_ITERS)
    max_inner_iters: NonNegativeInteger = NonNegativeInteger(CAUSE_DFLT_MAX_INNER_ITERS)
    timeout_ms: NonNegativeInteger = NonNegativeInteger(CAUSE_DFLT_TIMEOUT_MS)

    mapping = {'effect': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_EFFECT),
               'cause_vars': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_CAUSE_VARS),
               'mode': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_MODE),
               'max_conjuncts': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_MAX_CONJUNCTS),
               'same_context': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_SAME_CONTEXT),
               'equiv_prefix': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_EQUIV_PREFIX),
               'ingestion': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_INGESTION),
               'partition_context': ParamInfo(CFG_ANALYSIS, CFG_ANALYSIS_PARTITION_CONTEXT),
               'alpha': ParamInfo(CFG_ABSTRACTION, CFG_ABSTRACTION_ALPHA),
               'beta': ParamInfo(CFG_ABSTRACTION, CFG_ABSTRACTION_BETA),
               'seed': ParamInfo(CFG_ABSTRACTION, CFG_ABSTRACTION_SEED),
               'max_outer_iters': ParamInfo(CFG_LIMITS, CFG_LIMITS_MAX_OUTER),
               'max_inner_iters': ParamInfo(CFG_LIMITS, CFG_LIMITS_MAX_INNER),
               'timeout_ms': ParamInfo(CFG_LIMITS, CFG_LIMITS_TIMEOUT_MS)}

    def __post_init__(self):
        self.cause_vars = NameList(self.cause_vars)

    @property
    def check_options(self) -> CheckOptions:
        return CheckOptions(same_context=self.same_context, equiv_prefix=self.equiv_prefix)

    def validate(self, errors: List[str], sig: Signature) -> None:
        """Validate the configuration against a signature, appending problems
        to errors"""
        if not self.cause_vars:
            errors.append('At least one cause variable is required')
        for name in self.cause_vars:
            if name not in sig:
                errors.append(f'Cause variable "{name}" is not declared in the signature')
            elif sig.decl(name).is_exogenous:
                errors.append(f'Cause variable "{name}" is exogenous, cause variables must be endogenous')

    def asdict(self) -> Dict[str, Any]:
        """JSON ready parameter values, as embedded in reports"""
        return {k: v for k, v in self.to_dict(encode_json=True).items() if k != 'mapping'} # type: ignore
