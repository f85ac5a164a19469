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
src/actual_cause/backend.py - Base class for the query backends answering the
three actual causality conditions over per-trace fact rows

Created: Wed 14 Oct 2026 09:31:12 AM EDT
"""

from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .constants import DEPENDENCY_ERROR
from .formula import until_anchors, eventually_from
from .util import UserReportError


class BackendUnavailable(UserReportError):
    """Requested backend cannot be used in this installation"""
    def __init__(self, message: str):
        super().__init__(DEPENDENCY_ERROR, message)


@dataclass(frozen=True)
class TraceFacts:
    """Everything the causality conditions need to know about one trace,
    relative to a cause candidate, an effect and (for the counterfactual and
    sufficiency queries) a witness trace.

    Attributes:
        trace_id: Trace identifier
        cause: cause formula truth value per step
        effect: effect formula truth value per step
        z_equiv: trace agrees with the witness on the causal path variables
        w_equiv: trace agrees with the witness on the off-path variables
        same_context: trace may serve as counterfactual of the witness
    """
    trace_id: str
    cause: np.ndarray
    effect: np.ndarray
    z_equiv: bool = False
    w_equiv: bool = False
    same_context: bool = True

    def witnesses(self) -> bool:
        """!effect U (cause & <>effect)"""
        return bool(np.any(until_anchors(~self.effect, self.cause & eventually_from(self.effect))))

    def counterfactual(self) -> bool:
        """[](!cause & !effect), disequivalent to and in the context of the witness"""
        return (bool(np.all(~self.cause & ~self.effect))
                and (not self.z_equiv or not self.w_equiv)
                and self.same_context)

    def violates_sufficiency(self, w_empty: bool) -> bool:
        """Antecedent of the sufficiency condition holds but <>effect does not"""
        return (self.z_equiv and (w_empty or not self.w_equiv)
                and not bool(np.any(self.effect))
                and bool(np.any(until_anchors(~self.effect, self.cause))))


class Backend(metaclass=ABCMeta):
    """ Answers the existential conditions as satisfiability queries and the
    universal one as a validity query over a finite sequence of fact rows.
    Every answer is the first qualifying row in sequence order. """

    name = 'abstract'

    @abstractmethod
    def find_witness(self, facts: Iterable[TraceFacts]) -> Optional[TraceFacts]:
        """ First row satisfying !effect U (cause & <>effect) """

    @abstractmethod
    def find_counterfactual(self, facts: Iterable[TraceFacts]) -> Optional[TraceFacts]:
        """ First row satisfying [](!cause & !effect) and differing from the
        witness on Z or W """

    @abstractmethod
    def find_counterexample(self, facts: Iterable[TraceFacts], w_empty: bool) -> Optional[TraceFacts]:
        """ First row that is Z-equivalent to the witness (and W-different
        unless W is empty), satisfies !effect U cause and never shows the
        effect. None means the sufficiency condition holds. """


class DirectBackend(Backend):
    """ Linear scan in sequence order, stops at the first hit """

    name = 'direct'

    def find_witness(self, facts: Iterable[TraceFacts]) -> Optional[TraceFacts]:
        return next((f for f in facts if f.witnesses()), None)

    def find_counterfactual(self, facts: Iterable[TraceFacts]) -> Optional[TraceFacts]:
        return next((f for f in facts if f.counterfactual()), None)

    def find_counterexample(self, facts: Iterable[TraceFacts], w_empty: bool) -> Optional[TraceFacts]:
        return next((f for f in facts if f.violates_sufficiency(w_empty)), None)
