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
src/actual_cause/report.py - Results of the actual cause search and their
JSON report

Created: Fri 16 Oct 2026 11:40:03 AM EDT
"""

from dataclasses import dataclass, field
from dataclasses_json import dataclass_json, config
from typing import Any, Dict, List, Optional, Union

from .constants import Mode, NoCauseReason, REPORT_VERSION
from .hp_checker import CauseCandidate, Partition
from .trace_model import Signature


@dataclass
class SearchStats:
    """Counters of a search.

    Attributes:
        outer_iters: under-approximation rounds
        inner_iters: over-approximation refinements, over all candidates
        under_refinements: times alpha was increased
        alpha_final: alpha of the last round, 1 for the full modes
        abstract_states: abstract state count of the last over-approximation
        candidates: cause candidates examined
        wall_ms: search wall time in milliseconds
        abstraction: abstract state counts before and after every refinement
    """
    outer_iters: int = 0
    inner_iters: int = 0
    under_refinements: int = 0
    alpha_final: float = 1.0
    abstract_states: int = 0
    candidates: int = 0
    wall_ms: float = 0.0
    abstraction: List[Dict[str, int]] = field(default_factory=list)

    @property
    def refinements(self) -> int:
        return self.under_refinements + self.inner_iters


@dataclass(frozen=True)
class Verification:
    """Result of re-checking a cause on a concrete log"""
    ac1: bool
    ac2a: bool
    ac2b: bool
    witness: Optional[str] = None
    counterfactual: Optional[str] = None
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.ac1 and self.ac2a and self.ac2b

    def failing(self) -> Optional[str]:
        """Name of the first failing condition, None if all hold"""
        for name, value in (('AC1', self.ac1), ('AC2(a)', self.ac2a), ('AC2(b)', self.ac2b)):
            if not value:
                return name
        return None

    def summary(self) -> str:
        return ' '.join(f'{name}={"ok" if value else "fail"}' for name, value in
                        (('AC1', self.ac1), ('AC2(a)', self.ac2a), ('AC2(b)', self.ac2b)))


@dataclass
class CauseReport:
    """An actual cause with the traces supporting it"""
    cause: CauseCandidate
    witness: str
    counterfactual: str
    checked_universe: int
    mode: Mode
    stats: SearchStats
    verification: Optional[Verification] = None
    config: Dict[str, Any] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return True


@dataclass
class NoCause:
    """Search ended without a cause"""
    reason: NoCauseReason
    detail: str
    mode: Mode
    stats: SearchStats
    partition: Optional[Partition] = None
    config: Dict[str, Any] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return False


SearchResult = Union[CauseReport, NoCause]


# JSON report documents

@dataclass_json
@dataclass
class PartitionDoc:
    z: List[str] = field(metadata=config(field_name='Z'))
    w: List[str] = field(metadata=config(field_name='W'))


@dataclass_json
@dataclass
class StatsDoc:
    outer_iters: int
    inner_iters: int
    alpha_final: float
    abstract_states: int
    wall_ms: float


@dataclass_json
@dataclass
class VerificationDoc:
    ac1: bool
    ac2a: bool
    ac2b: bool


@dataclass_json
@dataclass
class NoCauseDoc:
    reason: str
    detail: str


@dataclass_json
@dataclass
class ReportDoc:
    """Report file contents"""
    report_version: int
    cause: Optional[str]
    witness: Optional[str]
    counterfactual: Optional[str]
    partition: Optional[PartitionDoc]
    mode: str
    stats: StatsDoc
    verification: Optional[VerificationDoc]
    no_cause: Optional[NoCauseDoc] = None
    config: Dict[str, Any] = field(default_factory=dict)
    abstraction: List[Dict[str, int]] = field(default_factory=list)


def _stats_doc(stats: SearchStats) -> StatsDoc:
    return StatsDoc(stats.outer_iters, stats.inner_iters, stats.alpha_final,
                    stats.abstract_states, round(stats.wall_ms, 3))


def _partition_doc(partition: Optional[Partition], sig: Signature) -> Optional[PartitionDoc]:
    if partition is None:
        return None
    z, w = partition.ordered(sig)
    return PartitionDoc(z, w)


def report_document(result: SearchResult, sig: Signature) -> ReportDoc:
    """Report document of a search result"""
    if isinstance(result, CauseReport):
        ver = result.verification
        return ReportDoc(REPORT_VERSION, result.cause.text, result.witness,
                         result.counterfactual,
                         _partition_doc(result.cause.partition, sig),
                         result.mode.value, _stats_doc(result.stats),
                         VerificationDoc(ver.ac1, ver.ac2a, ver.ac2b) if ver else None,
                         None, result.config, result.stats.abstraction)
    return ReportDoc(REPORT_VERSION, None, None, None,
                     _partition_doc(result.partition, sig), result.mode.value,
                     _stats_doc(result.stats), None,
                     NoCauseDoc(result.reason.value, result.detail),
                     result.config, result.stats.abstraction)


def report_json(result: SearchResult, sig: Signature) -> str:
    """JSON text of the report of a search result"""
    return report_document(result, sig).to_json(indent=2) + '\n' # type: ignore


def load_report(text: str) -> ReportDoc:
    return ReportDoc.schema().loads(text) # type: ignore


def summary_lines(result: SearchResult, sig: Signature) -> List[str]:
    """Human readable summary of a search result"""
    if isinstance(result, NoCause):
        return [f'no cause: {result.reason.value}', f'detail: {result.detail}']
    z, w = result.cause.partition.ordered(sig)
    lines = [f'cause: {result.cause.text}',
             f'witness: {result.witness}',
             f'counterfactual: {result.counterfactual}',
             f'partition: Z=[{", ".join(z)}] W=[{", ".join(w)}]']
    if result.verification is not None:
        lines.append(f'verification: {result.verification.summary()}')
    return lines
