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
src/actual_cause/hp_checker.py - Actual causality conditions over concrete
trace logs: causal path partition, trace equivalence, the existence of a
witness (AC1), of a counterfactual (AC2(a)), sufficiency (AC2(b)) and the
cause candidate enumeration

Created: Wed 14 Oct 2026 10:47:55 AM EDT
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence
from typing import Set, Tuple

import numpy as np

from .backend import Backend, DirectBackend, TraceFacts
from .formula import Formula, Prim, And, Cmp, at, primitive, conjunction
from .formula import eval_steps, holds_eventually, max_concrete_index
from .formula import format_formula, FormulaError, IndexKind
from .trace_model import Signature, Trace, TraceLog, Value, TraceModelError
from .util import format_names


@dataclass(frozen=True)
class Partition:
    """Cause variables X, causal path Z (X and its descendants) and the
    off-path variables W; Z and W split the endogenous variables"""
    cause_vars: FrozenSet[str]
    z: FrozenSet[str]
    w: FrozenSet[str]

    def __post_init__(self):
        if not self.cause_vars <= self.z:
            raise ValueError('Cause variables must be on the causal path')
        if self.z & self.w:
            raise ValueError('Z and W must be disjoint')

    def ordered(self, sig: Signature) -> Tuple[List[str], List[str]]:
        """Z and W in signature order"""
        names = sig.names()
        return [n for n in names if n in self.z], [n for n in names if n in self.w]


@dataclass(frozen=True)
class CheckOptions:
    """Equivalence options of the counterfactual and sufficiency conditions.

    Attributes:
        same_context: counterfactual must share the witness' exogenous values
        equiv_prefix: Z/W equivalence compares steps 0..k only, where k is the
            largest step index of the cause
    """
    same_context: bool = True
    equiv_prefix: bool = False


@dataclass(frozen=True)
class CauseCandidate:
    """A conjunction of primitive equalities on cause variables at concrete
    steps, with the partition it is checked against"""
    formula: Formula
    partition: Partition
    text: str = field(default='', compare=False)

    def __post_init__(self):
        if not self.text:
            object.__setattr__(self, 'text', format_formula(self.formula))

    def __str__(self):
        return self.text


Intervention = Tuple[Tuple[str, int, Value], ...]


def intervention_of(candidate: CauseCandidate) -> Intervention:
    """The assignment (variable, step, value) a cause candidate denotes"""
    prims = candidate.formula.args if isinstance(candidate.formula, And) else (candidate.formula,)
    out = []
    for p in prims:
        if not isinstance(p, Prim) or p.cmp != Cmp.EQ or p.index.kind != IndexKind.CONCRETE:
            raise FormulaError(f'"{candidate.text}" is not a conjunction of equalities at concrete steps')
        out.append((p.variable, p.index.step, p.value))
    return tuple(out)


def derive_partition(sig: Signature, cause_vars: Iterable[str]) -> Partition:
    """Z is the cause variables with all of their dependency descendants, W the
    remaining endogenous variables.

    Raises:
        TraceModelError for unknown or exogenous cause variables
    """
    x = frozenset(cause_vars)
    for name in sorted(x):
        if sig.decl(name).is_exogenous:
            raise TraceModelError(f'Cause variable "{name}" is exogenous')
    endogenous = set(sig.endogenous())
    z = frozenset((x | sig.descendants(x)) & endogenous)
    return Partition(x, z, frozenset(endogenous - z))


def trace_equiv(a: Trace, b: Trace, names: Iterable[str], sig: Signature,
                upto: Optional[int] = None) -> bool:
    """Step-wise agreement of two traces on the given variables, within each
    variable's tolerance. Traces of different lengths are never equivalent
    unless no variables are compared.

    Arguments:
        upto: compare steps 0..upto only; both traces must be longer than upto
    """
    names = list(names)
    if not names:
        return True
    if upto is None:
        if len(a) != len(b):
            return False
        end = len(a)
    else:
        if len(a) <= upto or len(b) <= upto:
            return False
        end = upto + 1
    for name in names:
        decl = sig.decl(name)
        if decl.is_discrete:
            if a.columns[name][:end] != b.columns[name][:end]:
                return False
        elif not np.all(np.abs(a.array(name)[:end] - b.array(name)[:end]) <= decl.tolerance):
            return False
    return True


def required_length(*formulas: Formula) -> int:
    """Smallest trace length on which all concrete indices exist"""
    return max(max_concrete_index(f) for f in formulas) + 1


def _same_context(a: Trace, b: Trace, sig: Signature) -> bool:
    return all(a.value(n, 0) == b.value(n, 0) for n in sig.exogenous())


def trace_facts(log: TraceLog, candidate: CauseCandidate, effect: Formula,
                witness: Optional[Trace] = None,
                opts: CheckOptions = CheckOptions()) -> Iterator[TraceFacts]:
    """Fact rows of the traces of log, in log order. Traces too short for a
    concrete index of the cause or the effect are skipped: no step of them can
    be evaluated."""
    sig = log.signature
    min_len = required_length(candidate.formula, effect)
    upto = max_concrete_index(candidate.formula) if opts.equiv_prefix else None
    z = [n for n in sig.names() if n in candidate.partition.z]
    w = [n for n in sig.names() if n in candidate.partition.w]
    for tr in log:
        if len(tr) < min_len:
            continue
        z_equiv = w_equiv = False
        same_context = True
        if witness is not None:
            z_equiv = trace_equiv(witness, tr, z, sig, upto)
            w_equiv = trace_equiv(witness, tr, w, sig, upto)
            if opts.same_context:
                same_context = _same_context(witness, tr, sig)
        yield TraceFacts(tr.id, eval_steps(candidate.formula, tr),
                         eval_steps(effect, tr), z_equiv, w_equiv, same_context)


def check_ac1(log: TraceLog, c: CauseCandidate, effect: Formula,
              backend: Backend = DirectBackend()) -> Optional[Trace]:
    """First trace of log where the effect does not happen before the cause,
    and happens at or after it"""
    found = backend.find_witness(trace_facts(log, c, effect))
    return log.trace(found.trace_id) if found else None


def check_ac2a(log: TraceLog, tau: Trace, c: CauseCandidate, effect: Formula,
               opts: CheckOptions = CheckOptions(),
               backend: Backend = DirectBackend()) -> Optional[Trace]:
    """First trace where neither the cause nor the effect ever holds and which
    differs from tau on Z or W"""
    if opts.same_context:
        log = log.subset(tr.id for tr in log if _same_context(tau, tr, log.signature))
    found = backend.find_counterfactual(trace_facts(log, c, effect, tau, opts))
    return log.trace(found.trace_id) if found else None


def check_ac2b(log: TraceLog, tau: Trace, c: CauseCandidate, effect: Formula,
               opts: CheckOptions = CheckOptions(),
               backend: Backend = DirectBackend()) -> Optional[Trace]:
    """Returns None if every trace that agrees with tau on Z (and differs on W
    when W is not empty) and reaches the cause without the effect first also
    shows the effect; otherwise the first such trace without the effect"""
    found = backend.find_counterexample(trace_facts(log, c, effect, tau, opts),
                                        not c.partition.w)
    return log.trace(found.trace_id) if found else None


def failing_traces(log: TraceLog, effect: Formula) -> List[Trace]:
    """Traces where the effect eventually holds, in log order"""
    min_len = required_length(effect)
    return [tr for tr in log if len(tr) >= min_len and holds_eventually(effect, tr)]


Atom = Tuple[int, str, Value]


def _observed_atoms(failing: Sequence[Trace], cause_vars: Sequence[str]) -> List[Atom]:
    """(step, variable, value) triples observed in failing traces, by step,
    then by order of first observation"""
    atoms: List[Atom] = []
    max_len = max((len(tr) for tr in failing), default=0)
    for t in range(max_len):
        seen: Set[Tuple[str, Value]] = set()
        for tr in failing:
            if t >= len(tr):
                continue
            for name in cause_vars:
                value = tr.value(name, t)
                if (name, value) not in seen:
                    seen.add((name, value))
                    atoms.append((t, name, value))
    return atoms


def enumerate_candidates(log: TraceLog, effect: Formula, cause_vars: Sequence[str],
                         max_conjuncts: int = 1) -> Iterator[CauseCandidate]:
    """Cause candidates: equalities v(t) = x over the values x each cause
    variable v takes in failing traces, earliest step first; then conjunctions
    of up to max_conjuncts such equalities that co-occur in a failing trace,
    in increasing size.
    """
    if not cause_vars:
        raise ValueError('At least one cause variable is required')
    sig = log.signature
    partition = derive_partition(sig, cause_vars)
    failing = failing_traces(log, effect)
    atoms = _observed_atoms(failing, list(cause_vars))
    logging.debug(f'{len(failing)} failing traces, {len(atoms)} candidate events over {format_names(cause_vars)}')

    def to_prim(atom: Atom) -> Prim:
        step, name, value = atom
        return primitive(sig, name, at(step), Cmp.EQ, value)

    for atom in atoms:
        yield CauseCandidate(to_prim(atom), partition)
    if max_conjuncts < 2:
        return

    support: Dict[Atom, Set[int]] = {}
    for pos, tr in enumerate(failing):
        for t in range(len(tr)):
            for name in cause_vars:
                support.setdefault((t, name, tr.value(name, t)), set()).add(pos)
    for size in range(2, max_conjuncts + 1):
        for combo in itertools.combinations(atoms, size):
            if len({(t, name) for t, name, _ in combo}) < size:
                continue
            if not set.intersection(*(support[a] for a in combo)):
                continue
            yield CauseCandidate(conjunction(to_prim(a) for a in combo), partition)
