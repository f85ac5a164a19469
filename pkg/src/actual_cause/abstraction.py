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
src/actual_cause/abstraction.py - Under-approximation (trace sampling) and
over-approximation (state merging) of trace logs, with their refinements

States are merged by a grid key: step index, grid cell of every continuous
causal path variable (cell width beta on the domain normalized to [0, 1]),
exact value of every discrete causal path or cause variable, and the truth
value of every primitive event of the cause and effect formulas evaluated on
the state. beta = 0 merges only identical states.

Created: Thu 15 Oct 2026 08:55:40 AM EDT
"""

import logging
import math
from dataclasses import dataclass, field, replace
from timeit import default_timer as timer
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional
from typing import Sequence, Tuple

import numpy as np

from .backend import TraceFacts
from .constants import NO_CAUSE
from .formula import Formula, Prim, Const, Not, And, IndexKind, primitives
from .formula import eval_steps, max_concrete_index
from .hp_checker import CauseCandidate, CheckOptions, Intervention, Partition
from .hp_checker import trace_facts, required_length
from .trace_model import Signature, Trace, TraceLog, TraceLogError, Value
from .util import CauseBaseException

# Quantization resolution of normalized values
GRID_SCALE = 10**9

StateRef = Tuple[str, int]


class RefinementExhausted(CauseBaseException):
    """Under-approximation already covers the whole log"""
    def __init__(self, message: str = 'Under-approximation already covers the whole log'):
        super().__init__(NO_CAUSE, message)


class NoSplittableState(CauseBaseException):
    """Every abstract state on a trace is a single concrete state"""
    def __init__(self, message: str = 'No abstract state on the trace can be split'):
        super().__init__(NO_CAUSE, message)


@dataclass(frozen=True)
class UnderApprox:
    """Subset of a trace log.

    Attributes:
        selected: sampled traces, in log order
        alpha: sampled fraction of the log
        seed: random generator seed
        order: shuffled trace positions; a sample of size m is the first m
    """
    selected: TraceLog
    alpha: float
    seed: int
    order: Tuple[int, ...] = field(repr=False)


def sample_size(n: int, alpha: float) -> int:
    """max(1, ceil(alpha * n)), insensitive to float noise in the product"""
    return max(1, math.ceil(round(alpha * n, 9)))


def _select(log: TraceLog, order: Sequence[int], m: int) -> TraceLog:
    positions = sorted(order[:m])
    return TraceLog(log.signature, tuple(log.traces[i] for i in positions))


def under_approximate(log: TraceLog, alpha: float, seed: int) -> UnderApprox:
    """Deterministic sample of max(1, ceil(alpha * N)) traces of log"""
    if not 0 < alpha <= 1:
        raise ValueError(f'alpha must be in (0, 1], got {alpha}')
    if not len(log):
        raise TraceLogError('Cannot sample an empty trace log')
    order = tuple(int(i) for i in np.random.default_rng(seed).permutation(len(log)))
    return UnderApprox(_select(log, order, sample_size(len(log), alpha)), alpha, seed, order)


def refine_under(u: UnderApprox, full: TraceLog) -> UnderApprox:
    """Double alpha (up to 1) and extend the sample along the same shuffled
    order, so the new sample contains the old one and at least one more trace.

    Raises:
        RefinementExhausted if the sample already holds every trace
    """
    n = len(full)
    if u.alpha >= 1.0 or len(u.selected) >= n:
        raise RefinementExhausted()
    alpha = min(1.0, 2 * u.alpha)
    size = min(n, max(sample_size(n, alpha), len(u.selected) + 1))
    return UnderApprox(_select(full, u.order, size), alpha, u.seed, u.order)


@dataclass(frozen=True)
class Envelope:
    """Values a variable takes over the members of an abstract state: an
    interval for continuous variables, a value set for discrete ones"""
    lo: float = 0.0
    hi: float = 0.0
    values: Optional[FrozenSet[Value]] = None

    def compatible(self, other: 'Envelope', tolerance: float) -> bool:
        """Some member of self and some member of other are equal"""
        if self.values is not None:
            return bool(self.values & other.values) # type: ignore
        return self.lo - tolerance <= other.hi and other.lo - tolerance <= self.hi

    def definitely_equal(self, other: 'Envelope', tolerance: float) -> bool:
        """Every member of self is equal to every member of other"""
        if self.values is not None:
            return len(self.values | other.values) == 1 # type: ignore
        return max(self.hi, other.hi) - min(self.lo, other.lo) <= tolerance

    def only(self, value: Value, tolerance: float) -> bool:
        """Every member equals value"""
        if self.values is not None:
            return self.values == frozenset([value])
        return abs(self.lo - value) <= tolerance and abs(self.hi - value) <= tolerance # type: ignore


@dataclass(frozen=True)
class AbstractState:
    """Merged concrete states.

    Attributes:
        id: state identifier
        step: step index shared by all members
        representative: centroid of continuous values, value of the first
            member for discrete variables
        members: (trace id, step) of the merged concrete states
        envelopes: per variable value envelope over the members
        bits: truth value of each primitive event of the cause and effect
    """
    id: int
    step: int
    representative: Dict[str, Value]
    members: Tuple[StateRef, ...]
    envelopes: Dict[str, Envelope]
    bits: Dict[Prim, bool]


@dataclass(frozen=True)
class AbstractIntervention:
    """Image of a concrete intervention: the assignments and the abstract
    states restricted to them"""
    assignments: Intervention
    states: FrozenSet[int]


@dataclass(frozen=True)
class AbstractModel:
    """State merged image of a trace log for one cause candidate"""
    log: TraceLog = field(repr=False)
    beta: float
    candidate: CauseCandidate
    effect: Formula
    states: Tuple[AbstractState, ...] = field(repr=False)
    h_map: Dict[StateRef, int] = field(repr=False)
    abstract_traces: Dict[str, Tuple[int, ...]] = field(repr=False)

    @property
    def partition(self) -> Partition:
        return self.candidate.partition

    def image(self, trace_id: str) -> Tuple[int, ...]:
        return self.abstract_traces[trace_id]

    def concretize(self, trace_id: str) -> List[str]:
        """Ids of the concrete traces with the same abstract trace as trace_id"""
        target = self.abstract_traces[trace_id]
        return [tid for tid, at in self.abstract_traces.items() if at == target]

    def distinct_traces(self) -> List[Tuple[str, Tuple[int, ...]]]:
        """Distinct abstract traces with the first concrete trace mapped to
        each, in log order"""
        seen = set()
        out = []
        for tid in self.log.ids():
            at = self.abstract_traces[tid]
            if at not in seen:
                seen.add(at)
                out.append((tid, at))
        return out

    def stats(self) -> Dict[str, int]:
        return {'abstract_states': len(self.states),
                'concrete_states': len(self.h_map),
                'merged_states': sum(1 for s in self.states if len(s.members) > 1)}


def _quantize(values: np.ndarray, lo: float, width: float, beta: float) -> np.ndarray:
    """Grid cell of every value; cells of width k*beta nest cells of width beta"""
    if width == 0:
        return np.zeros(len(values), dtype=np.int64)
    q = np.floor((values - lo) / width * GRID_SCALE).astype(np.int64)
    return q // max(1, int(round(beta * GRID_SCALE)))


def grid_cells(log: TraceLog, beta: float, partition: Partition) -> Dict[str, List[tuple]]:
    """Candidate independent part of the merge key of every concrete state"""
    if beta < 0 or not math.isfinite(beta):
        raise ValueError(f'beta must be a finite non-negative number, got {beta}')
    sig = log.signature
    if beta == 0:
        key_vars = sig.names()
    else:
        key_vars = [n for n in sig.names() if n in partition.z or n in partition.cause_vars]
    out: Dict[str, List[tuple]] = {}
    for tr in log:
        cols: List[Sequence] = [range(len(tr))]
        for name in key_vars:
            decl = sig.decl(name)
            if beta == 0 or decl.is_discrete:
                cols.append(tr.columns[name])
            else:
                cols.append(_quantize(tr.array(name), decl.domain.lo, decl.domain.width, beta).tolist()) # type: ignore
        out[tr.id] = list(zip(*cols))
    return out


def _envelope(values: List[Value], discrete: bool) -> Envelope:
    if discrete:
        return Envelope(values=frozenset(values))
    return Envelope(lo=float(min(values)), hi=float(max(values))) # type: ignore


def _make_state(sid: int, members: Tuple[StateRef, ...], log: TraceLog,
                bits: Dict[Prim, bool]) -> AbstractState:
    sig = log.signature
    rep: Dict[str, Value] = {}
    envs: Dict[str, Envelope] = {}
    for decl in sig.variables:
        values = [log.trace(tid).value(decl.name, step) for tid, step in members]
        envs[decl.name] = _envelope(values, decl.is_discrete)
        rep[decl.name] = values[0] if decl.is_discrete else float(np.mean(values))
    return AbstractState(sid, members[0][1], rep, members, envs, bits)


def over_approximate(log: TraceLog, beta: float, candidate: CauseCandidate,
                     effect: Formula,
                     cells: Optional[Dict[str, List[tuple]]] = None) -> AbstractModel:
    """Merge the concrete states of log by grid key.

    Arguments:
        log: concrete trace log
        beta: grid cell width on normalized values, 0 for no merging
        candidate: cause candidate, whose variables and events are preserved
        effect: effect formula, whose events are preserved
        cells: result of grid_cells for (log, beta, candidate.partition)
    """
    start = timer()
    if cells is None:
        cells = grid_cells(log, beta, candidate.partition)
    prims = primitives(candidate.formula)
    prims += [p for p in primitives(effect) if p not in prims]
    groups: Dict[tuple, List[StateRef]] = {}
    group_bits: Dict[tuple, Dict[Prim, bool]] = {}
    for tr in log:
        bit_cols = [eval_steps(p, tr, local=True).tolist() for p in prims]
        for step, cell in enumerate(cells[tr.id]):
            state_bits = tuple(col[step] for col in bit_cols)
            key = cell + state_bits
            members = groups.get(key)
            if members is None:
                groups[key] = members = []
                group_bits[key] = dict(zip(prims, state_bits))
            members.append((tr.id, step))

    states = []
    h_map: Dict[StateRef, int] = {}
    for sid, (key, members) in enumerate(groups.items()):
        states.append(_make_state(sid, tuple(members), log, group_bits[key]))
        for ref in members:
            h_map[ref] = sid
    abstract_traces = {tr.id: tuple(h_map[(tr.id, i)] for i in range(len(tr))) for tr in log}
    end = timer()
    logging.debug(f'Over-approximation with beta={beta}: {len(states)} abstract states for {len(h_map)} concrete states in {end - start:.2f} seconds')
    return AbstractModel(log, beta, candidate, effect, tuple(states), h_map, abstract_traces)


def split_states(m: AbstractModel, ids: Iterable[int]) -> AbstractModel:
    """New model in which the given abstract states are split into singletons"""
    to_split = sorted({sid for sid in ids if len(m.states[sid].members) > 1})
    if not to_split:
        raise NoSplittableState()
    states = list(m.states)
    h_map = dict(m.h_map)
    touched = set()
    for sid in to_split:
        old = states[sid]
        states[sid] = _make_state(sid, old.members[:1], m.log, old.bits)
        touched.add(old.members[0][0])
        for ref in old.members[1:]:
            new_id = len(states)
            states.append(_make_state(new_id, (ref,), m.log, old.bits))
            h_map[ref] = new_id
            touched.add(ref[0])
    abstract_traces = dict(m.abstract_traces)
    for tid in touched:
        abstract_traces[tid] = tuple(h_map[(tid, i)] for i in range(len(m.abstract_traces[tid])))
    logging.debug(f'Split {len(to_split)} abstract states: {len(m.states)} -> {len(states)} states')
    return replace(m, states=tuple(states), h_map=h_map, abstract_traces=abstract_traces)


def refine_over(m: AbstractModel, counterexample: str) -> AbstractModel:
    """Split every merged abstract state on the abstract trace of the
    counterexample trace id into singletons.

    Raises:
        NoSplittableState if all of them are singletons already
    """
    return split_states(m, m.image(counterexample))


def map_intervention(iv: Intervention, m: AbstractModel) -> Optional[AbstractIntervention]:
    """Abstract image of a concrete intervention, None when the image of the
    concrete states restricted to the assignment is not exactly a set of
    abstract states restricted to it"""
    sig = m.log.signature
    states = set()
    for name, step, value in iv:
        decl = sig.decl(name)
        concrete = set()
        for tr in m.log:
            if step < len(tr) and decl.equal(tr.value(name, step), value):
                concrete.add(m.h_map[(tr.id, step)])
        restricted = {s.id for s in m.states
                      if s.step == step and s.envelopes[name].only(value, decl.tolerance)}
        if concrete != restricted:
            return None
        states |= restricted
    return AbstractIntervention(iv, frozenset(states))


def mixed_states(iv: Intervention, m: AbstractModel) -> List[int]:
    """Abstract states containing members on both sides of an assignment"""
    sig = m.log.signature
    out = []
    for name, step, value in iv:
        decl = sig.decl(name)
        for s in m.states:
            if s.step != step:
                continue
            env = s.envelopes[name]
            if not env.only(value, decl.tolerance) and any(
                    decl.equal(m.log.trace(tid).value(name, st), value) for tid, st in s.members):
                out.append(s.id)
    return out


def _abstract_steps(f: Formula, states: Sequence[AbstractState]) -> np.ndarray:
    """Per step truth value of f over a sequence of abstract states"""
    if isinstance(f, Prim):
        if f.index.kind == IndexKind.CURRENT:
            return np.array([s.bits[f] for s in states], dtype=bool)
        pos = len(states) - 1 if f.index.kind == IndexKind.LAST else f.index.step
        return np.full(len(states), states[pos].bits[f])
    if isinstance(f, Const):
        return np.full(len(states), f.value)
    if isinstance(f, Not):
        return ~_abstract_steps(f.arg, states)
    parts = [_abstract_steps(a, states) for a in f.args] # type: ignore
    if isinstance(f, And):
        return np.logical_and.reduce(parts)
    return np.logical_or.reduce(parts)


def _compatible(a: Sequence[AbstractState], b: Sequence[AbstractState], names: Sequence[str],
                sig: Signature, end: int) -> bool:
    for i in range(end):
        if a[i].id == b[i].id:
            continue
        for name in names:
            if not a[i].envelopes[name].compatible(b[i].envelopes[name], sig.decl(name).tolerance):
                return False
    return True


def _definitely_equal(a: Sequence[AbstractState], b: Sequence[AbstractState], names: Sequence[str],
                      sig: Signature, end: int) -> bool:
    for i in range(end):
        for name in names:
            if not a[i].envelopes[name].definitely_equal(b[i].envelopes[name], sig.decl(name).tolerance):
                return False
    return True


def abstract_facts(m: AbstractModel, witness: Trace,
                   opts: CheckOptions = CheckOptions()) -> Iterator[TraceFacts]:
    """Fact rows of the distinct abstract traces relative to the image of the
    witness. Z equivalence is read as envelope compatibility and W equivalence
    as envelope equality, so a counterexample in the concrete log always has
    a counterexample row here."""
    sig = m.log.signature
    cause = m.candidate.formula
    min_len = required_length(cause, m.effect)
    upto = max_concrete_index(cause) if opts.equiv_prefix else None
    z, w = m.partition.ordered(sig)
    w_states = [m.states[i] for i in m.image(witness.id)]
    for tid, at in m.distinct_traces():
        if len(at) < min_len:
            continue
        states = [m.states[i] for i in at]
        if upto is None:
            ok_len = len(states) == len(w_states)
            end = len(states)
        else:
            ok_len = len(states) > upto and len(w_states) > upto
            end = upto + 1
        z_equiv = (not z) or (ok_len and _compatible(w_states, states, z, sig, end))
        w_equiv = (not w) or (ok_len and _definitely_equal(w_states, states, w, sig, end))
        yield TraceFacts(tid, _abstract_steps(cause, states), _abstract_steps(m.effect, states),
                         z_equiv, w_equiv)


def concrete_counterexample(m: AbstractModel, trace_id: str, witness: Trace,
                            opts: CheckOptions = CheckOptions()) -> Optional[Trace]:
    """First concrete trace mapped to the same abstract trace as trace_id that
    violates sufficiency for the witness; None means the abstract
    counterexample is spurious"""
    members = m.log.subset(m.concretize(trace_id))
    for facts in trace_facts(members, m.candidate, m.effect, witness, opts):
        if facts.violates_sufficiency(not m.partition.w):
            return m.log.trace(facts.trace_id)
    return None


def is_spurious(m: AbstractModel, trace_id: str, witness: Trace,
                opts: CheckOptions = CheckOptions()) -> bool:
    return concrete_counterexample(m, trace_id, witness, opts) is None
