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
src/actual_cause/engine.py - Actual cause search

The abstraction modes alternate two loops. The outer loop looks for the
counterfactual of each candidate in a sample of the traces, doubling the
sample while the log has one the sample misses. The inner loop proves
sufficiency of the candidate on a state merged image of the traces that can
violate it, splitting merged states along spurious counterexamples.

Created: Fri 16 Oct 2026 02:27:45 PM EDT
"""

import logging
from dataclasses import dataclass, replace
from dataclasses_json import dataclass_json
from timeit import default_timer as timer
from typing import IO, Iterable, List, Optional, Tuple

import pandas as pd # type: ignore

from .abstraction import UnderApprox, AbstractModel
from .abstraction import NoSplittableState, under_approximate, refine_under
from .abstraction import over_approximate, refine_over
from .abstraction import map_intervention, mixed_states, split_states
from .abstraction import abstract_facts, concrete_counterexample
from .backend import Backend, DirectBackend
from .backend_factory import BackendFactory
from .base import UnitFraction
from .constants import Mode, NoCauseReason, Outcome, NO_CAUSE, INPUT_ERROR
from .engine_config import EngineConfig
from .formula import Formula, max_concrete_index, until_anchors
from .hp_checker import CauseCandidate, CheckOptions, derive_partition
from .hp_checker import check_ac1, check_ac2a, check_ac2b, enumerate_candidates
from .hp_checker import intervention_of, required_length, trace_facts
from .report import CauseReport, NoCause, SearchResult, SearchStats, Verification
from .trace_model import Trace, TraceLog, partition_by_context
from .util import CauseBaseException, UserReportError


class SearchTimeout(CauseBaseException):
    """Search deadline expired"""
    def __init__(self, timeout_ms: int, stats: Optional[SearchStats] = None):
        super().__init__(NO_CAUSE, f'Search timed out after {timeout_ms} ms')
        self.timeout_ms = timeout_ms
        self.stats = stats


class _InnerCapReached(Exception):
    pass


class Deadline:
    """Cooperative deadline, checked between candidates and refinements"""

    def __init__(self, timeout_ms: int, stats: Optional[SearchStats] = None):
        self.timeout_ms = timeout_ms
        self.stats = stats
        self.start = timer()

    def elapsed_ms(self) -> float:
        return (timer() - self.start) * 1000

    def check(self) -> None:
        if self.timeout_ms and self.elapsed_ms() > self.timeout_ms:
            raise SearchTimeout(self.timeout_ms, self.stats)


# Stages a candidate can reach, for the no-cause reason
_STAGE_REASON = {0: NoCauseReason.AC1_UNSAT,
                 1: NoCauseReason.AC2A_UNSAT,
                 2: NoCauseReason.AC2B_CEX}

_REASON_STAGE = {reason: stage for stage, reason in _STAGE_REASON.items()}

_STAGE_DETAIL = {0: 'no candidate has a witness trace',
                 1: 'no candidate with a witness has a counterfactual trace',
                 2: 'every candidate with a witness and a counterfactual has a counterexample'}


def verify_cause(log: TraceLog, cause: CauseCandidate, effect: Formula,
                 opts: CheckOptions = CheckOptions(),
                 witness: Optional[str] = None,
                 backend: Backend = DirectBackend()) -> Verification:
    """Check the three conditions for a cause on a concrete log.

    Arguments:
        witness: trace the cause is claimed for; the first witness in log
            order is used when not given
    """
    tau: Optional[Trace]
    if witness is not None:
        tau = log.trace(witness)
        row = next(trace_facts(log.subset([witness]), cause, effect), None)
        if row is None or not row.witnesses():
            tau = None
    else:
        tau = check_ac1(log, cause, effect, backend)
    if tau is None:
        return Verification(False, False, False)
    cf = check_ac2a(log, tau, cause, effect, opts, backend)
    cex = check_ac2b(log, tau, cause, effect, opts, backend)
    return Verification(True, cf is not None, cex is None, tau.id,
                        cf.id if cf else None, cex.id if cex else None)


def _in_scope(log: TraceLog, cause: CauseCandidate, effect: Formula) -> int:
    min_len = required_length(cause.formula, effect)
    return sum(1 for tr in log if len(tr) >= min_len)


def _search_full(log: TraceLog, effect: Formula, cfg: EngineConfig,
                 backend: Backend, stats: SearchStats, deadline: Deadline) -> SearchResult:
    """Candidate loop over the concrete log"""
    opts = cfg.check_options
    stage = 0
    stats.outer_iters += 1
    for cand in enumerate_candidates(log, effect, cfg.cause_vars, cfg.max_conjuncts):
        deadline.check()
        stats.candidates += 1
        tau = check_ac1(log, cand, effect, backend)
        if tau is None:
            continue
        stage = max(stage, 1)
        cf = check_ac2a(log, tau, cand, effect, opts, backend)
        if cf is None:
            logging.debug(f'{cand}: witness {tau.id}, no counterfactual')
            continue
        stage = max(stage, 2)
        cex = check_ac2b(log, tau, cand, effect, opts, backend)
        if cex is not None:
            logging.debug(f'{cand}: witness {tau.id}, counterfactual {cf.id}, counterexample {cex.id}')
            continue
        return CauseReport(cand, tau.id, cf.id, _in_scope(log, cand, effect),
                           cfg.mode, stats)
    return NoCause(_STAGE_REASON[stage], _STAGE_DETAIL[stage], cfg.mode, stats)


def _prove_sufficiency(log: TraceLog, cand: CauseCandidate, effect: Formula,
                       tau: Trace, cfg: EngineConfig, backend: Backend,
                       stats: SearchStats,
                       max_inner: int, deadline: Deadline) -> Tuple[bool, AbstractModel]:
    """Inner loop: returns (True, model) when sufficiency is proven on the
    abstraction, (False, model) when a genuine counterexample exists"""
    opts = cfg.check_options
    w_empty = not cand.partition.w
    start = timer()
    m = over_approximate(log, cfg.beta, cand, effect)
    iterations = 0

    def refined(new: AbstractModel) -> AbstractModel:
        nonlocal iterations
        if iterations >= max_inner:
            raise _InnerCapReached()
        iterations += 1
        stats.inner_iters += 1
        stats.abstraction.append({'before': len(m.states), 'after': len(new.states)})
        return new

    iv = intervention_of(cand)
    while map_intervention(iv, m) is None:
        m = refined(split_states(m, mixed_states(iv, m)))

    while True:
        deadline.check()
        row = backend.find_counterexample(abstract_facts(m, tau, opts), w_empty)
        if row is None:
            result = True
            break
        real = concrete_counterexample(m, row.trace_id, tau, opts)
        if real is not None:
            logging.debug(f'{cand}: genuine counterexample {real.id}')
            result = False
            break
        logging.debug(f'{cand}: spurious counterexample through trace {row.trace_id}')
        try:
            m = refined(refine_over(m, row.trace_id))
        except NoSplittableState:
            try:
                m = refined(refine_over(m, tau.id))
            except NoSplittableState:
                result = False
                break
    stats.abstract_states = len(m.states)
    end = timer()
    logging.debug(f'AC2(b) abstraction for {cand}: {iterations} refinements, {len(m.states)} states, {end - start:.2f} seconds')
    return result, m


def _sufficiency_scope(log: TraceLog, cand: CauseCandidate, effect: Formula,
                       tau: Trace, opts: CheckOptions) -> TraceLog:
    """Traces that can violate sufficiency for witness tau: they start in the
    same Z state as tau, can be Z equivalent to it by length, reach the
    cause and never show the effect. The witness is kept for its image."""
    sig = log.signature
    z, _ = cand.partition.ordered(sig)
    upto = max_concrete_index(cand.formula) if opts.equiv_prefix else None

    def may_match(tr: Trace) -> bool:
        if upto is None and len(tr) != len(tau):
            return False
        if upto is not None and len(tr) <= upto:
            return False
        return all(sig.decl(n).equal(tau.value(n, 0), tr.value(n, 0)) for n in z)

    near = log.subset(tr.id for tr in log if tr.id != tau.id and may_match(tr))
    keep = {row.trace_id for row in trace_facts(near, cand, effect)
            if not row.effect.any() and until_anchors(~row.effect, row.cause).any()}
    keep.add(tau.id)
    return log.subset(keep)


def _search_abs(log: TraceLog, effect: Formula, cfg: EngineConfig,
                backend: Backend, stats: SearchStats, deadline: Deadline) -> SearchResult:
    """Candidates are decided in enumeration order. The witness of a candidate
    is its first witness in the log; the counterfactual is looked for in the
    sample. A candidate without one in the sample is checked on the log: it is
    dropped when the log has none either, otherwise the sample is doubled and
    the same candidate tried again. Sufficiency is proven on an
    over-approximation of the traces that can violate it."""
    opts = cfg.check_options
    u: UnderApprox = under_approximate(log, cfg.alpha, cfg.seed)
    max_inner = cfg.max_inner_iters or log.total_states()
    candidates = enumerate_candidates(log, effect, cfg.cause_vars, cfg.max_conjuncts)
    stage = 0
    stats.outer_iters += 1
    rounds = 1
    stats.alpha_final = u.alpha
    logging.debug(f'Round {rounds}: alpha={u.alpha}, {len(u.selected)} of {len(log)} traces')
    for cand in candidates:
        deadline.check()
        stats.candidates += 1
        tau = check_ac1(log, cand, effect, backend)
        if tau is None:
            continue
        stage = max(stage, 1)
        while True:
            cf = check_ac2a(u.selected, tau, cand, effect, opts, backend)
            if cf is not None or len(u.selected) == len(log):
                break
            if check_ac2a(log, tau, cand, effect, opts, backend) is None:
                break
            if rounds >= cfg.max_outer_iters:
                return NoCause(NoCauseReason.CAPS,
                               f'{rounds} under-approximation rounds without a cause',
                               cfg.mode, stats, cand.partition)
            u = refine_under(u, log)
            stats.under_refinements += 1
            stats.outer_iters += 1
            rounds += 1
            stats.alpha_final = u.alpha
            logging.debug(f'Round {rounds}: alpha={u.alpha}, {len(u.selected)} of {len(log)} traces, {cand} has a counterfactual outside the sample')
            deadline.check()
        if cf is None:
            logging.debug(f'{cand}: witness {tau.id}, no counterfactual')
            continue
        stage = max(stage, 2)
        scope = _sufficiency_scope(log, cand, effect, tau, opts)
        try:
            proven, m = _prove_sufficiency(scope, cand, effect, tau, cfg, backend,
                                           stats, max_inner, deadline)
        except _InnerCapReached:
            return NoCause(NoCauseReason.CAPS,
                           f'{max_inner} over-approximation refinements for {cand} without a decision',
                           cfg.mode, stats, cand.partition)
        if proven:
            return CauseReport(cand, tau.id, cf.id, len(m.distinct_traces()),
                               cfg.mode, stats)
    return NoCause(_STAGE_REASON[stage], _STAGE_DETAIL[stage], cfg.mode, stats)


def find_actual_cause(log: TraceLog, effect: Formula, cfg: EngineConfig,
                      backend: Optional[Backend] = None,
                      verify: bool = True) -> SearchResult:
    """Search for an actual cause of effect in log.

    Arguments:
        log: concrete trace log
        effect: effect formula
        cfg: search configuration
        backend: query backend, by default the one the mode calls for
        verify: re-check a found cause on the concrete log

    Returns:
        CauseReport or NoCause

    Raises:
        UserReportError for an invalid configuration, SearchTimeout when the
        deadline expires
    """
    errors: List[str] = []
    cfg.validate(errors, log.signature)
    if errors:
        raise UserReportError(INPUT_ERROR, '\n'.join(errors))
    if not len(log):
        raise UserReportError(INPUT_ERROR, 'Trace log has no traces')
    if backend is None:
        backend = BackendFactory(cfg.mode)
    stats = SearchStats()
    deadline = Deadline(cfg.timeout_ms, stats)
    search = _search_abs if cfg.mode.uses_abstraction() else _search_full
    groups = partition_by_context(log) if cfg.partition_context else [log]
    partition = derive_partition(log.signature, cfg.cause_vars)

    result: SearchResult = NoCause(NoCauseReason.AC1_UNSAT, _STAGE_DETAIL[0], cfg.mode, stats)
    analyzed = log
    stage = 0
    for group in groups:
        if len(groups) > 1:
            logging.debug(f'Context group of {len(group)} traces, first {group.traces[0].id}')
        result = search(group, effect, cfg, backend, stats, deadline)
        analyzed = group
        if isinstance(result, CauseReport) or result.reason == NoCauseReason.CAPS:
            break
        stage = max(stage, _REASON_STAGE[result.reason])
    else:
        if len(groups) > 1:
            result = NoCause(_STAGE_REASON[stage],
                             f'{len(groups)} context groups, furthest: {_STAGE_DETAIL[stage]}',
                             cfg.mode, stats)

    stats.wall_ms = deadline.elapsed_ms()
    result.config = cfg.asdict()
    if isinstance(result, NoCause):
        result.partition = partition
        logging.info(f'No cause ({result.reason}): {result.detail}')
        return result
    if verify:
        result.verification = verify_cause(analyzed, result.cause, effect,
                                           cfg.check_options, result.witness)
        if not result.verification.ok:
            logging.error(f'Cause {result.cause} failed {result.verification.failing()} on the concrete log')
    logging.info(f'Cause {result.cause}: witness {result.witness}, counterfactual {result.counterfactual}')
    return result


@dataclass_json
@dataclass
class BenchRow:
    """One benchmark cell"""
    size: int
    mode: str
    alpha: float
    wall_ms: float
    refinements: int
    outcome: str


BENCH_COLUMNS = ['size', 'mode', 'alpha', 'wall_ms', 'refinements', 'outcome']


def bench_modes(log: TraceLog, effect: Formula, cfg: EngineConfig,
                sizes: Iterable[int], modes: Optional[Iterable[Mode]] = None,
                alphas: Optional[Iterable[float]] = None) -> List[BenchRow]:
    """Time the search on the first N traces of log for every N in sizes,
    every mode and, for the abstraction modes, every alpha. Searches that
    exceed cfg.timeout_ms are reported with outcome timeout."""
    sizes = list(sizes)
    for size in sizes:
        if size < 1 or size > len(log):
            raise UserReportError(INPUT_ERROR, f'Benchmark size {size} is not between 1 and the number of traces ({len(log)})')
    modes = list(modes) if modes else [cfg.mode]
    alpha_grid = list(alphas) if alphas else [float(cfg.alpha)]
    rows = []
    for size in sizes:
        sub = log.prefix(size)
        for mode in modes:
            backend = BackendFactory(mode)
            for alpha in (alpha_grid if mode.uses_abstraction() else [1.0]):
                run_cfg = replace(cfg, mode=mode, alpha=UnitFraction(alpha))
                start = timer()
                try:
                    result = find_actual_cause(sub, effect, run_cfg, backend, verify=False)
                    outcome = Outcome.CAUSE if isinstance(result, CauseReport) else Outcome.NO_CAUSE
                    refinements = result.stats.refinements
                except SearchTimeout as err:
                    outcome = Outcome.TIMEOUT
                    refinements = err.stats.refinements if err.stats else 0
                wall_ms = (timer() - start) * 1000
                logging.debug(f'bench size={size} mode={mode} alpha={alpha}: {outcome} in {wall_ms:.1f} ms')
                rows.append(BenchRow(size, mode.value, alpha, round(wall_ms, 3), refinements, outcome.value))
    return rows


def write_bench_csv(rows: List[BenchRow], stream: IO) -> None:
    """Write benchmark rows as CSV with a header line"""
    df = pd.DataFrame([r.to_dict() for r in rows], columns=BENCH_COLUMNS) # type: ignore
    df.to_csv(stream, index=False, lineterminator='\n')
