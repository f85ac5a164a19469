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
tests/utils.py - Utility functions for testing

Created: Sun 18 Oct 2026 01:15:40 PM EDT

* load_fig4 reads the three trace mountain car fixture.
* random_log builds small seeded logs over a signature with discrete and
  continuous variables, so that equivalences and merges actually happen.
* brute_ac1, brute_ac2a and brute_ac2b expand the causality conditions as
  literal loops over traces and steps; they are the oracles the checker is
  compared with.
* load_app imports the bin/actual-cause.py entry script.
"""

import importlib.util
import os
from typing import List, Optional, Sequence

import numpy as np

from actual_cause.constants import VarKind
from actual_cause.formula import Formula, eval_at
from actual_cause.hp_checker import CauseCandidate, CheckOptions, required_length
from actual_cause.trace_model import Domain, Signature, Trace, TraceLog, VariableDecl
from actual_cause.trace_model import load_signature, load_trace_log

TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
FIG4_DIR = os.path.join(TESTS_DIR, 'engine', 'data', 'fig4')
FIG4_LOG = os.path.join(FIG4_DIR, 'log.csv')
FIG4_SIGNATURE = os.path.join(FIG4_DIR, 'signature.json')
APP = os.path.join(os.path.dirname(TESTS_DIR), 'bin', 'actual-cause.py')

# the failure of the mountain car: the flag was not reached
FAIL = 'pos(n) != 0.6'


def load_fig4():
    """Signature and trace log of the three trace fixture"""
    sig = load_signature(FIG4_SIGNATURE)
    return sig, load_trace_log(FIG4_LOG, sig)


def load_app():
    """The entry script as a module"""
    spec = importlib.util.spec_from_file_location('actual_cause_app', APP)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module) # type: ignore
    return module


SMALL_SIGNATURE = Signature(
    (VariableDecl('a', VarKind.ENDOGENOUS, Domain(values=(0, 1))),
     VariableDecl('b', VarKind.ENDOGENOUS, Domain(values=(0, 1, 2))),
     VariableDecl('c', VarKind.ENDOGENOUS, Domain(lo=0.0, hi=1.0), 1e-6),
     VariableDecl('u', VarKind.EXOGENOUS, Domain(values=(0, 1)))),
    (('a', 'b'), ('b', 'c'), ('u', 'a')))

C_VALUES = (0.0, 0.25, 0.5, 1.0)


def random_trace(rng: np.random.Generator, trace_id: str, max_len: int) -> Trace:
    n = int(rng.integers(1, max_len + 1))
    u = int(rng.integers(0, 2))
    return Trace(trace_id, {
        'a': tuple(int(v) for v in rng.integers(0, 2, n)),
        'b': tuple(int(v) for v in rng.integers(0, 3, n)),
        'c': tuple(float(C_VALUES[i]) for i in rng.integers(0, len(C_VALUES), n)),
        'u': (u,) * n})


def random_log(seed: int, n_traces: int = 10, max_len: int = 6,
               duplicates: bool = True) -> TraceLog:
    """Seeded log over SMALL_SIGNATURE; with duplicates some traces are
    copies of earlier ones under a new id"""
    rng = np.random.default_rng(seed)
    traces: List[Trace] = []
    for i in range(n_traces):
        if duplicates and traces and rng.random() < 0.3:
            src = traces[int(rng.integers(0, len(traces)))]
            traces.append(Trace(f't{i}', dict(src.columns)))
        else:
            traces.append(random_trace(rng, f't{i}', max_len))
    return TraceLog(SMALL_SIGNATURE, tuple(traces))


def _equiv(a: Trace, b: Trace, names: Sequence[str], sig: Signature,
           upto: Optional[int]) -> bool:
    if not names:
        return True
    if upto is None:
        if len(a) != len(b):
            return False
        steps = range(len(a))
    else:
        if len(a) <= upto or len(b) <= upto:
            return False
        steps = range(upto + 1)
    for name in names:
        decl = sig.decl(name)
        for i in steps:
            if not decl.equal(a.value(name, i), b.value(name, i)):
                return False
    return True


def _in_scope(log: TraceLog, c: CauseCandidate, effect: Formula) -> List[Trace]:
    n = required_length(c.formula, effect)
    return [tr for tr in log if len(tr) >= n]


def _upto(c: CauseCandidate, opts: CheckOptions) -> Optional[int]:
    if not opts.equiv_prefix:
        return None
    return max(p.index.step for p in _prims(c.formula))


def _prims(f):
    return f.args if hasattr(f, 'args') else (f,)


def brute_ac1(log: TraceLog, c: CauseCandidate, effect: Formula) -> Optional[str]:
    for tr in _in_scope(log, c, effect):
        for i in range(len(tr)):
            if any(eval_at(effect, tr, k) for k in range(i)):
                break
            if eval_at(c.formula, tr, i) and any(eval_at(effect, tr, j) for j in range(i, len(tr))):
                return tr.id
    return None


def brute_ac2a(log: TraceLog, tau: Trace, c: CauseCandidate, effect: Formula,
               opts: CheckOptions = CheckOptions()) -> Optional[str]:
    sig = log.signature
    z, w = c.partition.ordered(sig)
    upto = _upto(c, opts)
    for tr in _in_scope(log, c, effect):
        if any(eval_at(c.formula, tr, i) or eval_at(effect, tr, i) for i in range(len(tr))):
            continue
        if _equiv(tau, tr, z, sig, upto) and _equiv(tau, tr, w, sig, upto):
            continue
        if opts.same_context and any(tau.value(n, 0) != tr.value(n, 0) for n in sig.exogenous()):
            continue
        return tr.id
    return None


def brute_ac2b(log: TraceLog, tau: Trace, c: CauseCandidate, effect: Formula,
               opts: CheckOptions = CheckOptions()) -> Optional[str]:
    """Id of the first trace violating sufficiency, None when it holds"""
    sig = log.signature
    z, w = c.partition.ordered(sig)
    upto = _upto(c, opts)
    for tr in _in_scope(log, c, effect):
        if not _equiv(tau, tr, z, sig, upto):
            continue
        if w and _equiv(tau, tr, w, sig, upto):
            continue
        reaches = False
        for i in range(len(tr)):
            if eval_at(c.formula, tr, i):
                reaches = True
                break
            if eval_at(effect, tr, i):
                break
        if reaches and not any(eval_at(effect, tr, i) for i in range(len(tr))):
            return tr.id
    return None
