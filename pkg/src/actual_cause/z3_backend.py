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
src/actual_cause/z3_backend.py - Constraint solver backend

Every fact row becomes a set of boolean unknowns (cause and effect per step,
Z and W equivalence, shared context) pinned to the row's values. A query is a
z3 optimization problem over these unknowns and two integer unknowns, the row
index and the anchor step of the until operator, minimizing the row index so
that the answer is the first qualifying row.

Created: Thu 15 Oct 2026 02:14:09 PM EDT
"""

import logging
from typing import Callable, Iterable, List, Optional

import z3  # type: ignore

from .backend import Backend, TraceFacts


class _RowVars:
    """Solver unknowns of one fact row"""

    def __init__(self, pos: int, row: TraceFacts):
        self.cause = [z3.Bool(f'cause_{pos}_{i}') for i in range(len(row.cause))]
        self.effect = [z3.Bool(f'effect_{pos}_{i}') for i in range(len(row.effect))]
        self.z_equiv = z3.Bool(f'z_equiv_{pos}')
        self.w_equiv = z3.Bool(f'w_equiv_{pos}')
        self.same_context = z3.Bool(f'same_context_{pos}')
        self.row = row

    def pinned(self) -> List:
        """Constraints fixing the unknowns to the row's values"""
        row = self.row
        out = [v == bool(b) for v, b in zip(self.cause, row.cause)]
        out += [v == bool(b) for v, b in zip(self.effect, row.effect)]
        out += [self.z_equiv == bool(row.z_equiv), self.w_equiv == bool(row.w_equiv),
                self.same_context == bool(row.same_context)]
        return out


def _not_before(effect: List) -> List:
    """Expression per step i: effect is false at every step before i"""
    out = [z3.BoolVal(True)]
    for e in effect[:-1]:
        out.append(z3.And(out[-1], z3.Not(e)))
    return out


def _eventually(effect: List) -> List:
    """Expression per step i: effect holds at some step from i on"""
    out = [effect[-1]]
    for e in reversed(effect[:-1]):
        out.append(z3.Or(e, out[-1]))
    return out[::-1]


class Z3Backend(Backend):
    """ Answers the causality queries with the z3 solver """

    name = 'z3'

    def __init__(self):
        self.queries = 0

    def _first(self, facts: Iterable[TraceFacts],
               encode: Callable[[_RowVars, z3.ArithRef], z3.BoolRef]) -> Optional[TraceFacts]:
        rows = [_RowVars(pos, row) for pos, row in enumerate(facts)]
        if not rows:
            return None
        idx = z3.Int('row')
        anchor = z3.Int('anchor')
        opt = z3.Optimize()
        for v in rows:
            opt.add(v.pinned())
        opt.add(z3.Or([z3.And(idx == pos, encode(v, anchor)) for pos, v in enumerate(rows)]))
        opt.minimize(idx)
        self.queries += 1
        if opt.check() != z3.sat:
            return None
        pos = opt.model()[idx].as_long()
        logging.debug(f'z3: first qualifying row {pos} of {len(rows)}')
        return rows[pos].row

    def find_witness(self, facts: Iterable[TraceFacts]) -> Optional[TraceFacts]:
        def encode(v: _RowVars, anchor):
            before, after = _not_before(v.effect), _eventually(v.effect)
            return z3.Or([z3.And(anchor == i, v.cause[i], before[i], after[i])
                          for i in range(len(v.cause))])
        return self._first(facts, encode)

    def find_counterfactual(self, facts: Iterable[TraceFacts]) -> Optional[TraceFacts]:
        def encode(v: _RowVars, anchor):
            return z3.And(z3.And([z3.And(z3.Not(c), z3.Not(e)) for c, e in zip(v.cause, v.effect)]),
                          z3.Or(z3.Not(v.z_equiv), z3.Not(v.w_equiv)),
                          v.same_context)
        return self._first(facts, encode)

    def find_counterexample(self, facts: Iterable[TraceFacts], w_empty: bool) -> Optional[TraceFacts]:
        def encode(v: _RowVars, anchor):
            before = _not_before(v.effect)
            reaches = z3.Or([z3.And(anchor == i, v.cause[i], before[i]) for i in range(len(v.cause))])
            return z3.And(v.z_equiv,
                          z3.Or(z3.BoolVal(w_empty), z3.Not(v.w_equiv)),
                          z3.Not(z3.Or(v.effect)),
                          reaches)
        return self._first(facts, encode)
