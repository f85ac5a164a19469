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
src/actual_cause/formula.py - Causal formula language: parsing, printing and
evaluation over finite traces

Grammar (whitespace insensitive):

    formula := or
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '!' unary | '(' formula ')' | 'true' | 'false' | prim
    prim    := IDENT '(' (INT | 'n' | '*') ')' CMP VALUE
    CMP     := '=' | '==' | '!=' | '<' | '<=' | '>' | '>='

VALUE is a number, or a bare word / quoted string for discrete variables with
string tokens.

Created: Tue 13 Oct 2026 10:02:47 AM EDT
"""

import operator
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence
from typing import Tuple, Union

import numpy as np

from .constants import INPUT_ERROR
from .trace_model import Signature, Trace, Value, TraceModelError
from .util import UserReportError


class FormulaError(UserReportError):
    """Semantic problem with a formula or with its evaluation"""
    def __init__(self, message: str):
        super().__init__(INPUT_ERROR, message)


class FormulaSyntaxError(FormulaError):
    """Formula text does not follow the grammar. The message shows the text
    with a caret under the offending position."""
    def __init__(self, message: str, text: str, position: int):
        self.position = position
        self.text = text
        super().__init__(f'Formula syntax error at position {position}: {message}\n'
                         f'    {text}\n    {" " * position}^')


class Cmp(Enum):
    """Comparators of primitive events"""
    EQ = '='
    NE = '!='
    LT = '<'
    LE = '<='
    GT = '>'
    GE = '>='

    def __str__(self):
        return self.value

    @property
    def is_ordering(self) -> bool:
        return self not in (Cmp.EQ, Cmp.NE)


CMP_ALIASES = {'==': Cmp.EQ, '≠': Cmp.NE, '≤': Cmp.LE, '≥': Cmp.GE}

_ORDER_OPS: Dict[Cmp, Callable] = {
    Cmp.LT: operator.lt,
    Cmp.LE: operator.le,
    Cmp.GT: operator.gt,
    Cmp.GE: operator.ge,
}


class IndexKind(Enum):
    CONCRETE = 'concrete'
    LAST = 'n'
    CURRENT = '*'


@dataclass(frozen=True)
class TimeIndex:
    """A concrete step, the last step of the trace (n) or the step under
    temporal evaluation (*)"""
    kind: IndexKind
    step: int = 0

    def __str__(self):
        if self.kind == IndexKind.CONCRETE:
            return str(self.step)
        return self.kind.value

    def resolve(self, tr: Trace, current: Optional[int]) -> int:
        """Step this index denotes in tr"""
        if self.kind == IndexKind.LAST:
            return tr.last
        if self.kind == IndexKind.CURRENT:
            if current is None:
                raise FormulaError('Index * used outside of a temporal operator')
            return current
        if self.step >= len(tr):
            raise FormulaError(f'Index {self.step} is out of range for trace "{tr.id}" of length {len(tr)}')
        return self.step


LAST = TimeIndex(IndexKind.LAST)
CURRENT = TimeIndex(IndexKind.CURRENT)


def at(step: int) -> TimeIndex:
    return TimeIndex(IndexKind.CONCRETE, step)


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Prim:
    """Primitive event: variable(index) cmp value. discrete and tolerance are
    copied from the signature when the event is resolved."""
    variable: str
    index: TimeIndex
    cmp: Cmp
    value: Value
    discrete: bool = False
    tolerance: float = 0.0


@dataclass(frozen=True)
class Not:
    arg: 'Formula'


@dataclass(frozen=True)
class And:
    args: Tuple['Formula', ...]


@dataclass(frozen=True)
class Or:
    args: Tuple['Formula', ...]


Formula = Union[Const, Prim, Not, And, Or]

TRUE = Const(True)
FALSE = Const(False)

_LITERALS = {'true': TRUE, 'false': FALSE}


# Construction helpers

def negate(f: Formula) -> Formula:
    if isinstance(f, Not):
        return f.arg
    if isinstance(f, Const):
        return Const(not f.value)
    return Not(f)


def conjunction(fs: Iterable[Formula]) -> Formula:
    """Flattened conjunction; TRUE for no arguments"""
    args: List[Formula] = []
    for f in fs:
        args.extend(f.args if isinstance(f, And) else (f,))
    if not args:
        return TRUE
    if len(args) == 1:
        return args[0]
    return And(tuple(args))


def primitive(sig: Signature, variable: str, index: TimeIndex, cmp: Cmp,
              value: Value) -> Prim:
    """Build a primitive event resolved against sig"""
    decl = _lookup(sig, variable)
    value = _coerce_value(decl.is_discrete, decl.domain.values, value, variable)
    if decl.is_discrete and cmp.is_ordering:
        raise FormulaError(f'Comparator {cmp} is not allowed for discrete variable "{variable}"')
    return Prim(variable, index, cmp, value, decl.is_discrete, decl.tolerance)


def _lookup(sig: Signature, variable: str):
    try:
        return sig.decl(variable)
    except TraceModelError:
        raise FormulaError(f'Unknown variable "{variable}"')


def _coerce_value(discrete: bool, tokens: Optional[Sequence[Value]], value: Value,
                  variable: str) -> Value:
    if not discrete:
        if isinstance(value, str):
            raise FormulaError(f'Continuous variable "{variable}" must be compared with a number, got "{value}"')
        return float(value)
    # discrete: match one of the declared tokens
    for token in tokens or ():
        if token == value or (isinstance(token, int) and isinstance(value, float)
                              and value.is_integer() and token == int(value)):
            return token
    raise FormulaError(f'Value "{value}" is not in the domain of discrete variable "{variable}" {{{", ".join(str(t) for t in tokens or ())}}}')


# Inspection

def primitives(f: Formula) -> List[Prim]:
    """Primitive events of f, left to right, without duplicates"""
    out: List[Prim] = []

    def walk(g: Formula):
        if isinstance(g, Prim):
            if g not in out:
                out.append(g)
        elif isinstance(g, Not):
            walk(g.arg)
        elif isinstance(g, (And, Or)):
            for a in g.args:
                walk(a)

    walk(f)
    return out


def variables(f: Formula) -> FrozenSet[str]:
    return frozenset(p.variable for p in primitives(f))


def is_step_independent(f: Formula) -> bool:
    """True when f has no * index"""
    return all(p.index.kind != IndexKind.CURRENT for p in primitives(f))


def max_concrete_index(f: Formula) -> int:
    """Largest concrete index in f, -1 if there is none"""
    return max((p.index.step for p in primitives(f)
                if p.index.kind == IndexKind.CONCRETE), default=-1)


# Parsing

_TOKEN_RE = re.compile(r'''
    (?P<ws>\s+)
  | (?P<number>[-+]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"]*"|'[^']*')
  | (?P<cmp><=|>=|!=|==|=|<|>|≠|≤|≥)
  | (?P<op>[!&|()*])
''', re.VERBOSE)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f'unexpected character "{text[pos]}"', text, pos)
        if m.lastgroup != 'ws':
            kind = m.lastgroup
            tokens.append(_Token(kind if kind != 'op' else m.group(), m.group(), pos)) # type: ignore
        pos = m.end()
    tokens.append(_Token('end', '', len(text)))
    return tokens


class _Parser:
    """Recursive descent parser over the token list"""

    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = 'end of formula' if tok.kind == 'end' else f'"{tok.text}"'
            raise FormulaSyntaxError(f'expected {what}, found {found}', self.text, tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.parse_or()
        self.take('end', 'end of formula')
        return f

    def parse_or(self) -> Formula:
        args = [self.parse_and()]
        while self.peek().kind == '|':
            self.i += 1
            args.append(self.parse_and())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def parse_and(self) -> Formula:
        args = [self.parse_unary()]
        while self.peek().kind == '&':
            self.i += 1
            args.append(self.parse_unary())
        return args[0] if len(args) == 1 else And(tuple(args))

    def parse_unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == '!':
            self.i += 1
            return Not(self.parse_unary())
        if tok.kind == '(':
            self.i += 1
            f = self.parse_or()
            self.take(')', '")"')
            return f
        if tok.kind == 'ident' and tok.text in _LITERALS and self.tokens[self.i + 1].kind != '(':
            self.i += 1
            return _LITERALS[tok.text]
        return self.parse_prim()

    def parse_prim(self) -> Prim:
        name = self.take('ident', 'a variable name')
        if name.text not in self.sig:
            raise FormulaSyntaxError(f'unknown variable "{name.text}"', self.text, name.pos)
        self.take('(', '"("')
        tok = self.peek()
        if tok.kind == 'number' and re.fullmatch(r'\d+', tok.text):
            index = at(int(tok.text))
        elif tok.kind == 'ident' and tok.text == 'n':
            index = LAST
        elif tok.kind == '*':
            index = CURRENT
        else:
            raise FormulaSyntaxError('expected a step index (integer, n or *)', self.text, tok.pos)
        self.i += 1
        self.take(')', '")"')
        cmp_tok = self.take('cmp', 'a comparator')
        cmp = CMP_ALIASES.get(cmp_tok.text) or Cmp(cmp_tok.text)
        val_tok = self.peek()
        value: Value
        if val_tok.kind == 'number':
            value = float(val_tok.text)
            if re.fullmatch(r'[-+]?\d+', val_tok.text):
                value = int(val_tok.text)
        elif val_tok.kind == 'ident':
            value = val_tok.text
        elif val_tok.kind == 'string':
            value = val_tok.text[1:-1]
        else:
            raise FormulaSyntaxError('expected a value', self.text, val_tok.pos)
        self.i += 1
        decl = self.sig.decl(name.text)
        if decl.is_discrete and cmp.is_ordering:
            raise FormulaSyntaxError(f'comparator {cmp} is not allowed for discrete variable "{name.text}"',
                                     self.text, cmp_tok.pos)
        if not decl.is_discrete and isinstance(value, str):
            raise FormulaSyntaxError(f'continuous variable "{name.text}" must be compared with a number',
                                     self.text, val_tok.pos)
        return primitive(self.sig, name.text, index, cmp, value)


def parse_formula(text: str, sig: Signature) -> Formula:
    """Parse formula text and resolve its variables against sig.

    Raises:
        FormulaSyntaxError with the position of the problem
    """
    return _Parser(text, sig).parse()


# Printing

def _format_value(value: Value, discrete: bool) -> str:
    if isinstance(value, str):
        return value if value.isidentifier() else f'"{value}"'
    if isinstance(value, float):
        if value.is_integer() and abs(value) < 1e15:
            return str(int(value))
        return repr(value)
    return str(value)


def format_formula(f: Formula) -> str:
    """Canonical text of f; parse_formula(format_formula(f)) == f"""
    return _format(f, 0)


def _format(f: Formula, parent_prec: int) -> str:
    # precedence: or 1, and 2, not/prim 3
    if isinstance(f, Prim):
        return f'{f.variable}({f.index}) {f.cmp} {_format_value(f.value, f.discrete)}'
    if isinstance(f, Const):
        return 'true' if f.value else 'false'
    if isinstance(f, Not):
        return '!' + _format(f.arg, 3)
    prec, sep = (2, ' & ') if isinstance(f, And) else (1, ' | ')
    text = sep.join(_format(a, prec + 1 if isinstance(a, type(f)) else prec) for a in f.args)
    return f'({text})' if prec < parent_prec else text


# Evaluation

def _prim_holds(p: Prim, value: Value) -> bool:
    if p.cmp == Cmp.EQ or p.cmp == Cmp.NE:
        if p.discrete:
            equal = value == p.value
        else:
            equal = abs(float(value) - p.value) <= p.tolerance # type: ignore
        return equal if p.cmp == Cmp.EQ else not equal
    return _ORDER_OPS[p.cmp](value, p.value)


def eval_at(f: Formula, tr: Trace, step: Optional[int]) -> bool:
    """Truth value of f in tr with * bound to step and n to the last step.

    Raises:
        FormulaError if a concrete index is out of range, or if f uses * and
        step is None
    """
    if step is not None and not 0 <= step < len(tr):
        raise FormulaError(f'Step {step} is out of range for trace "{tr.id}" of length {len(tr)}')
    if isinstance(f, Prim):
        return _prim_holds(f, tr.value(f.variable, f.index.resolve(tr, step)))
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not eval_at(f.arg, tr, step)
    if isinstance(f, And):
        return all(eval_at(a, tr, step) for a in f.args)
    return any(eval_at(a, tr, step) for a in f.args)


def eval_trace(f: Formula, tr: Trace) -> bool:
    """Truth value of a step independent formula"""
    return eval_at(f, tr, None)


def _prim_steps(p: Prim, tr: Trace, local: bool) -> np.ndarray:
    """Vector of p's truth values, one per step of tr"""
    n = len(tr)
    if local or p.index.kind == IndexKind.CURRENT:
        if p.discrete:
            column = np.asarray(tr.columns[p.variable], dtype=object)
            bits = column == p.value
        else:
            column = tr.array(p.variable)
            if p.cmp.is_ordering:
                return _ORDER_OPS[p.cmp](column, p.value)
            bits = np.abs(column - p.value) <= p.tolerance
        bits = np.asarray(bits, dtype=bool)
        return bits if p.cmp == Cmp.EQ else ~bits
    return np.full(n, _prim_holds(p, tr.value(p.variable, p.index.resolve(tr, None))))


def eval_steps(f: Formula, tr: Trace, local: bool = False) -> np.ndarray:
    """Boolean vector of f evaluated at every step of tr.

    Arguments:
        f: formula
        tr: trace
        local: evaluate every primitive event on the state at hand, ignoring
            its index (state predicate reading)
    """
    if isinstance(f, Prim):
        return _prim_steps(f, tr, local)
    if isinstance(f, Const):
        return np.full(len(tr), f.value)
    if isinstance(f, Not):
        return ~eval_steps(f.arg, tr, local)
    parts = [eval_steps(a, tr, local) for a in f.args]
    if isinstance(f, And):
        return np.logical_and.reduce(parts)
    return np.logical_or.reduce(parts)


def holds_always(f: Formula, tr: Trace) -> bool:
    """□f: f holds at every step of tr"""
    return bool(np.all(eval_steps(f, tr)))


def holds_eventually(f: Formula, tr: Trace) -> bool:
    """◇f: f holds at some step of tr"""
    return bool(np.any(eval_steps(f, tr)))


def until_anchors(p_bits: np.ndarray, q_bits: np.ndarray) -> np.ndarray:
    """Steps i where q holds and p holds at every j < i"""
    # prefix[i] is True iff p holds at all j < i
    prefix = np.concatenate(([True], np.logical_and.accumulate(p_bits)[:-1]))
    return q_bits & prefix


def holds_until(p: Formula, q: Formula, tr: Trace) -> bool:
    """p U q: q holds at some step i and p holds at every step before i"""
    return bool(np.any(until_anchors(eval_steps(p, tr), eval_steps(q, tr))))


def eventually_from(bits: np.ndarray) -> np.ndarray:
    """suffix[i] is True iff bits holds at some j >= i"""
    return np.logical_or.accumulate(bits[::-1])[::-1]
