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
src/actual_cause/trace_model.py - Causal signature, trace logs and state level
primitives

The signature sidecar is a JSON document:

    {
      "format_version": 1,
      "variables": [
        {"name": "pos", "kind": "endogenous",
         "domain": {"lo": -1.2, "hi": 0.6}, "tolerance": 1e-6},
        {"name": "action", "kind": "endogenous",
         "domain": {"values": [-1, 0, 1]}}
      ],
      "edges": [["action", "vel"], ["vel", "pos"], ["pos", "vel"]],
      "instant_edges": []
    }

"edges" are influences from one step to the next and may form cycles
(pos(t) -> vel(t+1) -> pos(t+2)); "instant_edges" act within a step and must
be acyclic. Both count for causal path (Z) membership.

The trace log is a CSV file with the header trace_id,step,<var1>,...,<varK>,
optionally preceded by a "# format_version: 1" line.

Created: Mon 12 Oct 2026 11:20:31 AM EDT
"""

import gzip
import io
import logging
import math
import zlib
from dataclasses import dataclass, field
from dataclasses_json import dataclass_json, Undefined, config
from json.decoder import JSONDecodeError
from marshmallow.exceptions import ValidationError
from typing import Any, Dict, IO, Iterable, Iterator, List, Mapping, Optional
from typing import Sequence, Set, Tuple, Union

import numpy as np
import pandas as pd # type: ignore

from .constants import VarKind, IngestionMode, INPUT_ERROR
from .constants import SIDECAR_FORMAT_VERSION, CSV_TRACE_ID, CSV_STEP
from .constants import CAUSE_DFLT_TOLERANCE
from .filehelper import open_for_read, open_for_write
from .util import UserReportError

Value = Union[float, int, str]


class TraceModelError(UserReportError):
    """Problems with signatures, trace logs or state level requests"""
    def __init__(self, message: str):
        super().__init__(INPUT_ERROR, message)


class SignatureError(TraceModelError):
    """Invalid signature sidecar"""
    pass


class TraceLogError(TraceModelError):
    """Invalid trace log"""
    pass


# Sidecar document, as stored on disk

@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class DomainDoc:
    """Domain of a variable: an interval or a finite value set"""
    lo: Optional[float] = field(default=None, metadata=config(exclude=lambda x: x is None)) # type: ignore
    hi: Optional[float] = field(default=None, metadata=config(exclude=lambda x: x is None)) # type: ignore
    values: Optional[List[Any]] = field(default=None, metadata=config(exclude=lambda x: x is None)) # type: ignore


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class VariableDoc:
    """Variable declaration as written in the sidecar"""
    name: str
    kind: str
    domain: DomainDoc
    tolerance: Optional[float] = field(default=None, metadata=config(exclude=lambda x: x is None)) # type: ignore


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class SignatureDoc:
    """Signature sidecar document"""
    format_version: int
    variables: List[VariableDoc]
    edges: List[List[str]] = field(default_factory=list)
    instant_edges: List[List[str]] = field(default_factory=list)


# Domain types

@dataclass(frozen=True)
class Domain:
    """Continuous interval [lo, hi] or finite set of discrete tokens"""
    lo: Optional[float] = None
    hi: Optional[float] = None
    values: Optional[Tuple[Value, ...]] = None

    @property
    def is_discrete(self) -> bool:
        return self.values is not None

    @property
    def width(self) -> float:
        """Interval width, 0 for discrete domains"""
        if self.is_discrete:
            return 0.0
        return float(self.hi) - float(self.lo) # type: ignore

    def contains(self, value: Value) -> bool:
        if self.values is not None:
            return value in self.values
        return self.lo <= value <= self.hi # type: ignore

    def clamp(self, value: float) -> float:
        return min(max(value, self.lo), self.hi) # type: ignore

    def describe(self) -> str:
        if self.values is not None:
            return '{' + ', '.join(str(v) for v in self.values) + '}'
        return f'[{self.lo}, {self.hi}]'


@dataclass(frozen=True)
class VariableDecl:
    """Declaration of a single variable"""
    name: str
    kind: VarKind
    domain: Domain
    tolerance: float = 0.0

    @property
    def is_discrete(self) -> bool:
        return self.domain.is_discrete

    @property
    def is_exogenous(self) -> bool:
        return self.kind == VarKind.EXOGENOUS

    def equal(self, a: Value, b: Value) -> bool:
        """Value equality: exact for discrete variables, within tolerance for
        continuous ones"""
        if self.is_discrete:
            return a == b
        return abs(a - b) <= self.tolerance # type: ignore


@dataclass(frozen=True)
class Signature:
    """Variables of a causal model and their dependency edges.

    Attributes:
        variables: Variable declarations, in column order
        dependency_edges: (parent, child) pairs, from one step to the next
        instant_edges: (parent, child) pairs within a step, acyclic
    """
    variables: Tuple[VariableDecl, ...]
    dependency_edges: Tuple[Tuple[str, str], ...] = ()
    instant_edges: Tuple[Tuple[str, str], ...] = ()
    _by_name: Dict[str, VariableDecl] = field(default_factory=dict, init=False,
                                              repr=False, compare=False)

    def __post_init__(self):
        if not self.variables:
            raise SignatureError('Signature error: empty-signature, at least one variable must be declared')
        for decl in self.variables:
            if decl.name in self._by_name:
                raise SignatureError(f'Signature error: duplicate-name "{decl.name}"')
            self._by_name[decl.name] = decl
        for section, edges in (('edges', self.dependency_edges),
                               ('instant_edges', self.instant_edges)):
            for parent, child in edges:
                for name in (parent, child):
                    if name not in self._by_name:
                        raise SignatureError(f'Signature error: {section} entry [{parent}, {child}] references undeclared variable "{name}"')
                if self._by_name[child].is_exogenous:
                    raise SignatureError(f'Signature error: {section} entry [{parent}, {child}] gives a parent to exogenous variable "{child}"')
        cycle = _find_cycle([v.name for v in self.variables], self.instant_edges)
        if cycle:
            raise SignatureError(f'Signature error: cyclic-dependency {" -> ".join(cycle)}')

    def names(self) -> List[str]:
        return [v.name for v in self.variables]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def decl(self, name: str) -> VariableDecl:
        try:
            return self._by_name[name]
        except KeyError:
            raise TraceModelError(f'Unknown variable "{name}"')

    def endogenous(self) -> List[str]:
        return [v.name for v in self.variables if not v.is_exogenous]

    def exogenous(self) -> List[str]:
        return [v.name for v in self.variables if v.is_exogenous]

    def descendants(self, names: Iterable[str]) -> Set[str]:
        """All variables reachable from names through dependency edges, the
        names themselves excluded unless they lie on a cycle"""
        children: Dict[str, List[str]] = {}
        for parent, child in self.dependency_edges + self.instant_edges:
            children.setdefault(parent, []).append(child)
        seen: Set[str] = set()
        stack = list(names)
        while stack:
            for child in children.get(stack.pop(), []):
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return seen


def _find_cycle(nodes: List[str], edges: Sequence[Tuple[str, str]]) -> List[str]:
    """Return a cycle in the directed graph as a list of nodes, or an empty
    list if the graph is acyclic"""
    children: Dict[str, List[str]] = {n: [] for n in nodes}
    for parent, child in edges:
        children[parent].append(child)
    WHITE, GREY, BLACK = 0, 1, 2
    color = {n: WHITE for n in nodes}
    path: List[str] = []

    def visit(node: str) -> List[str]:
        color[node] = GREY
        path.append(node)
        for child in children[node]:
            if color[child] == GREY:
                return path[path.index(child):] + [child]
            if color[child] == WHITE:
                found = visit(child)
                if found:
                    return found
        path.pop()
        color[node] = BLACK
        return []

    for node in nodes:
        if color[node] == WHITE:
            found = visit(node)
            if found:
                return found
    return []


@dataclass(frozen=True)
class State:
    """Valuation of all signature variables at one step"""
    values: Mapping[str, Value]

    def __getitem__(self, name: str) -> Value:
        return self.values[name]

    def __hash__(self):
        return hash(tuple(sorted(self.values.items(), key=lambda kv: kv[0])))


@dataclass(frozen=True)
class Trace:
    """A finite execution, stored column-wise: one tuple of values per
    variable, all of the same length"""
    id: str
    columns: Mapping[str, Tuple[Value, ...]]
    _arrays: Dict[str, np.ndarray] = field(default_factory=dict, init=False,
                                           repr=False, compare=False)

    def __post_init__(self):
        lengths = {len(col) for col in self.columns.values()}
        if len(lengths) != 1:
            raise TraceLogError(f'Trace "{self.id}" has columns of different lengths')
        if lengths.pop() < 1:
            raise TraceLogError(f'Trace "{self.id}" is empty')

    @classmethod
    def from_states(cls, trace_id: str, states: Sequence[State]) -> 'Trace':
        """Build a trace from a sequence of states"""
        if not states:
            raise TraceLogError(f'Trace "{trace_id}" is empty')
        names = list(states[0].values.keys())
        return cls(str(trace_id), {n: tuple(s[n] for s in states) for n in names})

    def __len__(self) -> int:
        return len(next(iter(self.columns.values())))

    @property
    def last(self) -> int:
        return len(self) - 1

    def value(self, name: str, step: int) -> Value:
        return self.columns[name][step]

    def state(self, step: int) -> State:
        return State({n: col[step] for n, col in self.columns.items()})

    @property
    def states(self) -> Tuple[State, ...]:
        return tuple(self.state(i) for i in range(len(self)))

    def array(self, name: str) -> np.ndarray:
        """Column as a float array, cached; continuous variables only"""
        arr = self._arrays.get(name)
        if arr is None:
            arr = np.asarray(self.columns[name], dtype=float)
            self._arrays[name] = arr
        return arr


@dataclass(frozen=True)
class TraceLog:
    """Ordered collection of traces sharing one signature; the list order is
    the canonical order for every first-in-order decision"""
    signature: Signature
    traces: Tuple[Trace, ...]
    _by_id: Dict[str, int] = field(default_factory=dict, init=False,
                                   repr=False, compare=False)

    def __post_init__(self):
        names = set(self.signature.names())
        for pos, tr in enumerate(self.traces):
            if tr.id in self._by_id:
                raise TraceLogError(f'Duplicate trace id "{tr.id}"')
            if set(tr.columns.keys()) != names:
                raise TraceLogError(f'Trace "{tr.id}" variables {sorted(tr.columns.keys())} do not match the signature {sorted(names)}')
            self._by_id[tr.id] = pos

    def __len__(self) -> int:
        return len(self.traces)

    def __iter__(self) -> Iterator[Trace]:
        return iter(self.traces)

    def ids(self) -> List[str]:
        return [tr.id for tr in self.traces]

    def trace(self, trace_id: str) -> Trace:
        try:
            return self.traces[self._by_id[trace_id]]
        except KeyError:
            raise TraceLogError(f'Trace "{trace_id}" is not in the log')

    def position(self, trace_id: str) -> int:
        return self._by_id[trace_id]

    def __contains__(self, trace_id: str) -> bool:
        return trace_id in self._by_id

    def total_states(self) -> int:
        return sum(len(tr) for tr in self.traces)

    def prefix(self, n: int) -> 'TraceLog':
        """The first n traces"""
        return TraceLog(self.signature, self.traces[:n])

    def subset(self, trace_ids: Iterable[str]) -> 'TraceLog':
        """Traces with the given ids, in log order"""
        wanted = set(trace_ids)
        return TraceLog(self.signature, tuple(tr for tr in self.traces if tr.id in wanted))


def parse_signature(source: str) -> Signature:
    """Parse and validate a signature sidecar document.

    Arguments:
        source: JSON text

    Raises:
        SignatureError with the line or field of the problem
    """
    try:
        doc = SignatureDoc.schema().loads(source) # type: ignore
    except JSONDecodeError as err:
        raise SignatureError(f'Signature parse error at line {err.lineno}, column {err.colno}: {err.msg}')
    except ValidationError as err:
        raise SignatureError(f'Signature parse error: {err.messages}')
    except (TypeError, KeyError, ValueError) as err:
        raise SignatureError(f'Signature parse error: {err}')

    if doc.format_version != SIDECAR_FORMAT_VERSION:
        raise SignatureError(f'Signature error: format_version {doc.format_version} is not supported, expected {SIDECAR_FORMAT_VERSION}')

    decls = []
    for i, var in enumerate(doc.variables):
        decls.append(_decl_from_doc(var, f'variables[{i}]'))
    edges = tuple(_edge_from_doc(e, f'edges[{i}]') for i, e in enumerate(doc.edges))
    instant = tuple(_edge_from_doc(e, f'instant_edges[{i}]') for i, e in enumerate(doc.instant_edges))
    return Signature(tuple(decls), edges, instant)


def _edge_from_doc(edge: List[str], where: str) -> Tuple[str, str]:
    if len(edge) != 2 or not all(isinstance(n, str) for n in edge):
        raise SignatureError(f'Signature error: {where} must be a [parent, child] pair of names, got {edge}')
    return (edge[0], edge[1])


def _decl_from_doc(var: VariableDoc, where: str) -> VariableDecl:
    """Convert and validate a single variable declaration"""
    if not var.name or not var.name.isidentifier():
        raise SignatureError(f'Signature error: {where}.name "{var.name}" is not an identifier')
    if var.name in (CSV_TRACE_ID, CSV_STEP):
        raise SignatureError(f'Signature error: {where}.name "{var.name}" is reserved')
    try:
        kind = VarKind(var.kind)
    except ValueError:
        raise SignatureError(f'Signature error: {where}.kind must be one of {", ".join(k.value for k in VarKind)}, got "{var.kind}"')

    dom = var.domain
    if dom.values is not None:
        if dom.lo is not None or dom.hi is not None:
            raise SignatureError(f'Signature error: malformed domain in {where}: give either lo/hi or values')
        if not dom.values:
            raise SignatureError(f'Signature error: malformed domain in {where}: empty value set')
        for v in dom.values:
            if isinstance(v, bool) or not isinstance(v, (int, str)):
                raise SignatureError(f'Signature error: malformed domain in {where}: discrete values must be integers or strings, got {v!r}')
        if len(set(dom.values)) != len(dom.values):
            raise SignatureError(f'Signature error: malformed domain in {where}: repeated values')
        if var.tolerance:
            raise SignatureError(f'Signature error: {where}.tolerance must be 0 for a discrete variable')
        return VariableDecl(var.name, kind, Domain(values=tuple(dom.values)), 0.0)

    if dom.lo is None or dom.hi is None:
        raise SignatureError(f'Signature error: malformed domain in {where}: both lo and hi are required')
    lo, hi = float(dom.lo), float(dom.hi)
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise SignatureError(f'Signature error: malformed domain in {where}: lo must not exceed hi')
    tolerance = CAUSE_DFLT_TOLERANCE if var.tolerance is None else float(var.tolerance)
    if tolerance < 0 or not math.isfinite(tolerance):
        raise SignatureError(f'Signature error: {where}.tolerance must be a finite non-negative number')
    return VariableDecl(var.name, kind, Domain(lo=lo, hi=hi), tolerance)


def serialize_signature(sig: Signature) -> str:
    """Render a signature as a sidecar JSON document"""
    variables = []
    for decl in sig.variables:
        if decl.is_discrete:
            dom = DomainDoc(values=list(decl.domain.values)) # type: ignore
            tolerance = None
        else:
            dom = DomainDoc(lo=decl.domain.lo, hi=decl.domain.hi)
            tolerance = decl.tolerance
        variables.append(VariableDoc(decl.name, decl.kind.value, dom, tolerance))
    doc = SignatureDoc(SIDECAR_FORMAT_VERSION, variables,
                       [list(e) for e in sig.dependency_edges],
                       [list(e) for e in sig.instant_edges])
    return doc.to_json(indent=2) + '\n' # type: ignore


# Errors raised while reading undecodable or corrupt (compressed) text
DECODE_ERRORS = (UnicodeDecodeError, gzip.BadGzipFile, EOFError, zlib.error)


def load_signature(fname: str) -> Signature:
    """Read and parse a signature sidecar file"""
    try:
        with open_for_read(fname) as f:
            return parse_signature(f.read())
    except FileNotFoundError:
        raise SignatureError(f'Signature file "{fname}" was not found')
    except DECODE_ERRORS as err:
        raise SignatureError(f'Signature file "{fname}" is not readable UTF-8 text: {err}')


def write_signature(sig: Signature, fname: str) -> None:
    with open_for_write(fname) as f:
        f.write(serialize_signature(sig))


def _split_header_comments(text: str) -> Tuple[int, str]:
    """Strip leading '#' lines, validating an optional format_version line.
    Returns the number of stripped lines and the remaining text"""
    lines = text.splitlines(keepends=True)
    n = 0
    while n < len(lines) and lines[n].lstrip().startswith('#'):
        comment = lines[n].lstrip()[1:].strip()
        key, _, val = comment.partition(':')
        if key.strip() == 'format_version':
            try:
                version = int(val.strip())
            except ValueError:
                raise TraceLogError(f'Trace log line {n + 1}: invalid format_version "{val.strip()}"')
            if version != SIDECAR_FORMAT_VERSION:
                raise TraceLogError(f'Trace log line {n + 1}: format_version {version} is not supported, expected {SIDECAR_FORMAT_VERSION}')
        n += 1
    return n, ''.join(lines[n:])


def _discrete_lookup(decl: VariableDecl) -> Dict[str, Value]:
    """Map the text forms of a discrete domain to its tokens"""
    lookup: Dict[str, Value] = {}
    for v in decl.domain.values: # type: ignore
        lookup[str(v)] = v
        if isinstance(v, int):
            lookup[f'{v}.0'] = v
            lookup[f'+{v}'] = v
    return lookup


def _to_float(text: str) -> float:
    """Exact float value of a cell, NaN when it is not a number"""
    try:
        return float(text)
    except ValueError:
        return math.nan


def parse_trace_log(source: IO, sig: Signature,
                    mode: IngestionMode = IngestionMode.STRICT) -> TraceLog:
    """Parse a CSV trace log.

    Arguments:
        source: Text stream with the CSV contents
        sig: Validated signature
        mode: What to do with continuous values outside of their domain

    Returns:
        TraceLog with traces in order of first appearance of their trace_id
        and states ordered by the step column
    """
    n_comments, body = _split_header_comments(source.read())
    # header line plus comment lines precede the first data row
    first_row_line = n_comments + 2
    try:
        df = pd.read_csv(io.StringIO(body), dtype=str, keep_default_na=False,
                         skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise TraceLogError('Trace log is empty, a header line is required')
    except pd.errors.ParserError as err:
        raise TraceLogError(f'Trace log parse error: {err}')

    df.columns = [c.strip() for c in df.columns]
    expected = [CSV_TRACE_ID, CSV_STEP] + sig.names()
    missing = [c for c in expected if c not in df.columns]
    if missing:
        raise TraceLogError(f'Trace log is missing column(s): {", ".join(missing)}')
    extra = [c for c in df.columns if c not in expected]
    if extra:
        raise TraceLogError(f'Trace log has column(s) not declared in the signature: {", ".join(extra)}')

    steps = pd.to_numeric(df[CSV_STEP], errors='coerce')
    bad = steps.isna() | (steps != steps.round())
    if bad.any():
        row = int(np.flatnonzero(bad.to_numpy())[0])
        raise TraceLogError(f'Trace log line {row + first_row_line}: step "{df[CSV_STEP].iloc[row]}" is not an integer')
    df[CSV_STEP] = steps.astype(int)

    converted: Dict[str, List[Value]] = {}
    n_clamped = 0
    for decl in sig.variables:
        raw = df[decl.name]
        if decl.is_discrete:
            lookup = _discrete_lookup(decl)
            mapped = raw.str.strip().map(lookup)
            bad = mapped.isna()
            if bad.any():
                row = int(np.flatnonzero(bad.to_numpy())[0])
                raise TraceLogError(f'Trace log line {row + first_row_line}: value "{raw.iloc[row]}" of {decl.name} is not in its domain {decl.domain.describe()}')
            converted[decl.name] = list(mapped)
            continue
        values = raw.map(_to_float).to_numpy(dtype=float)
        bad = ~np.isfinite(values)
        if bad.any():
            row = int(np.flatnonzero(bad)[0])
            raise TraceLogError(f'Trace log line {row + first_row_line}: value "{raw.iloc[row]}" of {decl.name} is not a number')
        outside = (values < decl.domain.lo) | (values > decl.domain.hi)
        if outside.any():
            if mode == IngestionMode.STRICT:
                row = int(np.flatnonzero(outside)[0])
                raise TraceLogError(f'Trace log line {row + first_row_line}: value {values[row]!r} of {decl.name} is outside of its domain {decl.domain.describe()}')
            n_clamped += int(outside.sum())
            values = np.clip(values, decl.domain.lo, decl.domain.hi)
        converted[decl.name] = values.tolist()
    if n_clamped:
        logging.warning(f'{n_clamped} out-of-domain value(s) were clamped to their domain bounds')

    traces: List[Trace] = []
    ids = df[CSV_TRACE_ID].str.strip()
    if (ids == '').any():
        row = int(np.flatnonzero((ids == '').to_numpy())[0])
        raise TraceLogError(f'Trace log line {row + first_row_line}: empty trace_id')
    step_col = df[CSV_STEP].to_numpy()
    groups: Dict[str, List[int]] = {}
    for row, tid in enumerate(ids):
        groups.setdefault(tid, []).append(row)
    exogenous = sig.exogenous()
    for tid, rows in groups.items():
        rows.sort(key=lambda r: step_col[r])
        for expected_step, r in enumerate(rows):
            if step_col[r] != expected_step:
                raise TraceLogError(f'Trace "{tid}" has non-contiguous steps: expected step {expected_step}, found {step_col[r]} (line {r + first_row_line})')
        columns = {name: tuple(converted[name][r] for r in rows) for name in sig.names()}
        for name in exogenous:
            if len(set(columns[name])) != 1:
                raise TraceLogError(f'Trace "{tid}": exogenous variable {name} changes value along the trace')
        traces.append(Trace(tid, columns))
    return TraceLog(sig, tuple(traces))


def format_value(value: Value) -> str:
    """Text form of a value, exact for floats"""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_trace_log(log: TraceLog, stream: IO) -> None:
    """Write a trace log as CSV, the inverse of parse_trace_log"""
    names = log.signature.names()
    data: Dict[str, List[str]] = {CSV_TRACE_ID: [], CSV_STEP: []}
    for name in names:
        data[name] = []
    for tr in log.traces:
        data[CSV_TRACE_ID].extend([tr.id] * len(tr))
        data[CSV_STEP].extend(str(i) for i in range(len(tr)))
        for name in names:
            data[name].extend(format_value(v) for v in tr.columns[name])
    stream.write(f'# format_version: {SIDECAR_FORMAT_VERSION}\n')
    pd.DataFrame(data, columns=[CSV_TRACE_ID, CSV_STEP] + names).to_csv(
        stream, index=False, lineterminator='\n')


def load_trace_log(fname: str, sig: Signature,
                   mode: IngestionMode = IngestionMode.STRICT) -> TraceLog:
    """Read and parse a trace log file"""
    try:
        with open_for_read(fname) as f:
            log = parse_trace_log(f, sig, mode)
    except FileNotFoundError:
        raise TraceLogError(f'Trace log file "{fname}" was not found')
    except DECODE_ERRORS as err:
        raise TraceLogError(f'Trace log file "{fname}" is not readable UTF-8 text: {err}')
    logging.debug(f'{fname}: {len(log)} traces, {log.total_states()} states')
    return log


def write_trace_log(log: TraceLog, fname: str) -> None:
    with open_for_write(fname) as f:
        serialize_trace_log(log, f)


def state_distance(a: State, b: State, names: Iterable[str], sig: Signature) -> float:
    """Euclidean distance between two states over the selected continuous
    variables, each coordinate normalized by its domain width.

    Raises:
        TraceModelError if a variable is unknown or discrete
    """
    diffs = []
    for name in names:
        decl = sig.decl(name)
        if decl.is_discrete:
            raise TraceModelError(f'Distance is not defined for discrete variable "{name}"')
        width = decl.domain.width
        diffs.append(0.0 if width == 0 else (float(a[name]) - float(b[name])) / width)
    if not diffs:
        return 0.0
    return float(np.linalg.norm(np.asarray(diffs)))


def partition_by_context(log: TraceLog) -> List[TraceLog]:
    """Split a log into groups of traces sharing the same exogenous context,
    ordered by first appearance"""
    exogenous = log.signature.exogenous()
    groups: Dict[Tuple[Value, ...], List[Trace]] = {}
    for tr in log.traces:
        key = tuple(tr.value(name, 0) for name in exogenous)
        groups.setdefault(key, []).append(tr)
    return [TraceLog(log.signature, tuple(trs)) for trs in groups.values()]
