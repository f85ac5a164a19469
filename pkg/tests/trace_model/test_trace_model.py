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
Tests for actual_cause/trace_model.py

Created: Sun 18 Oct 2026 01:52:09 PM EDT
"""

import io
import json
import math
import logging

import numpy as np
import pytest

from actual_cause.constants import IngestionMode, INPUT_ERROR
from actual_cause.trace_model import Domain, State, Trace, TraceLog
from actual_cause.trace_model import SignatureError, TraceLogError, TraceModelError
from actual_cause.trace_model import parse_signature, serialize_signature
from actual_cause.trace_model import parse_trace_log, serialize_trace_log
from actual_cause.trace_model import load_signature, load_trace_log, write_trace_log
from actual_cause.trace_model import state_distance, partition_by_context
from tests.utils import FIG4_LOG, FIG4_SIGNATURE, load_fig4, random_log

MINI_SIGNATURE = """{
  "format_version": 1,
  "variables": [
    {"name": "x", "kind": "endogenous", "domain": {"lo": 0.0, "hi": 1.0}},
    {"name": "mode", "kind": "endogenous", "domain": {"values": ["idle", "busy"]}},
    {"name": "u", "kind": "exogenous", "domain": {"values": [0, 1]}}
  ],
  "edges": [["u", "mode"], ["mode", "x"]]
}
"""


def sig_doc(variables, edges=(), instant_edges=()):
    return json.dumps({'format_version': 1, 'variables': variables,
                       'edges': [list(e) for e in edges],
                       'instant_edges': [list(e) for e in instant_edges]})


def var(name, kind='endogenous', **domain):
    return {'name': name, 'kind': kind, 'domain': domain or {'lo': 0.0, 'hi': 1.0}}


@pytest.fixture
def mini_sig():
    return parse_signature(MINI_SIGNATURE)


def test_mountain_car_signature():
    sig = load_signature(FIG4_SIGNATURE)
    assert sig.endogenous() == ['pos', 'vel', 'action']
    assert sig.exogenous() == ['pos0', 'vel0', 'g']
    assert sig.decl('action').is_discrete
    assert sig.decl('action').domain.values == (-1, 0, 1)
    assert sig.decl('action').tolerance == 0
    assert sig.decl('pos').domain == Domain(lo=-1.2, hi=0.6)
    assert sig.decl('pos').tolerance == 1e-6
    assert ('action', 'vel') in sig.dependency_edges
    assert sig.descendants(['action']) >= {'vel', 'pos', 'action'}
    assert 'g' not in sig.descendants(['action'])


def test_default_tolerance(mini_sig):
    assert mini_sig.decl('x').tolerance == 1e-6
    assert mini_sig.decl('mode').tolerance == 0.0


@pytest.mark.parametrize('doc, message', [
    (sig_doc([]), 'empty-signature'),
    (sig_doc([var('x'), var('x')]), 'duplicate-name'),
    (sig_doc([var('x')], edges=[('x', 'foo')]), 'undeclared variable "foo"'),
    (sig_doc([var('x'), var('y')], instant_edges=[('x', 'y'), ('y', 'x')]), 'cyclic-dependency'),
    (sig_doc([var('x', lo=1.0, hi=0.0)]), 'malformed domain'),
    (sig_doc([var('x', values=[])]), 'malformed domain'),
    (sig_doc([var('x', lo=0.0, hi=1.0, values=[1])]), 'malformed domain'),
    (sig_doc([var('x', kind='latent')]), 'kind'),
    (sig_doc([var('step')]), 'reserved'),
    (sig_doc([var('x'), var('u', kind='exogenous')], edges=[('x', 'u')]), 'exogenous'),
    ('{"format_version": 1, "variables": [', 'line'),
    ('{"format_version": 2, "variables": []}', 'format_version'),
    ('{"format_version": 1, "variables": [], "colour": "red"}', 'parse error'),
])
def test_signature_errors(doc, message):
    with pytest.raises(SignatureError) as err:
        parse_signature(doc)
    assert message in err.value.message
    assert err.value.returncode == INPUT_ERROR


def test_dependency_cycle_through_steps_is_allowed():
    """A variable depending on its own previous value is the normal case"""
    sig = parse_signature(sig_doc([var('x'), var('y')], edges=[('x', 'y'), ('y', 'x'), ('x', 'x')]))
    assert sig.descendants(['x']) == {'x', 'y'}


def test_signature_round_trip():
    sig = load_signature(FIG4_SIGNATURE)
    assert parse_signature(serialize_signature(sig)) == sig


def test_missing_signature_file(tmpdir):
    with pytest.raises(SignatureError):
        load_signature(str(tmpdir.join('absent.json')))


def test_fig4_log():
    sig, log = load_fig4()
    assert log.ids() == ['tau0', 'tau1', 'tau2']
    assert [len(tr) for tr in log] == [4, 4, 4]
    tau0, tau1, tau2 = log.traces
    assert tau0.columns == tau2.columns
    assert tau0.value('action', 0) == 1
    assert isinstance(tau0.value('action', 0), int)
    assert tau1.value('action', 0) == -1
    assert tau1.value('pos', tau1.last) == 0.6
    assert log.total_states() == 12


def test_log_round_trip_is_byte_exact():
    sig = load_signature(FIG4_SIGNATURE)
    with open(FIG4_LOG) as f:
        text = f.read()
    log = parse_trace_log(io.StringIO(text), sig)
    out = io.StringIO()
    serialize_trace_log(log, out)
    assert out.getvalue() == text


def test_random_log_round_trip():
    for seed in range(5):
        log = random_log(seed, n_traces=12)
        out = io.StringIO()
        serialize_trace_log(log, out)
        again = parse_trace_log(io.StringIO(out.getvalue()), log.signature)
        assert again.ids() == log.ids()
        for a, b in zip(log, again):
            assert a.columns == b.columns


def test_write_and_load(tmpdir):
    sig, log = load_fig4()
    fname = str(tmpdir.join('sub', 'log.csv'))
    write_trace_log(log, fname)
    assert load_trace_log(fname, sig).traces == log.traces


@pytest.mark.parametrize('text', ['0.34305610557236765', '0.1', '5e-324', '0.9999999999999999'])
def test_float_cells_are_parsed_exactly(mini_sig, text):
    log = parse_trace_log(io.StringIO(f'trace_id,step,x,mode,u\na,0,{text},idle,1\n'), mini_sig)
    value = log.trace('a').value('x', 0)
    assert value == float(text)
    assert repr(value) == text


def test_single_row(mini_sig):
    log = parse_trace_log(io.StringIO('trace_id,step,x,mode,u\na,0,0.5,idle,1\n'), mini_sig)
    assert len(log) == 1
    assert len(log.trace('a')) == 1
    assert log.trace('a').state(0) == State({'x': 0.5, 'mode': 'idle', 'u': 1})


def test_rows_are_grouped_and_sorted(mini_sig):
    text = ('trace_id,step,x,mode,u\n'
            'b,1,0.2,busy,0\n'
            'a,0,0.5,idle,1\n'
            'b,0,0.1,idle,0\n')
    log = parse_trace_log(io.StringIO(text), mini_sig)
    assert log.ids() == ['b', 'a']
    assert log.trace('b').columns['x'] == (0.1, 0.2)
    assert log.position('a') == 1


@pytest.mark.parametrize('text, message', [
    ('trace_id,step,x,mode\na,0,0.5,idle\n', 'missing column'),
    ('trace_id,step,x,mode,u,z\na,0,0.5,idle,1,3\n', 'not declared'),
    ('trace_id,step,x,mode,u\na,0,0.5,idle,1\na,2,0.5,idle,1\n', 'non-contiguous'),
    ('trace_id,step,x,mode,u\na,0,0.5,idle,1\na,0,0.6,idle,1\n', 'non-contiguous'),
    ('trace_id,step,x,mode,u\na,0,1.5,idle,1\n', 'outside of its domain'),
    ('trace_id,step,x,mode,u\na,0,0.5,sleeping,1\n', 'not in its domain'),
    ('trace_id,step,x,mode,u\na,0,abc,idle,1\n', 'not a number'),
    ('trace_id,step,x,mode,u\na,one,0.5,idle,1\n', 'not an integer'),
    ('trace_id,step,x,mode,u\na,0,0.5,idle,1\na,1,0.5,idle,0\n', 'exogenous'),
    ('# format_version: 7\ntrace_id,step,x,mode,u\na,0,0.5,idle,1\n', 'format_version'),
    ('', 'empty'),
])
def test_trace_log_errors(mini_sig, text, message):
    with pytest.raises(TraceLogError) as err:
        parse_trace_log(io.StringIO(text), mini_sig)
    assert message in err.value.message


def test_error_reports_line_number(mini_sig):
    text = ('# format_version: 1\n'
            'trace_id,step,x,mode,u\n'
            'a,0,0.5,idle,1\n'
            'a,1,2.5,idle,1\n')
    with pytest.raises(TraceLogError) as err:
        parse_trace_log(io.StringIO(text), mini_sig)
    assert 'line 4' in err.value.message


def test_clamp_ingestion(mini_sig, caplog):
    text = ('trace_id,step,x,mode,u\n'
            'a,0,1.5,idle,1\n'
            'a,1,-0.5,idle,1\n')
    with caplog.at_level(logging.WARNING):
        log = parse_trace_log(io.StringIO(text), mini_sig, IngestionMode.CLAMP)
    assert log.trace('a').columns['x'] == (1.0, 0.0)
    assert '2 out-of-domain value(s) were clamped' in caplog.text


def test_missing_log_file(tmpdir, mini_sig):
    with pytest.raises(TraceLogError):
        load_trace_log(str(tmpdir.join('absent.csv')), mini_sig)


def test_undecodable_log_file(tmpdir, mini_sig):
    fname = str(tmpdir.join('log.csv'))
    with open(fname, 'wb') as f:
        f.write(b'trace_id,step,x,mode,u\na,0,0.5,\xff,1\n')
    with pytest.raises(TraceLogError) as err:
        load_trace_log(fname, mini_sig)
    assert 'not readable UTF-8 text' in err.value.message
    assert err.value.returncode == INPUT_ERROR


def test_corrupt_compressed_log_file(tmpdir, mini_sig):
    fname = str(tmpdir.join('log.csv.gz'))
    with open(fname, 'wb') as f:
        f.write(b'trace_id,step,x,mode,u\n')
    with pytest.raises(TraceLogError):
        load_trace_log(fname, mini_sig)


def test_undecodable_signature_file(tmpdir):
    fname = str(tmpdir.join('signature.json'))
    with open(fname, 'wb') as f:
        f.write(b'{"format_version": 1, "variables": [\xff]}')
    with pytest.raises(SignatureError):
        load_signature(fname)


def test_duplicate_trace_id(mini_sig):
    tr = Trace('a', {'x': (0.5,), 'mode': ('idle',), 'u': (1,)})
    with pytest.raises(TraceLogError):
        TraceLog(mini_sig, (tr, tr))


def test_empty_trace():
    with pytest.raises(TraceLogError):
        Trace('a', {'x': ()})
    with pytest.raises(TraceLogError):
        Trace.from_states('a', [])


def test_prefix_and_subset():
    _, log = load_fig4()
    assert log.prefix(2).ids() == ['tau0', 'tau1']
    assert log.subset(['tau2', 'tau0']).ids() == ['tau0', 'tau2']
    with pytest.raises(TraceLogError):
        log.trace('tau9')


def test_state_distance():
    sig = load_signature(FIG4_SIGNATURE)
    a = State({'pos': 0.0, 'vel': 0.0})
    assert state_distance(a, a, ['pos', 'vel'], sig) == 0.0
    b = State({'pos': 0.18, 'vel': 0.0})
    assert math.isclose(state_distance(a, b, ['pos', 'vel'], sig), 0.1)
    c = State({'pos': 0.18, 'vel': 0.014})
    assert math.isclose(state_distance(a, c, ['pos', 'vel'], sig), math.sqrt(0.02))
    with pytest.raises(TraceModelError):
        state_distance(a, b, ['action'], sig)
    with pytest.raises(TraceModelError):
        state_distance(a, b, ['speed'], sig)


def test_state_distance_is_a_metric():
    sig = load_signature(FIG4_SIGNATURE)
    rng = np.random.default_rng(11)
    names = ['pos', 'vel']

    def draw():
        return State({'pos': float(rng.uniform(-1.2, 0.6)), 'vel': float(rng.uniform(-0.07, 0.07))})

    for _ in range(200):
        a, b, c = draw(), draw(), draw()
        ab = state_distance(a, b, names, sig)
        assert ab >= 0
        assert math.isclose(ab, state_distance(b, a, names, sig))
        assert ab <= state_distance(a, c, names, sig) + state_distance(c, b, names, sig) + 1e-12


def test_partition_by_context():
    sig, log = load_fig4()
    assert [g.ids() for g in partition_by_context(log)] == [['tau0', 'tau1', 'tau2']]
    log = random_log(3, n_traces=15, duplicates=False)
    groups = partition_by_context(log)
    assert sum(len(g) for g in groups) == 15
    for g in groups:
        assert len({tr.value('u', 0) for tr in g}) == 1
    # groups follow the first appearance of their context
    firsts = [log.position(g.traces[0].id) for g in groups]
    assert firsts == sorted(firsts)
