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
Tests for actual_cause/generators.py

Created: Sun 18 Oct 2026 06:02:51 PM EDT
"""

import logging
import os

import pytest

from actual_cause.generators import MountainCarParams, Policy, PolicyKind, PolicyFamily
from actual_cause.generators import mountain_car_step, simulate, reached_goal
from actual_cause.generators import generate_log, write_generated, mountain_car_signature
from actual_cause.generators import THRESHOLD_GRID
from actual_cause.trace_model import load_signature, load_trace_log
from actual_cause.util import UserReportError

ORIGIN = (0.0, 0.02)


def test_step():
    pos, vel = mountain_car_step(0.0, 0.01, 1)
    assert pos == pytest.approx(0.01)
    assert vel == pytest.approx(0.0085)
    assert mountain_car_step(0.0, 0.0, 0, MountainCarParams(gravity=0.0)) == (0.0, 0.0)


def test_step_clamps():
    p = MountainCarParams(gravity=0.0)
    assert mountain_car_step(0.0, 0.0695, 1, p)[1] == 0.07
    assert mountain_car_step(0.59, 0.05, 1, p)[0] == 0.6
    # the left wall stops the car
    assert mountain_car_step(-1.19, -0.05, -1) == (-1.2, 0.0)
    pos, vel = mountain_car_step(-1.19, -0.05, -1, MountainCarParams(inelastic_left_wall=False))
    assert pos == -1.2
    assert vel < 0


def test_velocity_first_order():
    pos, vel = mountain_car_step(0.0, 0.01, 1, MountainCarParams(velocity_first=True))
    assert pos == pytest.approx(0.0085)
    assert vel == pytest.approx(0.0085)


def test_params_validation():
    with pytest.raises(ValueError):
        MountainCarParams(horizon=0)
    with pytest.raises(ValueError):
        MountainCarParams(goal_pos=0.7)
    with pytest.raises(ValueError):
        MountainCarParams(vel_min=0.1)


def test_policies():
    assert Policy(PolicyKind.ALWAYS_RIGHT)(0.0, -0.01, 0) == 1
    assert Policy(PolicyKind.ALWAYS_LEFT)(0.0, 0.01, 0) == -1
    bang = Policy(PolicyKind.BANG_BANG)
    assert [bang(0.0, v, 0) for v in (-0.01, 0.0, 0.01)] == [-1, 0, 1]
    thr = Policy(PolicyKind.VELOCITY_THRESHOLD, 0.02)
    assert [thr(0.0, v, 0) for v in (0.01, 0.02, 0.03)] == [-1, -1, 1]
    assert str(thr) == 'velocity-threshold:0.02'
    assert str(bang) == 'bang-bang'


def test_always_right_fails():
    tr = simulate(Policy(PolicyKind.ALWAYS_RIGHT), ORIGIN)
    assert len(tr) == 101
    assert not reached_goal(tr)
    assert tr.value('pos', tr.last) == pytest.approx(0.21905, abs=1e-4)
    assert set(tr.columns['action']) == {1}


def test_always_left_fails():
    assert not reached_goal(simulate(Policy(PolicyKind.ALWAYS_LEFT), ORIGIN))


@pytest.mark.parametrize('policy, velocity_first, last', [
    (Policy(PolicyKind.BANG_BANG), False, 88),
    (Policy(PolicyKind.BANG_BANG), True, 87),
    (Policy(PolicyKind.VELOCITY_THRESHOLD, 0.0), False, 88),
    (Policy(PolicyKind.VELOCITY_THRESHOLD, 0.02), False, 87),
])
def test_reaching_the_goal(policy, velocity_first, last):
    tr = simulate(policy, ORIGIN, MountainCarParams(velocity_first=velocity_first))
    assert reached_goal(tr)
    assert tr.last == last
    assert tr.value('pos', tr.last) == 0.6
    # the goal ends the trace
    assert all(p < 0.6 for p in tr.columns['pos'][:-1])


def test_simulate_columns():
    tr = simulate(Policy(PolicyKind.BANG_BANG), ORIGIN, trace_id='x')
    assert tr.id == 'x'
    assert set(tr.columns) == {'pos', 'vel', 'action', 'pos0', 'vel0', 'g'}
    assert set(tr.columns['pos0']) == {0.0}
    assert set(tr.columns['vel0']) == {0.02}
    assert set(tr.columns['g']) == {0.0025}
    assert tr.state(0)['pos'] == 0.0


def test_short_horizon():
    tr = simulate(Policy(PolicyKind.ALWAYS_RIGHT), ORIGIN, MountainCarParams(horizon=1))
    assert len(tr) == 2


def test_simulate_outside_of_domain():
    with pytest.raises(ValueError):
        simulate(Policy(PolicyKind.ALWAYS_RIGHT), (0.0, 0.5))


def test_policy_family_parse():
    assert len(PolicyFamily.parse('mixed')) == 4
    family = PolicyFamily.parse('bang-bang, velocity-threshold:0.01')
    assert family.members == ((PolicyKind.BANG_BANG, None), (PolicyKind.VELOCITY_THRESHOLD, 0.01))


@pytest.mark.parametrize('spec', ['rocket', 'bang-bang:1', 'velocity-threshold:abc', '', ' , '])
def test_policy_family_errors(spec):
    with pytest.raises(UserReportError):
        PolicyFamily.parse(spec)


def test_threshold_drawn_from_grid():
    gen = generate_log(40, PolicyFamily.parse('velocity-threshold'), 5)
    assert len(gen.log) == 40
    for tr in gen.log:
        actions = tr.columns['action']
        vels = tr.columns['vel']
        thresholds = [t for t in THRESHOLD_GRID
                      if all((v > t) == (a == 1) for v, a in zip(vels, actions))]
        assert thresholds


def test_generate_log_contexts():
    gen = generate_log(12, PolicyFamily.parse('mixed'), 1)
    assert gen.log.ids()[:3] == ['mc00', 'mc01', 'mc02']
    assert gen.log.ids()[-1] == 'mc11'
    first = gen.log.traces[:4]
    # one initial state, run with every policy of the family
    assert len({(tr.value('pos0', 0), tr.value('vel0', 0)) for tr in first}) == 1
    assert [tr.value('action', 0) for tr in first][:2] == [1, -1]


def test_generated_states_are_in_domain():
    gen = generate_log(40, PolicyFamily.parse('mixed'), 2)
    sig = gen.signature
    for tr in gen.log:
        for name in sig.names():
            domain = sig.decl(name).domain
            assert all(domain.contains(v) for v in tr.columns[name])


def test_single_trace_and_warning(caplog):
    with caplog.at_level(logging.WARNING):
        gen = generate_log(1, PolicyFamily.parse('always-right'), 0)
    assert gen.log.ids() == ['mc0']
    assert gen.warnings
    assert 'single outcome' in caplog.text


def test_generate_log_errors():
    with pytest.raises(UserReportError):
        generate_log(0, PolicyFamily.parse('mixed'), 0)


def test_success_rate():
    gen = generate_log(1000, PolicyFamily.parse('mixed'), 0)
    assert 0 < gen.success_rate < 0.5
    assert gen.success_rate == sum(1 for tr in gen.log if reached_goal(tr)) / 1000
    assert not gen.warnings


def test_write_generated_is_deterministic(tmpdir):
    paths = []
    for sub in ('a', 'b'):
        gen = generate_log(20, PolicyFamily.parse('mixed'), 11)
        paths.append(write_generated(gen, str(tmpdir.join(sub))))
    (log_a, sig_a), (log_b, sig_b) = paths
    assert os.path.basename(log_a) == 'log.csv'
    assert os.path.basename(sig_a) == 'signature.json'
    for x, y in ((log_a, log_b), (sig_a, sig_b)):
        with open(x, 'rb') as fa, open(y, 'rb') as fb:
            assert fa.read() == fb.read()


def test_written_log_round_trips(tmpdir):
    gen = generate_log(20, PolicyFamily.parse('mixed'), 4)
    log_path, sig_path = write_generated(gen, str(tmpdir))
    sig = load_signature(sig_path)
    assert sig == gen.signature
    assert sig == mountain_car_signature()
    assert load_trace_log(log_path, sig).traces == gen.log.traces
