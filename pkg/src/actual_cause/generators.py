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
src/actual_cause/generators.py - Benchmark trace logs from the mountain car
dynamics driven by scripted policies

Created: Sat 17 Oct 2026 10:05:18 AM EDT
"""

import logging
import math
import os
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib_resources import files
from typing import List, Optional, Tuple

import numpy as np

from .constants import MCAR_DFLT_GRAVITY, MCAR_DFLT_FORCE, MCAR_DFLT_HORIZON
from .constants import MCAR_DFLT_GOAL, MCAR_POS_MIN, MCAR_POS_MAX
from .constants import MCAR_VEL_MIN, MCAR_VEL_MAX
from .constants import MCAR_LOG_FILE, MCAR_SIGNATURE_FILE, INPUT_ERROR
from .trace_model import Domain, Signature, Trace, TraceLog, parse_signature
from .trace_model import write_signature, write_trace_log
from .util import UserReportError

# Sampling box of initial states
MCAR_INIT_POS = (-0.6, 0.4)
MCAR_INIT_VEL = (-0.03, 0.03)
# Thresholds of velocity-threshold policies without an explicit one
THRESHOLD_GRID = (0.0, 0.01, 0.02, 0.03, 0.04, 0.05)


@dataclass(frozen=True)
class MountainCarParams:
    """Mountain car constants.

    Attributes:
        gravity: gravity coefficient g
        force: acceleration of one unit of action
        horizon: last step of a trace that does not reach the goal
        goal_pos: position that ends a trace
        inelastic_left_wall: stop the car when it hits the left bound
        velocity_first: update the velocity first and move the car with the
            new velocity, instead of moving it with the old one
    """
    gravity: float = MCAR_DFLT_GRAVITY
    force: float = MCAR_DFLT_FORCE
    horizon: int = MCAR_DFLT_HORIZON
    goal_pos: float = MCAR_DFLT_GOAL
    pos_min: float = MCAR_POS_MIN
    pos_max: float = MCAR_POS_MAX
    vel_min: float = MCAR_VEL_MIN
    vel_max: float = MCAR_VEL_MAX
    inelastic_left_wall: bool = True
    velocity_first: bool = False

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError('Horizon must be at least 1')
        if not self.pos_min <= self.goal_pos <= self.pos_max:
            raise ValueError(f'Goal position {self.goal_pos} is outside of [{self.pos_min}, {self.pos_max}]')
        if self.vel_min > self.vel_max:
            raise ValueError('Velocity bounds are reversed')


def _clamp(x: float, lo: float, hi: float) -> float:
    return min(max(x, lo), hi)


def mountain_car_step(pos: float, vel: float, action: int,
                      p: MountainCarParams = MountainCarParams()) -> Tuple[float, float]:
    """One step of the dynamics:
        pos' = clamp(pos + vel)
        vel' = clamp(vel + force * action - g * cos(3 * pos))
    """
    new_vel = _clamp(vel + p.force * action - p.gravity * math.cos(3 * pos), p.vel_min, p.vel_max)
    new_pos = _clamp(pos + (new_vel if p.velocity_first else vel), p.pos_min, p.pos_max)
    if p.inelastic_left_wall and new_pos <= p.pos_min and new_vel < 0:
        new_vel = 0.0
    return new_pos, new_vel


class PolicyKind(Enum):
    ALWAYS_RIGHT = 'always-right'
    ALWAYS_LEFT = 'always-left'
    BANG_BANG = 'bang-bang'
    VELOCITY_THRESHOLD = 'velocity-threshold'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Policy:
    """Scripted controller. bang-bang pushes in the direction of motion (no
    push at rest), velocity-threshold pushes right iff vel > threshold."""
    kind: PolicyKind
    threshold: float = 0.0

    def __call__(self, pos: float, vel: float, step: int) -> int:
        if self.kind == PolicyKind.ALWAYS_RIGHT:
            return 1
        if self.kind == PolicyKind.ALWAYS_LEFT:
            return -1
        if self.kind == PolicyKind.BANG_BANG:
            return 1 if vel > 0 else (-1 if vel < 0 else 0)
        return 1 if vel > self.threshold else -1

    def __str__(self):
        if self.kind == PolicyKind.VELOCITY_THRESHOLD:
            return f'{self.kind}:{self.threshold}'
        return str(self.kind)


@dataclass(frozen=True)
class PolicyFamily:
    """Policies every initial state is run with. A velocity-threshold member
    without a threshold draws one from THRESHOLD_GRID for every initial
    state."""
    members: Tuple[Tuple[PolicyKind, Optional[float]], ...]

    @classmethod
    def parse(cls, spec: str) -> 'PolicyFamily':
        """Parse a comma separated list of policy names; 'mixed' stands for all
        four kinds"""
        members: List[Tuple[PolicyKind, Optional[float]]] = []
        for item in (s.strip() for s in spec.split(',')):
            if not item:
                continue
            if item == 'mixed':
                members.extend((k, None) for k in PolicyKind)
                continue
            name, _, param = item.partition(':')
            try:
                kind = PolicyKind(name)
            except ValueError:
                raise UserReportError(INPUT_ERROR, f'Unknown policy "{name}", should be one of mixed, {", ".join(k.value for k in PolicyKind)}')
            threshold: Optional[float] = None
            if param:
                if kind != PolicyKind.VELOCITY_THRESHOLD:
                    raise UserReportError(INPUT_ERROR, f'Policy {name} takes no parameter')
                try:
                    threshold = float(param)
                except ValueError:
                    raise UserReportError(INPUT_ERROR, f'Invalid velocity threshold "{param}"')
            members.append((kind, threshold))
        if not members:
            raise UserReportError(INPUT_ERROR, 'Policy family is empty')
        return cls(tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    def policies(self, rng: np.random.Generator) -> List[Policy]:
        """Concrete policies for one initial state"""
        out = []
        for kind, threshold in self.members:
            if kind == PolicyKind.VELOCITY_THRESHOLD and threshold is None:
                threshold = float(rng.choice(THRESHOLD_GRID))
            out.append(Policy(kind, threshold or 0.0))
        return out


def simulate(policy: Policy, init: Tuple[float, float],
             p: MountainCarParams = MountainCarParams(), trace_id: str = '0') -> Trace:
    """Run policy from init until the goal is reached or for horizon steps.
    The action of a step is the policy's decision in that step's state."""
    pos, vel = float(init[0]), float(init[1])
    if not (p.pos_min <= pos <= p.pos_max and p.vel_min <= vel <= p.vel_max):
        raise ValueError(f'Initial state ({pos}, {vel}) is outside of the domain')
    cols: dict = {'pos': [], 'vel': [], 'action': []}
    for step in range(p.horizon + 1):
        action = policy(pos, vel, step)
        cols['pos'].append(pos)
        cols['vel'].append(vel)
        cols['action'].append(action)
        if pos >= p.goal_pos or step == p.horizon:
            break
        pos, vel = mountain_car_step(pos, vel, action, p)
    n = len(cols['pos'])
    columns = {name: tuple(values) for name, values in cols.items()}
    columns['pos0'] = (float(init[0]),) * n
    columns['vel0'] = (float(init[1]),) * n
    columns['g'] = (float(p.gravity),) * n
    return Trace(trace_id, columns)


def reached_goal(tr: Trace, p: MountainCarParams = MountainCarParams()) -> bool:
    return tr.value('pos', tr.last) >= p.goal_pos


def mountain_car_signature(p: MountainCarParams = MountainCarParams()) -> Signature:
    """Signature of generated logs, with the bounds of p"""
    ref = files('actual_cause') / 'resources' / 'mountain-car-signature.json'
    sig = parse_signature(ref.read_text())
    bounds = {'pos': (p.pos_min, p.pos_max), 'pos0': (p.pos_min, p.pos_max),
              'vel': (p.vel_min, p.vel_max), 'vel0': (p.vel_min, p.vel_max)}
    decls = tuple(replace(d, domain=Domain(lo=bounds[d.name][0], hi=bounds[d.name][1]))
                  if d.name in bounds else d for d in sig.variables)
    return Signature(decls, sig.dependency_edges, sig.instant_edges)


@dataclass
class GeneratedLog:
    """Generated log with its signature and outcome statistics"""
    log: TraceLog
    signature: Signature
    success_rate: float
    warnings: List[str] = field(default_factory=list)


def generate_log(n_traces: int, family: PolicyFamily, seed: int,
                 p: MountainCarParams = MountainCarParams()) -> GeneratedLog:
    """Generate n_traces traces. Initial states are drawn uniformly from the
    sampling box with a seeded generator; every initial state is run with each
    policy of the family in turn, so traces sharing a context differ only by
    their policy.
    """
    if n_traces < 1:
        raise UserReportError(INPUT_ERROR, 'Number of traces must be at least 1')
    sig = mountain_car_signature(p)
    rng = np.random.default_rng(seed)
    width = len(str(n_traces - 1))
    traces: List[Trace] = []
    while len(traces) < n_traces:
        pos0 = float(rng.uniform(*MCAR_INIT_POS))
        vel0 = float(rng.uniform(*MCAR_INIT_VEL))
        for policy in family.policies(rng):
            if len(traces) == n_traces:
                break
            trace_id = f'mc{len(traces):0{width}d}'
            traces.append(simulate(policy, (pos0, vel0), p, trace_id))
    log = TraceLog(sig, tuple(traces))
    successes = sum(1 for tr in traces if reached_goal(tr, p))
    rate = successes / n_traces
    warnings = []
    if successes in (0, n_traces):
        warnings.append(f'All {n_traces} traces {"reach" if successes else "miss"} the goal, the log has a single outcome')
        logging.warning(warnings[-1])
    logging.debug(f'Generated {n_traces} traces, success rate {rate:.3f}')
    return GeneratedLog(log, sig, rate, warnings)


def write_generated(gen: GeneratedLog, out_dir: str) -> Tuple[str, str]:
    """Write log.csv and signature.json to out_dir, returns their paths"""
    os.makedirs(out_dir, exist_ok=True)
    log_path = os.path.join(out_dir, MCAR_LOG_FILE)
    sig_path = os.path.join(out_dir, MCAR_SIGNATURE_FILE)
    write_trace_log(gen.log, log_path)
    write_signature(gen.signature, sig_path)
    return log_path, sig_path