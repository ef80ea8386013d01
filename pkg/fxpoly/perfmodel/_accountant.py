# Synthetic cost accountant: prices simulated OPPE traces with a profile's unit costs
from typing import Dict, Iterable, Mapping

import numpy as np

from fxpoly.fxp import FxpValue
from fxpoly.oppe import OpKind, OpTrace, finalize_plan, trace_of
from fxpoly.perfmodel._profile import PerfProfile
from fxpoly.perfmodel._suite import SuiteEntry, generate_profiling_suite

KIND_PRICES = {
    OpKind.ADD: 'add',
    OpKind.MUL_cc: 'mul',
    OpKind.MUL_pc: 'mul',
    OpKind.GT: 'gt',
}


def price_trace(trace: OpTrace, time_dict: Mapping[str, float], vector_exponent: float = 1.0) -> float:
    return sum(time_dict[KIND_PRICES[r.kind]] * r.length ** vector_exponent for r in trace)


def simulate_profile(profile: PerfProfile, suite: Iterable[SuiteEntry],
                     noise: float = 0.0, seed: int = 0) -> PerfProfile:
    """
    Returns `profile` with one (k, m, time) sample per suite plan. Traces only
    depend on (k, m), so each grid cell is simulated once. With `noise`, every
    time is multiplied by a seeded factor drawn from [1 - noise, 1 + noise].
    """
    rng = np.random.default_rng(seed)
    cache: Dict = {}
    samples = []
    for entry in suite:
        key = (entry.k, entry.m)
        if key not in cache:
            plan = finalize_plan(entry.plan)
            trace = trace_of(plan, FxpValue(0, plan.format))
            cache[key] = price_trace(trace, profile.time_dict, profile.vector_exponent)
        cost = cache[key]
        if noise > 0:
            cost *= rng.uniform(1 - noise, 1 + noise)
        samples.append((entry.k, entry.m, cost))
    return profile.with_samples(samples)


def with_simulated_samples(profile: PerfProfile, seed: int = 0) -> PerfProfile:
    # Profiles shipped without timings get one simulated sample per grid cell
    if profile.samples:
        return profile
    return simulate_profile(profile, generate_profiling_suite(repeats=1, seed=seed))
