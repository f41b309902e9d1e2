"""Benchmark machinery: seeded synthetic data and repeat-averaged fit timing.

Timing wraps the fit call only (kernel construction plus solve) with a
monotonic wall clock. Repeats run sequentially and no warm-up pass is
performed, so the first repeat can include JIT compilation and cache
effects.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .backend import active_backend
from .kernel_ridge import KernelRidgeConfig, krr_fit

# default seed for synthetic benchmark data; fixed so runs are comparable
DEFAULT_SEED = 12345


@dataclass(frozen=True)
class BenchRecord:
    """One measurement: sample size, backend label, mean fit seconds, repeat count."""

    n: int
    method: str
    fit_time_s: float
    repeats: int


def gen_synthetic(n: int, d: int, seed: int = DEFAULT_SEED):
    """Inputs uniform on [0, 1)^d, responses standard normal; pure in (n, d, seed)."""
    if n < 1 or d < 1:
        raise ValueError(f"n and d must be >= 1, got n={n}, d={d}.")
    rng = np.random.default_rng(seed)
    x = rng.random((n, d))
    y = rng.standard_normal(n)
    return x, y


def time_fit(
    x,
    y,
    config: KernelRidgeConfig,
    repeats: int,
    clock=time.perf_counter,
    method: str | None = None,
) -> BenchRecord:
    """Mean wall-clock seconds over `repeats` fresh fits of (x, y).

    `clock` is injectable for testing; production uses time.perf_counter.
    The method label defaults to the active backend name.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}.")
    durations = []
    for _ in range(repeats):
        start = clock()
        krr_fit(x, y, config)
        end = clock()
        durations.append(end - start)
    label = method if method is not None else active_backend()
    return BenchRecord(
        n=np.asarray(x).shape[0],
        method=label,
        fit_time_s=sum(durations) / len(durations),
        repeats=repeats,
    )
