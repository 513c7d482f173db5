"""Scaling benchmark: fast algorithms against the classical linear system.

Instances have ``M`` distinct linear factors over ``F_p``.  Each run is
timed and its field multiplications counted through a :class:`CountingField`.
"""

from __future__ import annotations

import csv
import math
import random
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Sequence, TextIO

from .fields import CountingField, PrimeField
from .generators import distinct_linear_instance
from .oracle import classical_pfd
from .pfd_linear import pfd_split
from .pfd_quotient import pfd_general

DEFAULT_PRIME = 18446744073709551557  # largest prime below 2^64
ALGORITHMS = ("fast_split", "fast_general", "classical")
CSV_COLUMNS = ("M", "algorithm", "trial", "wall_ns", "field_muls")


@dataclass(frozen=True)
class BenchRecord:
    M: int
    algorithm: str
    trial: int
    wall_ns: int
    field_muls: int


def _run(algorithm, N, den):
    if algorithm == "fast_split":
        return pfd_split(N, den)
    if algorithm == "fast_general":
        return pfd_general(N, den.to_factored())
    if algorithm == "classical":
        return classical_pfd(N, den.to_factored())
    raise ValueError(f"unknown algorithm {algorithm!r}")


def run_bench(
    sizes: Sequence[int],
    trials: int = 3,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    algorithms: Sequence[str] = ALGORITHMS,
) -> List[BenchRecord]:
    """One record per (M, algorithm, trial); all algorithms see the same instance."""
    base = PrimeField(prime)
    rng = random.Random(seed)
    records = []
    for M in sizes:
        for trial in range(trials):
            K = CountingField(base)
            N, den = distinct_linear_instance(K, M, rng)
            for alg in algorithms:
                K.reset()
                t0 = time.perf_counter_ns()
                _run(alg, N, den)
                wall = time.perf_counter_ns() - t0
                records.append(BenchRecord(M, alg, trial, wall, K.muls))
    return records


def loglog_slope(xs: Iterable[float], ys: Iterable[float]) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    return statistics.linear_regression(lx, ly).slope


def fit_slopes(records: Sequence[BenchRecord], metric: str = "field_muls") -> Dict[str, float]:
    """Per-algorithm log-log slope of the mean ``metric`` against ``M``."""
    out = {}
    for alg in dict.fromkeys(r.algorithm for r in records):
        by_m: Dict[int, List[int]] = {}
        for r in records:
            if r.algorithm == alg:
                by_m.setdefault(r.M, []).append(getattr(r, metric))
        if len(by_m) < 2:
            continue
        ms = sorted(by_m)
        out[alg] = loglog_slope(ms, [statistics.fmean(by_m[m]) for m in ms])
    return out


def mean_metric(records: Sequence[BenchRecord], algorithm: str, M: int, metric: str = "wall_ns") -> float:
    return statistics.fmean(getattr(r, metric) for r in records if r.algorithm == algorithm and r.M == M)


def write_csv(records: Sequence[BenchRecord], fh: TextIO) -> None:
    w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(asdict(r))


__all__ = [
    "ALGORITHMS",
    "BenchRecord",
    "CSV_COLUMNS",
    "DEFAULT_PRIME",
    "fit_slopes",
    "loglog_slope",
    "mean_metric",
    "run_bench",
    "write_csv",
]
