"""Throughput benchmarks for the hysteron bank.

Every timed run is checksummed against an untimed single-worker run with
the documented tree reduction; a report is only valid when the two output
streams match bit for bit, which guards against accidentally benchmarking
a kernel that computes something else.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field

import numpy as np

from .bank import HysteronBank
from .mesh import DensitySpec, MeshSpec, build_mesh

__all__ = ["BenchReport", "bench_bank", "make_bench_bank", "sweep_input"]


@dataclass(frozen=True)
class BenchReport:
    n_hysterons: int
    samples: int
    wall_seconds: float
    updates_per_second: float
    workers: int
    samples_per_second: float
    checksum: str
    valid: bool
    repeats_wall_seconds: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "n_hysterons": self.n_hysterons,
            "samples": self.samples,
            "wall_seconds": self.wall_seconds,
            "updates_per_second": self.updates_per_second,
            "workers": self.workers,
            "samples_per_second": self.samples_per_second,
            "checksum": self.checksum,
            "valid": self.valid,
            "repeats_wall_seconds": list(self.repeats_wall_seconds),
        }


def sweep_input(samples: int, x_min: float = -1.0, x_max: float = 1.0, period: int = 1000) -> np.ndarray:
    """Triangle sweep spanning the full range; flips relays on every leg."""
    k = np.arange(samples)
    phase = (k % period) / period
    tri = np.where(phase < 0.5, 2.0 * phase, 2.0 - 2.0 * phase)  # 0 -> 1 -> 0
    return x_min + (x_max - x_min) * tri


def make_bench_bank(n: int, workers: int = 1) -> HysteronBank:
    """Deterministic n-hysteron bank: first n triangle nodes, uniform weights."""
    if n < 1:
        raise ValueError(f"need n >= 1 hysterons, got {n}")
    levels = 1
    while levels * (levels + 1) // 2 < n:
        levels += 1
    nodes = build_mesh(MeshSpec(-1.0, 1.0, levels))[:n]
    alphas = np.array([p.alpha for p in nodes])
    betas = np.array([p.beta for p in nodes])
    weights = np.full(n, 1.0 / n)
    states = np.full(n, -1.0)
    return HysteronBank(alphas, betas, weights, states, x_last=-1.0, workers=workers)


def _checksum(values: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(values).tobytes()).hexdigest()


def bench_bank(
    n: int,
    samples: int,
    workers: int = 1,
    warmup: int = 3,
    repeats: int = 1,
) -> BenchReport:
    """Time ``samples`` bank steps over ``n`` hysterons.

    Runs ``warmup`` untimed passes, then ``repeats`` timed passes and
    reports the median.  The timed output is compared bit-for-bit against
    the single-worker reference before any number is trusted.
    """
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    if repeats < 1:
        raise ValueError(f"need repeats >= 1, got {repeats}")
    xs = sweep_input(samples)

    with make_bench_bank(n, workers=1) as ref_bank:
        reference = _checksum(ref_bank.run(xs).f)

    with make_bench_bank(n, workers=workers) as bank:
        snap0 = bank.snapshot()
        for _ in range(warmup):
            bank.restore(snap0)
            bank.run(xs)
        walls = []
        checksum = ""
        for _ in range(repeats):
            bank.restore(snap0)
            t0 = time.perf_counter()
            traj = bank.run(xs)
            walls.append(time.perf_counter() - t0)
            checksum = _checksum(traj.f)

    wall = float(np.median(walls))
    valid = checksum == reference
    return BenchReport(
        n_hysterons=n,
        samples=samples,
        wall_seconds=wall,
        updates_per_second=n * samples / wall,
        workers=workers,
        samples_per_second=samples / wall,
        checksum=checksum,
        valid=valid,
        repeats_wall_seconds=tuple(walls),
    )
