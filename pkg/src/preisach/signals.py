"""Deterministic input-signal generation and file replay.

All generators are pure functions of their spec: the same spec (seed
included) always yields the same samples, bit for bit.  Time never appears
as a wall clock; a signal is just an indexed sample sequence at a nominal
rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

__all__ = ["SignalSpec", "SIGNAL_KINDS", "generate", "resample_piecewise_linear", "read_replay", "read_points"]

SIGNAL_KINDS = ("sinusoid", "decaying-sinusoid", "filtered-noise", "file-replay", "piecewise-linear")

_GENERATED = ("sinusoid", "decaying-sinusoid", "filtered-noise")


@dataclass(frozen=True)
class SignalSpec:
    """Parameters of one drive signal; unused fields for a kind are ignored.

    Generated kinds (sinusoid, decaying-sinusoid, filtered-noise) produce
    ``round(duration_s * sample_rate_hz)`` samples.  File kinds take their
    sample values (file-replay) or support points (piecewise-linear) from
    ``path``.
    """

    kind: str
    amplitude: float = 1.0
    frequency_hz: float = 1.0
    decay: float = 0.0
    sample_rate_hz: float = 1.0
    duration_s: float = 1.0
    cutoff_hz: float | None = None
    seed: int = 0
    path: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in SIGNAL_KINDS:
            raise ValueError(f"unknown signal kind {self.kind!r}; choose from {SIGNAL_KINDS}")
        if self.kind in _GENERATED:
            if not (math.isfinite(self.amplitude) and self.amplitude > 0):
                raise ValueError(f"amplitude must be positive, got {self.amplitude!r}")
            if not (math.isfinite(self.sample_rate_hz) and self.sample_rate_hz > 0):
                raise ValueError(f"sample_rate_hz must be positive, got {self.sample_rate_hz!r}")
            if not (math.isfinite(self.duration_s) and self.duration_s > 0):
                raise ValueError(f"duration_s must be positive, got {self.duration_s!r}")
            if self.num_samples < 1:
                raise ValueError("duration times sample rate must round to at least one sample")
        if self.kind in ("sinusoid", "decaying-sinusoid"):
            if not (math.isfinite(self.frequency_hz) and self.frequency_hz > 0):
                raise ValueError(f"frequency_hz must be positive, got {self.frequency_hz!r}")
            if not (math.isfinite(self.decay) and self.decay >= 0):
                raise ValueError(f"decay must be >= 0, got {self.decay!r}")
        if self.kind == "filtered-noise":
            if self.cutoff_hz is None or not (math.isfinite(self.cutoff_hz) and self.cutoff_hz > 0):
                raise ValueError(f"cutoff_hz must be positive, got {self.cutoff_hz!r}")
        if self.kind == "piecewise-linear":
            if not (math.isfinite(self.sample_rate_hz) and self.sample_rate_hz > 0):
                raise ValueError(f"sample_rate_hz must be positive, got {self.sample_rate_hz!r}")
        if self.kind in ("file-replay", "piecewise-linear") and not self.path:
            raise ValueError(f"{self.kind} requires a path")

    @property
    def num_samples(self) -> int:
        return int(round(self.duration_s * self.sample_rate_hz))


def generate(spec: SignalSpec) -> np.ndarray:
    """Sample sequence for ``spec``; deterministic, float64."""
    if spec.kind == "sinusoid":
        t = np.arange(spec.num_samples) / spec.sample_rate_hz
        return spec.amplitude * np.sin(2.0 * np.pi * spec.frequency_hz * t)
    if spec.kind == "decaying-sinusoid":
        t = np.arange(spec.num_samples) / spec.sample_rate_hz
        envelope = spec.amplitude * np.exp(-spec.decay * t)
        return envelope * np.sin(2.0 * np.pi * spec.frequency_hz * t)
    if spec.kind == "filtered-noise":
        return _filtered_noise(spec)
    if spec.kind == "file-replay":
        return read_replay(spec.path)
    points = read_points(spec.path)
    return resample_piecewise_linear(points, spec.sample_rate_hz)


def _filtered_noise(spec: SignalSpec) -> np.ndarray:
    """Seeded uniform noise through a one-pole low-pass.

    The recursion is y_k = y_{k-1} + c * (u_k - y_{k-1}) with the exact
    pole coefficient c = 1 - exp(-2*pi*cutoff/fs), started from y = 0.
    """
    rng = np.random.default_rng(spec.seed)
    u = rng.uniform(-spec.amplitude, spec.amplitude, spec.num_samples)
    c = 1.0 - math.exp(-2.0 * math.pi * spec.cutoff_hz / spec.sample_rate_hz)
    out = np.empty(spec.num_samples)
    y = 0.0
    for k, u_k in enumerate(u.tolist()):
        y = y + c * (u_k - y)
        out[k] = y
    return out


def resample_piecewise_linear(points: Sequence[tuple[float, float]], rate_hz: float) -> np.ndarray:
    """Linear interpolation of (t, x) support points at uniform instants.

    Instants are t0 + k/rate up to the final support time, whose exact
    value is appended when the uniform grid does not land on it, so both
    endpoints always survive resampling.  Refining the rate by an integer
    factor keeps the coarse instants (and their samples) bit-identical.
    """
    if not (math.isfinite(rate_hz) and rate_hz > 0):
        raise ValueError(f"rate_hz must be positive, got {rate_hz!r}")
    if len(points) < 2:
        raise ValueError("need at least two support points")
    ts = np.asarray([p[0] for p in points], dtype=np.float64)
    xs = np.asarray([p[1] for p in points], dtype=np.float64)
    if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(xs))):
        raise ValueError("support points must be finite")
    if np.any(np.diff(ts) <= 0):
        raise ValueError("support times must be strictly increasing")
    t0 = float(ts[0])
    t1 = float(ts[-1])
    count = int(math.floor((t1 - t0) * rate_hz)) + 1
    grid = t0 + np.arange(count) / rate_hz
    if grid[-1] > t1:
        # guard against float overshoot of floor() near an exact multiple
        grid = grid[grid <= t1]
    if grid[-1] != t1:
        grid = np.append(grid, t1)
    return np.interp(grid, ts, xs)


def read_replay(path: str | Path) -> np.ndarray:
    """One plain decimal sample per line; anything else is rejected."""
    values = []
    with open(path, "r") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                v = float(text)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a decimal sample: {text!r}") from None
            if not math.isfinite(v):
                raise ValueError(f"{path}:{lineno}: sample must be finite, got {text!r}")
            values.append(v)
    if not values:
        raise ValueError(f"{path}: no samples found")
    return np.asarray(values, dtype=np.float64)


def read_points(path: str | Path) -> list[tuple[float, float]]:
    """CSV of "t,x" rows; a single header line is allowed."""
    points: list[tuple[float, float]] = []
    with open(path, "r") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            parts = text.split(",")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 't,x', got {text!r}")
            try:
                t, x = float(parts[0]), float(parts[1])
            except ValueError:
                if lineno == 1:
                    continue  # header
                raise ValueError(f"{path}:{lineno}: not a numeric 't,x' row: {text!r}") from None
            if not (math.isfinite(t) and math.isfinite(x)):
                raise ValueError(f"{path}:{lineno}: values must be finite")
            points.append((t, x))
    if len(points) < 2:
        raise ValueError(f"{path}: need at least two support points")
    return points
