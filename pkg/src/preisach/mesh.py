"""Discretization of the threshold triangle and weight assignment.

The admissible threshold pairs form the half-plane ``alpha >= beta``
clipped to the input range: a right triangle with its hypotenuse on
``alpha == beta`` and the right angle at ``(x_max, x_min)``.  A mesh with
``n`` levels per axis keeps the ``n*(n+1)/2`` grid nodes inside that
triangle (diagonal included), so 20 levels give 210 hysterons and 80
levels give 3240.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .relay import HysteronParams

__all__ = [
    "MeshSpec",
    "DensitySpec",
    "INIT_PRESETS",
    "build_mesh",
    "assign_weights",
    "initial_states",
]

INIT_PRESETS = ("negative-saturation", "positive-saturation", "demagnetized", "from-input")


@dataclass(frozen=True)
class MeshSpec:
    """Uniform mesh: ``levels`` threshold values spanning [x_min, x_max]."""

    x_min: float
    x_max: float
    levels: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("mesh range must be finite")
        if self.x_min >= self.x_max:
            raise ValueError(f"x_min must be < x_max, got [{self.x_min}, {self.x_max}]")
        if not isinstance(self.levels, int) or self.levels < 1:
            raise ValueError(f"levels must be a positive integer, got {self.levels!r}")

    @property
    def node_count(self) -> int:
        return self.levels * (self.levels + 1) // 2


@dataclass(frozen=True)
class DensitySpec:
    """Weight rule over mesh nodes: equal weights or an explicit table."""

    kind: str = "uniform"
    table: Sequence[float] | None = field(default=None)

    def __post_init__(self) -> None:
        if self.kind not in ("uniform", "table"):
            raise ValueError(f"density kind must be 'uniform' or 'table', got {self.kind!r}")
        if self.kind == "table" and self.table is None:
            raise ValueError("table density requires a weight table")
        if self.kind == "uniform" and self.table is not None:
            raise ValueError("uniform density takes no weight table")


def build_mesh(spec: MeshSpec) -> list[HysteronParams]:
    """The triangle's grid nodes in a fixed order.

    Rows run over alpha from x_max down to x_min; within a row beta ascends
    from x_min up to the row's alpha.  The order is part of the contract:
    weights, states and table densities are positional.
    """
    lv = np.linspace(spec.x_min, spec.x_max, spec.levels)
    nodes = []
    for i in range(spec.levels - 1, -1, -1):
        alpha = float(lv[i])
        for j in range(i + 1):
            nodes.append(HysteronParams(alpha=alpha, beta=float(lv[j])))
    return nodes


def assign_weights(nodes: Sequence[HysteronParams], density: DensitySpec) -> np.ndarray:
    """Per-node nonnegative weights.

    Uniform density returns 1/N everywhere so the aggregate output spans
    exactly [-1, +1] when every relay saturates.  Table density passes the
    supplied values through positionally.
    """
    n = len(nodes)
    if n < 1:
        raise ValueError("need at least one node")
    if density.kind == "uniform":
        return np.full(n, 1.0 / n, dtype=np.float64)
    table = np.asarray(density.table, dtype=np.float64)
    if table.shape != (n,):
        raise ValueError(f"weight table has {table.size} entries for {n} nodes")
    if not np.all(np.isfinite(table)):
        raise ValueError("weight table entries must be finite")
    if np.any(table < 0.0):
        raise ValueError("weight table entries must be nonnegative")
    return table.copy()


def initial_states(
    alphas: np.ndarray,
    betas: np.ndarray,
    preset: str,
    x0: float,
) -> np.ndarray:
    """Initial ±1 state array for a named preset.

    ``demagnetized`` signs each relay against alpha+beta (ties resolve to
    -1), which alternates states across the triangle and nets out near zero
    for symmetric meshes.  ``from-input`` saturates relays whose band does
    not contain ``x0`` and defaults the rest to -1.
    """
    if preset not in INIT_PRESETS:
        raise ValueError(f"unknown init preset {preset!r}; choose from {INIT_PRESETS}")
    if not math.isfinite(x0):
        raise ValueError(f"x0 must be finite, got {x0!r}")
    n = len(alphas)
    if preset == "negative-saturation":
        return np.full(n, -1.0)
    if preset == "positive-saturation":
        return np.full(n, 1.0)
    if preset == "demagnetized":
        return np.where(alphas + betas < 0.0, 1.0, -1.0)
    # from-input: down branch first, mirroring the relay tie convention
    return np.where(x0 <= betas, -1.0, np.where(x0 >= alphas, 1.0, -1.0))
