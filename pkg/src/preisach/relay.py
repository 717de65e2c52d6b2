"""Algebraic non-ideal relay (hysteron) kernel.

A hysteron is a two-state operator parameterized by an up-switching
threshold ``alpha`` and a down-switching threshold ``beta <= alpha``.
Inputs at or above ``alpha`` force the state to +1, inputs at or below
``beta`` force it to -1, and inputs strictly between the thresholds hold
the previous state.  The update is expressed as a branch-free min/max/sign
composition so that banks of hysterons can be advanced with flat array
arithmetic (see :mod:`preisach.bank`).

Boundary convention: the down branch uses a sign that maps zero to -1 and
the up branch uses a sign that maps zero to +1, so both threshold
equalities switch.  For the degenerate ``alpha == beta`` relay an input
exactly at the shared threshold therefore resolves to -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["HysteronParams", "relay_step", "relay_init", "step_state_array"]


@dataclass(frozen=True)
class HysteronParams:
    """Thresholds of one relay; ``alpha`` switches up, ``beta`` switches down."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValueError(f"thresholds must be finite, got alpha={self.alpha}, beta={self.beta}")
        if self.alpha < self.beta:
            raise ValueError(f"alpha must be >= beta, got alpha={self.alpha} < beta={self.beta}")


def _check_state(value: float) -> None:
    if value != 1.0 and value != -1.0:
        raise ValueError(f"relay state must be -1 or +1, got {value!r}")


def relay_step(params: HysteronParams, prev: float, x: float) -> float:
    """Advance one relay by a single input sample.

    Computes ``min(sgn-(x - beta), max(prev, sgn+(x - alpha)))`` where
    ``sgn+`` maps zero to +1 and ``sgn-`` maps zero to -1.  Returns the new
    state, always exactly -1.0 or +1.0.
    """
    _check_state(prev)
    if not math.isfinite(x):
        raise ValueError(f"input sample must be finite, got {x!r}")
    up = 1.0 if x >= params.alpha else -1.0
    held = prev if prev >= up else up
    down = 1.0 if x > params.beta else -1.0
    return down if down <= held else held


def relay_init(params: HysteronParams, x0: float, in_band_default: float) -> float:
    """Initial relay state for a starting input ``x0``.

    Saturated when ``x0`` sits at or beyond a threshold; otherwise the
    caller-supplied ``in_band_default`` (which must itself be -1 or +1).
    The down threshold is checked first so the degenerate ``alpha == beta``
    relay resolves ties the same way :func:`relay_step` does.
    """
    _check_state(in_band_default)
    if not math.isfinite(x0):
        raise ValueError(f"initial input must be finite, got {x0!r}")
    if x0 <= params.beta:
        return -1.0
    if x0 >= params.alpha:
        return 1.0
    return in_band_default


def step_state_array(
    alphas: np.ndarray,
    betas: np.ndarray,
    states: np.ndarray,
    x: float,
    out: np.ndarray | None = None,
) -> np.ndarray:
    """Vectorized :func:`relay_step` over parallel threshold/state arrays.

    States are carried as full-width floats (-1.0/+1.0) so the whole update
    is elementwise arithmetic on one dtype.  Returns the new state array;
    ``out`` may alias ``states``.
    """
    up = np.where(x >= alphas, 1.0, -1.0)
    np.maximum(states, up, out=up)
    down = np.where(x > betas, 1.0, -1.0)
    return np.minimum(down, up, out=out)
