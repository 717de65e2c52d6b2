"""Reference relay and aggregate model for validation.

Everything here is written for obviousness, not speed: explicit branches,
plain serial loops, no code shared with the production kernel.  The branch
structure is the textbook relay definition (switch down at or below
``beta``, switch up at or above ``alpha``, otherwise hold), which is what
the algebraic kernel in :mod:`preisach.relay` must reproduce exactly.
"""

from __future__ import annotations

import math
from typing import Sequence

from .trajectory import Trajectory

__all__ = ["OracleRelay", "relay_sequence", "model_run"]


class OracleRelay:
    """One relay with explicitly branched state transitions."""

    def __init__(self, alpha: float, beta: float, state: float) -> None:
        if not (math.isfinite(alpha) and math.isfinite(beta)):
            raise ValueError("thresholds must be finite")
        if alpha < beta:
            raise ValueError(f"alpha must be >= beta, got {alpha} < {beta}")
        if state != 1.0 and state != -1.0:
            raise ValueError(f"state must be -1 or +1, got {state!r}")
        self.alpha = alpha
        self.beta = beta
        self.state = float(state)

    def step(self, x: float) -> float:
        if not math.isfinite(x):
            raise ValueError(f"input sample must be finite, got {x!r}")
        if x <= self.beta:
            self.state = -1.0
        elif x >= self.alpha:
            self.state = 1.0
        # in the open band the state is held as-is
        return self.state


def relay_sequence(alpha: float, beta: float, y0: float, xs: Sequence[float]) -> list[float]:
    """State sequence of one relay driven by ``xs``, starting from ``y0``.

    Same semantics as repeatedly calling :meth:`OracleRelay.step`; the loop
    is inlined so large validation sweeps stay cheap without giving up the
    branch-per-case form.
    """
    relay = OracleRelay(alpha, beta, y0)  # reuse the constructor's checks
    a, b, y = relay.alpha, relay.beta, relay.state
    out = []
    append = out.append
    for x in xs:
        if x <= b:
            y = -1.0
        elif x >= a:
            y = 1.0
        append(y)
    return out


def model_run(relays: Sequence[OracleRelay], weights: Sequence[float], xs: Sequence[float]) -> Trajectory:
    """Weighted-sum aggregate of many reference relays.

    Per sample, every relay is stepped and the output accumulates
    ``weights[i] * state[i]`` serially in ascending index order; that fixed
    order is the reference any other summation scheme is compared against.
    """
    if len(relays) != len(weights):
        raise ValueError(f"got {len(relays)} relays but {len(weights)} weights")
    ws = [float(w) for w in weights]
    index = []
    x_out = []
    f_out = []
    for k, x in enumerate(xs):
        xf = float(x)
        acc = 0.0
        for i, relay in enumerate(relays):
            acc += ws[i] * relay.step(xf)
        index.append(k)
        x_out.append(xf)
        f_out.append(acc)
    return Trajectory.from_columns(index, x_out, f_out)
