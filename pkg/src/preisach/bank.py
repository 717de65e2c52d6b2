"""Structure-of-arrays hysteron bank: the aggregate hysteresis model.

A bank holds N relays as four parallel arrays (alphas, betas, weights,
states) plus the most recent input.  One input sample advances every relay
with the branch-free kernel from :mod:`preisach.relay` and returns the
weighted state sum.

Summation is deterministic by contract.  Two reductions are offered:

``serial``
    Left-to-right accumulation in ascending index order; bit-identical to
    the reference aggregate in :mod:`preisach.oracle`.

``tree`` (default)
    Products are padded with zeros to the next power of two and adjacent
    pairs are folded repeatedly.  Chunked evaluation with any worker count
    reduces subtree partials in the same fixed shape, so the result is
    bit-identical regardless of partitioning.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .mesh import DensitySpec, MeshSpec, assign_weights, build_mesh, initial_states
from .relay import HysteronParams, step_state_array
from .trajectory import Trajectory

__all__ = ["HysteronBank", "BankSnapshot", "serial_sum", "tree_sum"]

SUM_MODES = ("tree", "serial")


def serial_sum(values: np.ndarray | Sequence[float]) -> float:
    """Ascending-index left-to-right float accumulation (the reference order)."""
    acc = 0.0
    for v in np.asarray(values, dtype=np.float64).tolist():
        acc += v
    return acc


def _fold_pairs(buf: np.ndarray) -> float:
    # buf length is a power of two; repeatedly add adjacent pairs
    while buf.size > 1:
        buf = buf[0::2] + buf[1::2]
    return float(buf[0])


def _padded_size(n: int) -> int:
    return 1 << int(n - 1).bit_length() if n > 1 else 1


def tree_sum(values: np.ndarray | Sequence[float]) -> float:
    """Fixed-shape pairwise reduction: zero-pad to a power of two, fold adjacent pairs."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        return 0.0
    buf = np.zeros(_padded_size(arr.size))
    buf[: arr.size] = arr
    return _fold_pairs(buf)


@dataclass(frozen=True)
class BankSnapshot:
    """Restorable copy of a bank's mutable state."""

    states: np.ndarray
    x_last: float


class HysteronBank:
    """N weighted relays sharing one input channel.

    The bank owns its arrays; step/run calls are strictly serialized per
    bank (clone one per concurrent run).  Within a step, relay updates are
    independent and may be chunked over ``workers`` threads without
    changing any result bit.
    """

    def __init__(
        self,
        alphas: np.ndarray | Sequence[float],
        betas: np.ndarray | Sequence[float],
        weights: np.ndarray | Sequence[float],
        states: np.ndarray | Sequence[float],
        x_last: float = 0.0,
        sum_mode: str = "tree",
        workers: int = 1,
    ) -> None:
        self._alphas = np.asarray(alphas, dtype=np.float64).copy()
        self._betas = np.asarray(betas, dtype=np.float64).copy()
        self._weights = np.asarray(weights, dtype=np.float64).copy()
        self._states = np.asarray(states, dtype=np.float64).copy()
        n = self._alphas.size
        for name, arr in (("betas", self._betas), ("weights", self._weights), ("states", self._states)):
            if arr.ndim != 1 or arr.size != n:
                raise ValueError(f"{name} must be a 1-D array of length {n}")
        if n < 1:
            raise ValueError("bank needs at least one hysteron")
        if not (np.all(np.isfinite(self._alphas)) and np.all(np.isfinite(self._betas))):
            raise ValueError("thresholds must be finite")
        if np.any(self._alphas < self._betas):
            bad = int(np.argmax(self._alphas < self._betas))
            raise ValueError(f"alpha < beta at index {bad}")
        if not np.all(np.isfinite(self._weights)) or np.any(self._weights < 0.0):
            raise ValueError("weights must be finite and nonnegative")
        if not np.all(np.abs(self._states) == 1.0):
            raise ValueError("states must be exactly -1 or +1")
        if not math.isfinite(x_last):
            raise ValueError(f"x_last must be finite, got {x_last!r}")
        if sum_mode not in SUM_MODES:
            raise ValueError(f"sum_mode must be one of {SUM_MODES}, got {sum_mode!r}")
        if not isinstance(workers, int) or workers < 1:
            raise ValueError(f"workers must be a positive integer, got {workers!r}")
        self._x_last = float(x_last)
        self.sum_mode = sum_mode
        self.workers = workers
        self._prod = np.empty(n)
        self._pool: ThreadPoolExecutor | None = None

    @classmethod
    def from_mesh(
        cls,
        spec: MeshSpec,
        density: DensitySpec | None = None,
        init: str = "negative-saturation",
        x0: float | None = None,
        sum_mode: str = "tree",
        workers: int = 1,
    ) -> "HysteronBank":
        """Build a bank by meshing the threshold triangle."""
        density = density if density is not None else DensitySpec()
        nodes = build_mesh(spec)
        weights = assign_weights(nodes, density)
        alphas = np.array([p.alpha for p in nodes])
        betas = np.array([p.beta for p in nodes])
        x0 = spec.x_min if x0 is None else float(x0)
        states = initial_states(alphas, betas, init, x0)
        return cls(alphas, betas, weights, states, x_last=x0, sum_mode=sum_mode, workers=workers)

    # -- introspection -------------------------------------------------

    @property
    def n(self) -> int:
        return self._alphas.size

    @property
    def alphas(self) -> np.ndarray:
        return self._alphas

    @property
    def betas(self) -> np.ndarray:
        return self._betas

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def states(self) -> np.ndarray:
        return self._states

    @property
    def x_last(self) -> float:
        return self._x_last

    @property
    def total_weight(self) -> float:
        return self._reduce(self._weights)

    def output(self) -> float:
        """Current weighted state sum, without advancing the bank."""
        np.multiply(self._weights, self._states, out=self._prod)
        return self._reduce(self._prod)

    # -- stepping ------------------------------------------------------

    def step(self, x: float) -> float:
        """Advance every relay by one shared input sample; return the sum."""
        if not math.isfinite(x):
            raise ValueError(f"input sample must be finite, got {x!r}")
        xf = float(x)
        if self.workers > 1:
            f = self._step_chunked(xf)
        else:
            step_state_array(self._alphas, self._betas, self._states, xf, out=self._states)
            np.multiply(self._weights, self._states, out=self._prod)
            f = self._reduce(self._prod)
        self._x_last = xf
        return f

    def run(self, xs: Sequence[float] | np.ndarray) -> Trajectory:
        """Feed a sample sequence through :meth:`step`, recording (index, x, f)."""
        xs_arr = np.asarray(xs, dtype=np.float64)
        f_out = np.empty(xs_arr.size)
        for k, x in enumerate(xs_arr.tolist()):
            try:
                f_out[k] = self.step(x)
            except ValueError as exc:
                raise ValueError(f"sample {k}: {exc}") from exc
        return Trajectory(np.arange(xs_arr.size, dtype=np.int64), xs_arr.copy(), f_out)

    # -- snapshotting ----------------------------------------------------

    def snapshot(self) -> BankSnapshot:
        return BankSnapshot(states=self._states.copy(), x_last=self._x_last)

    def restore(self, snap: BankSnapshot) -> None:
        if snap.states.shape != self._states.shape:
            raise ValueError(f"snapshot holds {snap.states.size} states, bank has {self.n}")
        if not np.all(np.abs(snap.states) == 1.0):
            raise ValueError("snapshot states must be exactly -1 or +1")
        self._states[:] = snap.states
        self._x_last = float(snap.x_last)

    def clone(self) -> "HysteronBank":
        return HysteronBank(
            self._alphas,
            self._betas,
            self._weights,
            self._states,
            x_last=self._x_last,
            sum_mode=self.sum_mode,
            workers=self.workers,
        )

    def close(self) -> None:
        """Shut down the worker pool, if one was started."""
        if self._pool is not None:
            self._pool.shutdown(wait=True)
            self._pool = None

    def __enter__(self) -> "HysteronBank":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- internals -------------------------------------------------------

    def _reduce(self, products: np.ndarray) -> float:
        if self.sum_mode == "serial":
            return serial_sum(products)
        return tree_sum(products)

    def _step_chunked(self, x: float) -> float:
        """Chunk the relay update over threads; reduce partials in tree order.

        Chunk boundaries are aligned to subtrees of the padded reduction,
        so the folded partials reproduce the single-threaded tree sum
        bit-for-bit.
        """
        n = self.n
        m = _padded_size(n)
        chunks = 1 << max(0, self.workers - 1).bit_length()
        chunks = min(chunks, m)
        size = m // chunks
        if self._pool is None:
            self._pool = ThreadPoolExecutor(max_workers=self.workers)
        partials = np.zeros(chunks)

        def work(c: int) -> None:
            lo = c * size
            hi = min(lo + size, n)
            if lo >= n:
                return
            sl = slice(lo, hi)
            step_state_array(self._alphas[sl], self._betas[sl], self._states[sl], x, out=self._states[sl])
            np.multiply(self._weights[sl], self._states[sl], out=self._prod[sl])
            if hi - lo == size:
                chunk = self._prod[sl]
            else:
                chunk = np.zeros(size)
                chunk[: hi - lo] = self._prod[sl]
            partials[c] = _fold_pairs(chunk)

        list(self._pool.map(work, range(chunks)))
        if self.sum_mode == "serial":
            return serial_sum(self._prod)
        return _fold_pairs(partials)
