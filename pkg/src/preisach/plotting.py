"""Figure rendering for run outputs.

Headless by construction: figures go straight to files next to the
delimited trajectory, never to a window.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .trajectory import Trajectory

__all__ = ["save_trajectory_figure"]


def save_trajectory_figure(traj: Trajectory, path: str | Path, title: str | None = None) -> None:
    """Render the hysteresis loop plus input/output time series to ``path``."""
    fig, (ax_loop, ax_time) = plt.subplots(1, 2, figsize=(11, 4.5))

    ax_loop.plot(traj.x, traj.f, lw=0.6, color="tab:blue")
    ax_loop.set_xlabel("input x")
    ax_loop.set_ylabel("output f")
    ax_loop.set_title("hysteresis loops")
    ax_loop.grid(True, alpha=0.3)

    ax_time.plot(traj.index, traj.x, lw=0.6, color="tab:gray", label="x")
    ax_time.plot(traj.index, traj.f, lw=0.6, color="tab:blue", label="f")
    ax_time.set_xlabel("sample index")
    ax_time.set_title("time series")
    ax_time.legend(loc="upper right")
    ax_time.grid(True, alpha=0.3)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
