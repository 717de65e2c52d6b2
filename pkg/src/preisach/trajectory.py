"""Time-indexed (index, x, f) record of a model run, with CSV/JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

__all__ = ["Trajectory"]

CSV_HEADER = "index,x,f"


@dataclass(frozen=True)
class Trajectory:
    """Columnar run record: sample index, input x, model output f."""

    index: np.ndarray
    x: np.ndarray
    f: np.ndarray

    def __post_init__(self) -> None:
        if not (len(self.index) == len(self.x) == len(self.f)):
            raise ValueError("trajectory columns must have equal length")
        if len(self.index) > 1 and not np.all(np.diff(self.index) > 0):
            raise ValueError("sample indices must be strictly increasing")

    @classmethod
    def from_columns(
        cls,
        index: Sequence[int],
        x: Sequence[float],
        f: Sequence[float],
    ) -> "Trajectory":
        return cls(
            np.asarray(index, dtype=np.int64),
            np.asarray(x, dtype=np.float64),
            np.asarray(f, dtype=np.float64),
        )

    def __len__(self) -> int:
        return len(self.index)

    def decimate(self, k: int) -> "Trajectory":
        """Every k-th row, keeping original index values."""
        if k < 1:
            raise ValueError(f"decimation must be >= 1, got {k}")
        return Trajectory(self.index[::k], self.x[::k], self.f[::k])

    def summary(self) -> dict:
        return {
            "samples": int(len(self)),
            "x_min": float(self.x.min()) if len(self) else None,
            "x_max": float(self.x.max()) if len(self) else None,
            "f_min": float(self.f.min()) if len(self) else None,
            "f_max": float(self.f.max()) if len(self) else None,
        }

    def write_csv(self, path: str | Path) -> None:
        # repr() of a Python float is the shortest round-trip form; locale
        # never enters, and newline='' pins '\n' endings on every platform.
        with open(path, "w", newline="") as fh:
            fh.write(CSV_HEADER + "\n")
            for i, xv, fv in zip(self.index.tolist(), self.x.tolist(), self.f.tolist()):
                fh.write(f"{i},{xv!r},{fv!r}\n")

    def write_json(self, path: str | Path) -> None:
        doc = {
            "index": self.index.tolist(),
            "x": self.x.tolist(),
            "f": self.f.tolist(),
        }
        with open(path, "w", newline="") as fh:
            json.dump(doc, fh)
            fh.write("\n")

    @classmethod
    def read_csv(cls, path: str | Path) -> "Trajectory":
        with open(path, "r", newline="") as fh:
            header = fh.readline().strip()
            if header != CSV_HEADER:
                raise ValueError(f"unexpected CSV header {header!r}")
            index = []
            x = []
            f = []
            for line in fh:
                parts = line.strip().split(",")
                if len(parts) != 3:
                    raise ValueError(f"malformed CSV row {line!r}")
                index.append(int(parts[0]))
                x.append(float(parts[1]))
                f.append(float(parts[2]))
        return cls.from_columns(index, x, f)

    @classmethod
    def read_json(cls, path: str | Path) -> "Trajectory":
        with open(path, "r") as fh:
            doc = json.load(fh)
        return cls.from_columns(doc["index"], doc["x"], doc["f"])
