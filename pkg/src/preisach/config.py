"""Experiment configuration: JSON schema, validation, canonical dumps.

A config document has three sections::

    {
      "model":  {"x_min": -1.0, "x_max": 1.0, "levels": 20,
                 "density": {"kind": "uniform"},
                 "init": "negative-saturation", "x0": -1.0},
      "signal": {"kind": "sinusoid", "amplitude": 1.0, "frequency_hz": 1.0,
                 "sample_rate_hz": 2000.0, "duration_s": 120.0},
      "output": {"path": "run.csv", "format": "csv", "decimation": 1}
    }

Validation failures raise :class:`ConfigError` carrying a dotted field
path, which the CLI surfaces verbatim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .bank import HysteronBank
from .mesh import INIT_PRESETS, DensitySpec, MeshSpec
from .signals import SIGNAL_KINDS, SignalSpec

__all__ = ["ConfigError", "ModelConfig", "OutputConfig", "ExperimentConfig", "load_config"]

OUTPUT_FORMATS = ("csv", "json")


class ConfigError(Exception):
    """A configuration document failed to parse or validate."""


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise ConfigError(f"{where}.{key}: missing required field")
    return d[key]


def _reject_unknown(d: dict, allowed: tuple, where: str) -> None:
    for key in d:
        if key not in allowed:
            raise ConfigError(f"{where}.{key}: unknown field (allowed: {', '.join(allowed)})")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _integer(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}: expected an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ModelConfig:
    """Bank construction parameters, the canonical serializable fragment."""

    x_min: float
    x_max: float
    levels: int
    density: DensitySpec = field(default_factory=DensitySpec)
    init: str = "negative-saturation"
    x0: float = 0.0

    @classmethod
    def from_dict(cls, d: dict, where: str = "model") -> "ModelConfig":
        if not isinstance(d, dict):
            raise ConfigError(f"{where}: expected an object")
        _reject_unknown(d, ("x_min", "x_max", "levels", "density", "init", "x0"), where)
        density_d = d.get("density", {"kind": "uniform"})
        if not isinstance(density_d, dict):
            raise ConfigError(f"{where}.density: expected an object")
        _reject_unknown(density_d, ("kind", "table"), f"{where}.density")
        kind = density_d.get("kind", "uniform")
        table = density_d.get("table")
        init = d.get("init", "negative-saturation")
        if init not in INIT_PRESETS:
            raise ConfigError(f"{where}.init: unknown preset {init!r} (allowed: {', '.join(INIT_PRESETS)})")
        try:
            density = DensitySpec(kind=kind, table=tuple(table) if table is not None else None)
            mesh = MeshSpec(
                x_min=_number(_require(d, "x_min", where), f"{where}.x_min"),
                x_max=_number(_require(d, "x_max", where), f"{where}.x_max"),
                levels=_integer(_require(d, "levels", where), f"{where}.levels"),
            )
        except ValueError as exc:
            raise ConfigError(f"{where}: {exc}") from exc
        return cls(
            x_min=mesh.x_min,
            x_max=mesh.x_max,
            levels=mesh.levels,
            density=density,
            init=init,
            x0=_number(d.get("x0", 0.0), f"{where}.x0"),
        )

    def to_dict(self) -> dict:
        density: dict = {"kind": self.density.kind}
        if self.density.table is not None:
            density["table"] = list(self.density.table)
        return {
            "x_min": self.x_min,
            "x_max": self.x_max,
            "levels": self.levels,
            "density": density,
            "init": self.init,
            "x0": self.x0,
        }

    @property
    def mesh(self) -> MeshSpec:
        return MeshSpec(self.x_min, self.x_max, self.levels)

    def make_bank(self, sum_mode: str = "tree", workers: int = 1) -> HysteronBank:
        try:
            return HysteronBank.from_mesh(
                self.mesh, self.density, init=self.init, x0=self.x0, sum_mode=sum_mode, workers=workers
            )
        except ValueError as exc:
            raise ConfigError(f"model: {exc}") from exc


_SIGNAL_FIELDS = (
    "kind",
    "amplitude",
    "frequency_hz",
    "decay",
    "sample_rate_hz",
    "duration_s",
    "cutoff_hz",
    "seed",
    "path",
)


def signal_from_dict(d: dict, where: str = "signal") -> SignalSpec:
    if not isinstance(d, dict):
        raise ConfigError(f"{where}: expected an object")
    _reject_unknown(d, _SIGNAL_FIELDS, where)
    kind = _require(d, "kind", where)
    if kind not in SIGNAL_KINDS:
        raise ConfigError(f"{where}.kind: unknown kind {kind!r} (allowed: {', '.join(SIGNAL_KINDS)})")
    kwargs: dict = {"kind": kind}
    for name in ("amplitude", "frequency_hz", "decay", "sample_rate_hz", "duration_s", "cutoff_hz"):
        if name in d:
            kwargs[name] = _number(d[name], f"{where}.{name}")
    if "seed" in d:
        kwargs["seed"] = _integer(d["seed"], f"{where}.seed")
    if "path" in d:
        if not isinstance(d["path"], str):
            raise ConfigError(f"{where}.path: expected a string")
        kwargs["path"] = d["path"]
    try:
        return SignalSpec(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def signal_to_dict(spec: SignalSpec) -> dict:
    d: dict = {"kind": spec.kind}
    if spec.kind in ("sinusoid", "decaying-sinusoid", "filtered-noise"):
        d["amplitude"] = spec.amplitude
        d["sample_rate_hz"] = spec.sample_rate_hz
        d["duration_s"] = spec.duration_s
    if spec.kind in ("sinusoid", "decaying-sinusoid"):
        d["frequency_hz"] = spec.frequency_hz
        d["decay"] = spec.decay
    if spec.kind == "filtered-noise":
        d["cutoff_hz"] = spec.cutoff_hz
        d["seed"] = spec.seed
    if spec.kind == "piecewise-linear":
        d["sample_rate_hz"] = spec.sample_rate_hz
    if spec.kind in ("file-replay", "piecewise-linear"):
        d["path"] = spec.path
    return d


@dataclass(frozen=True)
class OutputConfig:
    path: str | None = None
    format: str = "csv"
    decimation: int = 1

    @classmethod
    def from_dict(cls, d: dict, where: str = "output") -> "OutputConfig":
        if not isinstance(d, dict):
            raise ConfigError(f"{where}: expected an object")
        _reject_unknown(d, ("path", "format", "decimation"), where)
        fmt = d.get("format", "csv")
        if fmt not in OUTPUT_FORMATS:
            raise ConfigError(f"{where}.format: expected one of {OUTPUT_FORMATS}, got {fmt!r}")
        decimation = _integer(d.get("decimation", 1), f"{where}.decimation")
        if decimation < 1:
            raise ConfigError(f"{where}.decimation: must be >= 1, got {decimation}")
        path = d.get("path")
        if path is not None and not isinstance(path, str):
            raise ConfigError(f"{where}.path: expected a string")
        return cls(path=path, format=fmt, decimation=decimation)

    def to_dict(self) -> dict:
        d: dict = {"format": self.format, "decimation": self.decimation}
        if self.path is not None:
            d["path"] = self.path
        return d


@dataclass(frozen=True)
class ExperimentConfig:
    model: ModelConfig
    signal: SignalSpec
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        if not isinstance(d, dict):
            raise ConfigError("top level: expected an object")
        _reject_unknown(d, ("model", "signal", "output"), "config")
        model = ModelConfig.from_dict(_require(d, "model", "config"))
        signal = signal_from_dict(_require(d, "signal", "config"))
        output = OutputConfig.from_dict(d.get("output", {}))
        return cls(model=model, signal=signal, output=output)

    def to_dict(self) -> dict:
        return {
            "model": self.model.to_dict(),
            "signal": signal_to_dict(self.signal),
            "output": self.output.to_dict(),
        }

    def dump_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse and validate a JSON config file."""
    try:
        with open(path, "r") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    return ExperimentConfig.from_dict(doc)
