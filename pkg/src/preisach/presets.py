"""Built-in experiment presets.

Each preset fixes every free parameter so one CLI invocation reproduces a
canonical experiment:

``fig5``
    80-level mesh (3240 hysterons), uniform density, decaying sinusoid.
    The drive's unstated knobs are pinned here: amplitude 1.365 makes the
    first upswing and downswing both pass beyond the mesh range, fully
    saturating the bank in either direction before the envelope contracts,
    and decay 0.35/s over 8 periods keeps every later period crossing
    fresh mesh levels while its output extrema shrink toward the origin.

``fig6a``
    20-level mesh (210 hysterons), 1 Hz sinusoid sampled at 2 kHz for
    120 s: 120 identical full-range loops after the first traversal.
    Amplitude 1.05 overshoots the mesh corners on purpose: the degenerate
    diagonal relay at (1, 1) resolves an input exactly on its shared
    threshold to -1, so only a drive passing beyond the corner saturates
    the whole bank and lets the output reach +1.

``fig6b``
    Same bank driven by seeded white noise low-passed at 10 Hz for 120 s.
    The pre-filter amplitude 10 is a documented choice: the one-pole
    filter attenuates a 2 kHz uniform source so strongly that a unit
    amplitude would barely wiggle the model; 10 gives excursions over most
    of the loop interior.
"""

from __future__ import annotations

from .config import ConfigError, ExperimentConfig

__all__ = ["PRESETS", "preset_config"]

PRESETS: dict[str, dict] = {
    "fig5": {
        "model": {
            "x_min": -1.0,
            "x_max": 1.0,
            "levels": 80,
            "density": {"kind": "uniform"},
            "init": "negative-saturation",
            "x0": -1.0,
        },
        "signal": {
            "kind": "decaying-sinusoid",
            "amplitude": 1.365,
            "frequency_hz": 1.0,
            "decay": 0.35,
            "sample_rate_hz": 2000.0,
            "duration_s": 8.0,
        },
        "output": {"path": "fig5.csv", "format": "csv", "decimation": 1},
    },
    "fig6a": {
        "model": {
            "x_min": -1.0,
            "x_max": 1.0,
            "levels": 20,
            "density": {"kind": "uniform"},
            "init": "negative-saturation",
            "x0": -1.0,
        },
        "signal": {
            "kind": "sinusoid",
            "amplitude": 1.05,
            "frequency_hz": 1.0,
            "decay": 0.0,
            "sample_rate_hz": 2000.0,
            "duration_s": 120.0,
        },
        "output": {"path": "fig6a.csv", "format": "csv", "decimation": 1},
    },
    "fig6b": {
        "model": {
            "x_min": -1.0,
            "x_max": 1.0,
            "levels": 20,
            "density": {"kind": "uniform"},
            "init": "negative-saturation",
            "x0": -1.0,
        },
        "signal": {
            "kind": "filtered-noise",
            "amplitude": 10.0,
            "sample_rate_hz": 2000.0,
            "duration_s": 120.0,
            "cutoff_hz": 10.0,
            "seed": 7,
        },
        "output": {"path": "fig6b.csv", "format": "csv", "decimation": 1},
    },
}


def preset_config(name: str) -> ExperimentConfig:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r} (available: {', '.join(sorted(PRESETS))})")
    return ExperimentConfig.from_dict(PRESETS[name])
