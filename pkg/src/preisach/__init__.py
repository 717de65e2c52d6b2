"""Scalar Preisach hysteresis engine.

Banks of algebraic non-ideal relays (hysterons) updated per input sample
with branch-free array arithmetic, aggregated into the classical weighted
hysteresis model with deterministic summation, plus reference
implementations, signal generators, a benchmark harness, and a CLI.
"""

from .bank import BankSnapshot, HysteronBank, serial_sum, tree_sum
from .bench import BenchReport, bench_bank
from .config import ConfigError, ExperimentConfig, ModelConfig, OutputConfig, load_config
from .mesh import DensitySpec, MeshSpec, assign_weights, build_mesh, initial_states
from .presets import PRESETS, preset_config
from .relay import HysteronParams, relay_init, relay_step, step_state_array
from .signals import SignalSpec, generate, resample_piecewise_linear
from .trajectory import Trajectory

__version__ = "0.1.0"

__all__ = [
    "BankSnapshot",
    "BenchReport",
    "ConfigError",
    "DensitySpec",
    "ExperimentConfig",
    "HysteronBank",
    "HysteronParams",
    "MeshSpec",
    "ModelConfig",
    "OutputConfig",
    "PRESETS",
    "SignalSpec",
    "Trajectory",
    "assign_weights",
    "bench_bank",
    "build_mesh",
    "generate",
    "initial_states",
    "load_config",
    "preset_config",
    "relay_init",
    "relay_step",
    "resample_piecewise_linear",
    "serial_sum",
    "step_state_array",
    "tree_sum",
    "__version__",
]
