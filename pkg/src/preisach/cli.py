"""Command-line front end: run experiments, verify against the reference
model, and benchmark throughput.

Exit codes: 0 success, 2 config error, 3 verification (or checksum)
mismatch, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

import numpy as np

from .bench import bench_bank
from .config import ConfigError, ExperimentConfig, load_config
from .oracle import OracleRelay, model_run
from .presets import PRESETS, preset_config
from .signals import generate
from .trajectory import Trajectory

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MISMATCH = 3
EXIT_IO = 4


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="PATH", help="JSON experiment config")
    sub.add_argument("--preset", metavar="NAME", help=f"built-in preset ({', '.join(sorted(PRESETS))})")
    sub.add_argument("--out", metavar="PATH", help="output path (overrides config)")
    sub.add_argument("--seed", type=int, metavar="U64", help="seed override")
    sub.add_argument("--decimate", type=int, metavar="K", help="output decimation (overrides config)")
    sub.add_argument("--dump-config", action="store_true", help="print the resolved config JSON and exit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="preisach", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_run = subs.add_parser("run", help="run an experiment and export the trajectory")
    _add_common(p_run)
    p_run.add_argument("--no-plot", action="store_true", help="skip the figure next to the trajectory file")
    p_run.set_defaults(func=cmd_run)

    p_verify = subs.add_parser("verify", help="compare the bank against the reference model on random input")
    _add_common(p_verify)
    p_verify.add_argument("--samples", type=int, default=1000, help="random samples to feed (default 1000)")
    p_verify.add_argument(
        "--oracle-ceiling", type=int, default=5000, help="refuse to verify banks larger than this (default 5000)"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_bench = subs.add_parser("bench", help="measure bank update throughput")
    _add_common(p_bench)
    p_bench.add_argument("--samples", type=int, default=20000, help="sweep samples per timed pass (default 20000)")
    p_bench.add_argument("--repeats", type=int, default=3, help="timed passes, median reported (default 3)")
    p_bench.add_argument("--workers", type=int, default=1, help="worker threads for the bank update (default 1)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def _resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    if bool(args.config) == bool(args.preset):
        raise ConfigError("provide exactly one of --config or --preset")
    cfg = preset_config(args.preset) if args.preset else load_config(args.config)
    if args.seed is not None:
        cfg = dataclasses.replace(cfg, signal=dataclasses.replace(cfg.signal, seed=args.seed))
    overrides = {}
    if args.out is not None:
        overrides["path"] = args.out
    if args.decimate is not None:
        if args.decimate < 1:
            raise ConfigError(f"--decimate: must be >= 1, got {args.decimate}")
        overrides["decimation"] = args.decimate
    if overrides:
        cfg = dataclasses.replace(cfg, output=dataclasses.replace(cfg.output, **overrides))
    return cfg


def cmd_run(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    if args.dump_config:
        sys.stdout.write(cfg.dump_json())
        return EXIT_OK
    if cfg.output.path is None:
        raise ConfigError("output.path: required for run (or pass --out)")
    bank = cfg.model.make_bank()
    try:
        xs = generate(cfg.signal)
    except ValueError as exc:
        raise ConfigError(f"signal: {exc}") from exc
    t0 = time.perf_counter()
    traj = bank.run(xs)
    wall = time.perf_counter() - t0

    out_path = Path(cfg.output.path)
    written = traj.decimate(cfg.output.decimation)
    if cfg.output.format == "json":
        written.write_json(out_path)
    else:
        written.write_csv(out_path)

    s = traj.summary()
    print(
        f"n_hysterons={bank.n} samples={s['samples']} "
        f"f_min={s['f_min']:.9g} f_max={s['f_max']:.9g} wall_s={wall:.3f}"
    )
    print(f"wrote {out_path} ({cfg.output.format}, decimation {cfg.output.decimation})")
    if not args.no_plot:
        from .plotting import save_trajectory_figure

        fig_path = out_path.with_suffix(".png")
        save_trajectory_figure(written, fig_path, title=args.preset or out_path.stem)
        print(f"wrote {fig_path}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    if args.dump_config:
        sys.stdout.write(cfg.dump_json())
        return EXIT_OK
    if args.samples < 1:
        raise ConfigError(f"--samples: must be >= 1, got {args.samples}")
    n = cfg.model.mesh.node_count
    if n > args.oracle_ceiling:
        raise ConfigError(
            f"model has {n} hysterons, above the reference-model ceiling {args.oracle_ceiling}; "
            "raise --oracle-ceiling to force"
        )
    bank = cfg.model.make_bank(sum_mode="serial")
    relays = [
        OracleRelay(a, b, s)
        for a, b, s in zip(bank.alphas.tolist(), bank.betas.tolist(), bank.states.tolist())
    ]
    seed = args.seed if args.seed is not None else cfg.signal.seed
    rng = np.random.default_rng(seed)
    span = cfg.model.x_max - cfg.model.x_min
    xs = rng.uniform(cfg.model.x_min - 0.05 * span, cfg.model.x_max + 0.05 * span, args.samples)

    got = bank.run(xs)
    want = model_run(relays, bank.weights.tolist(), xs.tolist())
    mismatch = np.nonzero(got.f != want.f)[0]
    if mismatch.size:
        k = int(mismatch[0])
        print(
            f"MISMATCH at sample {k}: x={got.x[k]!r} bank f={got.f[k]!r} reference f={want.f[k]!r}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    print(f"OK: bank matches reference model on {args.samples} random samples (n={n}, seed={seed})")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    if args.dump_config:
        sys.stdout.write(cfg.dump_json())
        return EXIT_OK
    n = cfg.model.mesh.node_count
    report = bench_bank(n, samples=args.samples, workers=args.workers, repeats=args.repeats)
    walls = sorted(report.repeats_wall_seconds)
    doc = report.to_dict()
    doc["wall_seconds_min"] = walls[0]
    doc["wall_seconds_max"] = walls[-1]
    doc["sustainable_n_at_2khz"] = report.updates_per_second / 2000.0
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    print(
        f"n={report.n_hysterons} workers={report.workers} "
        f"updates/s={report.updates_per_second:.3g} samples/s={report.samples_per_second:.3g} "
        f"max n at 2 kHz={doc['sustainable_n_at_2khz']:.3g}",
        file=sys.stderr,
    )
    if not report.valid:
        print("CHECKSUM MISMATCH: benchmark result differs from the reference reduction", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
