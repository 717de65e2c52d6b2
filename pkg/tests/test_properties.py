"""Model-level behavioral invariants on small and mid-size banks."""

import numpy as np
import pytest

from preisach.bank import HysteronBank
from preisach.mesh import DensitySpec, MeshSpec
from preisach.oracle import OracleRelay, model_run
from preisach.signals import resample_piecewise_linear


def fresh_bank(levels=20, **kw):
    return HysteronBank.from_mesh(MeshSpec(-1.0, 1.0, levels), DensitySpec(), **kw)


def oracle_twin(bank):
    relays = [
        OracleRelay(a, b, s)
        for a, b, s in zip(bank.alphas.tolist(), bank.betas.tolist(), bank.states.tolist())
    ]
    return relays, bank.weights.tolist()


def test_boundedness_under_random_drive():
    bank = fresh_bank()
    total = bank.total_weight
    rng = np.random.default_rng(0)
    traj = bank.run(rng.uniform(-1.5, 1.5, 500))
    assert np.all(np.abs(traj.f) <= total)


def test_monotone_input_gives_monotone_output():
    rng = np.random.default_rng(1)
    up = np.sort(rng.uniform(-1.2, 1.2, 200))
    bank = fresh_bank()
    assert np.all(np.diff(bank.run(up).f) >= 0.0)
    down = up[::-1]
    assert np.all(np.diff(fresh_bank(init="positive-saturation").run(down).f) <= 0.0)


@pytest.mark.parametrize("case", range(20))
def test_dominant_maximum_wipes_intermediate_reversal(case):
    rng = np.random.default_rng(100 + case)
    c = rng.uniform(0.2, 1.0)
    b = rng.uniform(-1.0, c)
    a = rng.uniform(-1.0, b)
    history = rng.uniform(-1.0, c, rng.integers(0, 40))

    full = fresh_bank()
    full.run(history)
    reduced = full.clone()
    full.run([b, a, c])
    reduced.run([c])
    assert np.array_equal(full.states, reduced.states)


@pytest.mark.parametrize("case", range(20))
def test_dominant_minimum_wipes_intermediate_reversal(case):
    rng = np.random.default_rng(200 + case)
    c = rng.uniform(-1.0, -0.2)
    b = rng.uniform(c, 1.0)
    a = rng.uniform(b, 1.0)
    history = rng.uniform(c, 1.0, rng.integers(0, 40))

    full = fresh_bank(init="positive-saturation")
    full.run(history)
    reduced = full.clone()
    full.run([b, a, c])
    reduced.run([c])
    assert np.array_equal(full.states, reduced.states)


@pytest.mark.parametrize("case", range(10))
def test_minor_loops_between_same_reversals_are_congruent(case):
    rng = np.random.default_rng(300 + case)
    u, v = np.sort(rng.uniform(-0.95, 0.95, 2))
    if v - u < 0.05:
        v = min(0.95, u + 0.05)
    cycle = np.concatenate([np.linspace(v, u, 40), np.linspace(u, v, 40)])

    outputs = []
    for _ in range(2):
        bank = fresh_bank()
        bank.run(rng.uniform(-1.1, 1.1, rng.integers(5, 60)))
        bank.step(v)
        bank.run(cycle)  # first traversal closes the loop and syncs the band
        outputs.append(bank.run(cycle).f)
    difference = outputs[0] - outputs[1]
    assert difference.max() - difference.min() <= 1e-12 * bank.n


def test_refined_sampling_preserves_outputs_at_coarse_instants():
    rng = np.random.default_rng(4)
    t = np.arange(9.0)
    points = list(zip(t, rng.uniform(-1.2, 1.2, t.size)))
    coarse = resample_piecewise_linear(points, 8.0)
    fine = resample_piecewise_linear(points, 80.0)
    assert np.array_equal(fine[::10], coarse)

    f_coarse = fresh_bank().run(coarse).f
    f_fine = fresh_bank().run(fine).f
    assert np.array_equal(f_fine[::10], f_coarse)


def test_duplicated_samples_do_not_change_the_run():
    rng = np.random.default_rng(5)
    xs = rng.uniform(-1.2, 1.2, 100)
    doubled = np.repeat(xs, 2)
    plain = fresh_bank().run(xs)
    dup = fresh_bank().run(doubled)
    assert np.array_equal(dup.f[1::2], plain.f)


def test_periodic_saturating_drive_repeats_after_first_period():
    leg = np.linspace(-1.1, 1.1, 21)
    period = np.concatenate([leg[1:], leg[::-1][1:]])  # one exact up-down cycle
    xs = np.tile(period, 5)
    traj = fresh_bank().run(xs)
    L = period.size
    second = traj.f[L : 2 * L]
    for k in range(2, 5):
        assert np.array_equal(traj.f[k * L : (k + 1) * L], second)


@pytest.mark.parametrize("levels", [3, 9])
def test_small_banks_match_reference_model_exactly(levels):
    bank = fresh_bank(levels=levels, sum_mode="serial")
    relays, weights = oracle_twin(bank)
    rng = np.random.default_rng(6)
    xs = rng.uniform(-1.3, 1.3, 500)
    assert np.array_equal(bank.run(xs).f, model_run(relays, weights, xs.tolist()).f)


def test_table_density_bank_matches_reference_model():
    spec = MeshSpec(-1.0, 1.0, 5)
    rng = np.random.default_rng(7)
    table = rng.uniform(0.0, 1.0, spec.node_count)
    bank = HysteronBank.from_mesh(spec, DensitySpec(kind="table", table=table), sum_mode="serial")
    relays, weights = oracle_twin(bank)
    xs = rng.uniform(-1.2, 1.2, 300)
    assert np.array_equal(bank.run(xs).f, model_run(relays, weights, xs.tolist()).f)


def test_worker_partitioning_is_bit_identical():
    rng = np.random.default_rng(8)
    xs = rng.uniform(-1.2, 1.2, 300)
    reference = fresh_bank().run(xs).f
    for workers in (2, 3, 5, 8):
        with fresh_bank(workers=workers) as bank:
            assert np.array_equal(bank.run(xs).f, reference), f"workers={workers}"


def test_tree_and_serial_reductions_agree_within_tolerance():
    rng = np.random.default_rng(9)
    xs = rng.uniform(-1.2, 1.2, 500)
    tree_f = fresh_bank().run(xs).f
    serial_f = fresh_bank(sum_mode="serial").run(xs).f
    assert np.abs(tree_f - serial_f).max() <= 1e-12 * 210
