import json
from pathlib import Path

import numpy as np
import pytest

from leafbend.bentframe import build_profile
from leafbend.curves import Cornu, SampledCurve, ShiftedEuler, SpiralParams, WeightMode
from leafbend.errors import DomainError, FormatError, NonMonotoneError, OutOfDomainError
from leafbend.flattenmap import (
    FitGrid,
    FlattenMap,
    build_map,
    fit_params,
    longest_monotone_range,
    monotone_runs,
)
from leafbend.presets import PRESETS

SWEEP = json.loads((Path(__file__).parent / "golden" / "monotone_sweep.json").read_text())
FIG5 = PRESETS["fig5"]


@pytest.fixture(scope="module")
def fig5_profile():
    return build_profile(FIG5, 2048)


@pytest.fixture(scope="module")
def fig5_map(fig5_profile):
    return build_map(fig5_profile, longest_monotone_range(fig5_profile))


def test_straight_segment_gives_affine_map():
    p = SpiralParams(ShiftedEuler(0.0), -1e-3, 1e-3, 0.0)
    fmap = build_map(build_profile(p, 64))
    slope = np.diff(fmap.u) / np.diff(fmap.s)
    assert np.allclose(slope, slope[0], rtol=1e-5)


@pytest.mark.parametrize("name", ["fig4", "fig5"])
def test_presets_fold_where_the_sweep_says(name):
    gold = SWEEP["presets"][name]
    assert gold["monotone"] is False
    with pytest.raises(NonMonotoneError) as info:
        build_map(build_profile(PRESETS[name], SWEEP["knots"]))
    assert info.value.interval == pytest.approx(gold["first_fold_interval"], abs=1e-9)


@pytest.mark.parametrize("entry", SWEEP["sweep"], ids=lambda e: f"{e['weight']}-{e['lambda']}")
def test_longest_run_matches_sweep(entry):
    p = SpiralParams(Cornu(), SWEEP["e"], SWEEP["l"], entry["lambda"], WeightMode(entry["weight"]))
    prof = build_profile(p, SWEEP["knots"])
    assert longest_monotone_range(prof) == pytest.approx(entry["longest_run"], abs=1e-9)
    fmap = build_map(prof, longest_monotone_range(prof))
    assert len(fmap) == entry["longest_run_knots"]


def test_too_few_knots():
    with pytest.raises(DomainError):
        build_map(build_profile(FIG5, 2))


def test_monotone_runs_cover_profile(fig5_profile):
    runs = monotone_runs(fig5_profile)
    assert runs[0][0] == 0 and runs[-1][1] == len(fig5_profile) - 1
    for (_, j), (i, _) in zip(runs, runs[1:]):
        assert j == i


def test_map_is_strictly_monotone(fig5_map):
    d = np.diff(fmap_u := fig5_map.u)
    assert np.all(d < 0) or np.all(d > 0)
    assert fig5_map.direction == (1 if fmap_u[-1] > fmap_u[0] else -1)


def test_exact_at_knots(fig5_map):
    assert np.array_equal(fig5_map.forward(fig5_map.s), fig5_map.u)
    assert np.array_equal(fig5_map.inverse(fig5_map.u), fig5_map.s)


def test_round_trip_random(fig5_map):
    lo, hi = fig5_map.s_range
    s = np.random.default_rng(3).uniform(lo, hi, 1000)
    assert np.max(np.abs(fig5_map.inverse(fig5_map.forward(s)) - s)) <= 1e-6


def test_increasing_map_round_trip():
    fmap = FlattenMap(np.linspace(0, 1, 9), np.linspace(0, 1, 9) ** 2 + np.linspace(0, 1, 9))
    assert fmap.direction == 1
    s = np.linspace(0, 1, 101)
    assert np.allclose(fmap.inverse(fmap.forward(s)), s, atol=1e-12)


def test_out_of_domain(fig5_map):
    lo, hi = fig5_map.s_range
    with pytest.raises(OutOfDomainError):
        fig5_map.forward(hi + 1e-6)
    u_lo, u_hi = fig5_map.u_range
    with pytest.raises(OutOfDomainError):
        fig5_map.inverse(u_lo - 1e-6)
    with pytest.raises(OutOfDomainError):
        fig5_map.forward(np.nan)


def test_flatten_map_rejects_folded_knots():
    s = np.arange(10.0)
    u = np.array([0, 1, 2, 3, 4, 3, 2, 1, 0, -1.0])
    with pytest.raises(NonMonotoneError) as info:
        FlattenMap(s, u)
    assert info.value.interval == (4.0, 5.0)


def test_csv_round_trip(fig5_map):
    text = fig5_map.to_csv()
    lines = text.split("\n")
    assert lines[0] == "s,u" and text.endswith("\n")
    assert lines[1] == f"{fig5_map.s[0]:.9g},{fig5_map.u[0]:.9g}"
    back = FlattenMap.from_csv(text)
    assert len(back) == len(fig5_map)
    assert np.allclose(back.u, fig5_map.u, rtol=1e-8, atol=1e-12)


@pytest.mark.parametrize("text", ["", "a,b\n1,2\n", "s,u\n1,x\n", "s,u\n1,2,3\n"])
def test_csv_rejects_malformed(text):
    with pytest.raises(FormatError):
        FlattenMap.from_csv(text)


# -- fitting ------------------------------------------------------------------


def _observed(params, n=512, noise=0.0, seed=0):
    prof = build_profile(params, n)
    pts = prof.stretched
    if noise:
        pts = pts + np.random.default_rng(seed).normal(0.0, noise, pts.shape)
    return SampledCurve(None, prof.s, pts)


@pytest.fixture(scope="module")
def exact_fit():
    return fit_params(_observed(FIG5))


def test_fit_recovers_fig5(exact_fit):
    assert abs(exact_fit.params.s_end - 2.170803) <= 1e-2
    assert exact_fit.rms_residual <= 1e-6
    assert exact_fit.params.s_start == pytest.approx(-0.78622, abs=1e-4)
    assert exact_fit.params.lam == pytest.approx(2.0, abs=1e-4)


def test_fit_with_noise():
    res = fit_params(_observed(FIG5, noise=1e-3, seed=2024))
    assert abs(res.params.s_end - 2.170803) <= 1e-2
    assert res.rms_residual <= 5e-3


def test_fit_is_deterministic(exact_fit):
    again = fit_params(_observed(FIG5))
    assert again == exact_fit


def test_fit_grid_excluding_truth_returns_best_on_grid():
    grid = FitGrid(l=(2.6, 2.8), e=(0.3, 0.4), lam=(0.0,))
    res = fit_params(_observed(FIG5), grid, max_sweeps=0)
    assert res.params.s_end in (2.6, 2.8)
    assert res.rms_residual > 1e-2


def test_fit_rejects_empty_grid():
    with pytest.raises(DomainError):
        fit_params(_observed(FIG5), FitGrid(l=()))


def test_fit_needs_sixteen_samples():
    with pytest.raises(DomainError):
        fit_params(_observed(FIG5, n=15))


def test_fit_by_chord_fraction():
    res = fit_params(_observed(FIG5), arc="chord")
    assert abs(res.params.s_end - 2.170803) <= 1e-2
    assert res.rms_residual <= 1e-4


def test_fit_shifted_euler_with_m_axis():
    truth = SpiralParams(ShiftedEuler(1.0), 0.0, 1.5, 1.0, WeightMode.END)
    grid = FitGrid(l=(1.2, 1.6, 2.0), e=(-0.2, 0.0, 0.2), lam=(0.5, 1.0, 1.5), m=(0.5, 1.0, 1.5))
    res = fit_params(_observed(truth, n=128), grid, phase=ShiftedEuler)
    assert isinstance(res.params.phase, ShiftedEuler)
    assert res.rms_residual <= 1e-6
    # only l - m and e - m are identifiable: a shift of arc length is a rigid motion
    m = res.params.phase.m
    assert res.params.s_end - m == pytest.approx(0.5, abs=1e-4)
    assert res.params.s_start - m == pytest.approx(-1.0, abs=1e-4)
    assert res.params.lam == pytest.approx(1.0, abs=1e-4)
