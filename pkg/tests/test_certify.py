import json
import math

import numpy as np
import pytest
from scipy.optimize import linprog

from phaselimits.bounds import general_phi_bound, nphoton_phi_bound
from phaselimits.certify import (
    LambdaScheme,
    SearchSpec,
    linear_profile_demo,
    min_hull_phase,
    min_phi_search,
    min_phitot_search,
    overlap_scan,
)
from phaselimits.errors import DimensionError, SpecError
from phaselimits.fock import PureState
from phaselimits.states import make_omega_N, make_phi_N

STEP = math.pi / 4095


def lp_orthogonal_weights_exist(s, phi):
    """Oracle: is there a probability vector p with sum p_j exp(i phi s_j) = 0?"""
    s = np.asarray(s, dtype=float)
    A = np.vstack([np.cos(phi * s), np.sin(phi * s), np.ones_like(s)])
    res = linprog(np.zeros(s.size), A_eq=A, b_eq=[0, 0, 1], bounds=[(0, None)] * s.size, method="highs")
    return res.status == 0


@pytest.mark.parametrize("s", [[-2, 0, 2], [-1, 1], [0, 0.5, 2], [-1.5, -0.5, 1, 2], [0, 3]])
def test_min_hull_phase_against_lp(s):
    grid = np.linspace(0, math.pi, 512)
    phi = min_hull_phase(s, grid)
    assert phi == pytest.approx(math.pi / (max(s) - min(s)), rel=1e-12)
    assert lp_orthogonal_weights_exist(s, phi)
    assert not lp_orthogonal_weights_exist(s, phi - 1e-3)


@pytest.mark.parametrize("s", [[0, 1, 3], [-1, 0.5, 2], [0, 1, 2, 5]])
def test_min_hull_phase_grid_window(s):
    # window starting above pi/span: the first hit comes from the grid scan
    start = 1.3 * math.pi / (max(s) - min(s))
    grid = np.linspace(start, 3 * start, 2048)
    phi = min_hull_phase(s, grid)
    first = next(g for g in grid if lp_orthogonal_weights_exist(s, g))
    assert first - (grid[1] - grid[0]) - 1e-9 <= phi <= first + 1e-9
    assert lp_orthogonal_weights_exist(s, phi + 1e-9)


def test_min_hull_phase_single_exponent():
    assert min_hull_phase([1.0, 1.0], np.linspace(0, math.pi, 16)) is None


def test_phi_search_two_modes():
    rep = min_phi_search(SearchSpec(2, 2, sample_count=5000, seed=11))
    assert not rep.violation
    assert rep.best_found_phi >= math.pi / 4 - STEP
    assert rep.analytic_value == nphoton_phi_bound(2)
    assert rep.best_sampled_phi >= math.pi / 4 - STEP


def test_phi_search_mode_count_does_not_help():
    two = min_phi_search(SearchSpec(2, 2, sample_count=2000, seed=1))
    three = min_phi_search(SearchSpec(3, 2, sample_count=2000, seed=1))
    assert abs(two.best_found_phi - three.best_found_phi) <= STEP
    assert two.analytic_value == three.analytic_value


def test_phi_search_free_energy():
    rep = min_phi_search(SearchSpec(2, 2, exact_n=False, manifolds=(0, 2), sample_count=2000, seed=3))
    assert rep.bound_kind == "general_phi"
    assert not rep.violation
    assert rep.best_found_phi >= 1.38005 - 5e-6
    assert rep.best_sampled_phi >= rep.analytic_value - STEP
    assert rep.saturator_phi == pytest.approx(general_phi_bound(1.0), abs=STEP)


def test_phi_search_energy_rescaling():
    unit = min_phi_search(SearchSpec(2, 2, exact_n=False, manifolds=(0, 2), sample_count=300, seed=3))
    at4 = min_phi_search(SearchSpec(2, 2, exact_n=False, manifolds=(0, 2), sample_count=300, seed=3, energy_target=4.0))
    assert at4.analytic_value == pytest.approx(unit.analytic_value / 4)
    assert at4.best_found_phi == pytest.approx(unit.best_found_phi / 4)


def test_phitot_search_nphoton():
    rep = min_phitot_search(SearchSpec(2, 3, sample_count=2000, seed=5))
    assert not rep.violation
    assert rep.best_found_phi >= math.pi / 3 - STEP
    assert rep.saturator_phi == pytest.approx(math.pi / 3, abs=STEP)
    assert "lambdas=(1,-1)" in rep.best_state_digest


def test_phitot_same_sign():
    rep = min_phitot_search(SearchSpec(2, 3, sample_count=2000, seed=5, same_sign=True))
    assert not rep.violation
    assert rep.saturator_phi == pytest.approx(math.pi / 3, abs=STEP)
    assert rep.best_found_phi == pytest.approx(math.pi / 3, abs=STEP)


def test_phitot_free_energy():
    rep = min_phitot_search(SearchSpec(3, 3, exact_n=False, sample_count=1500, seed=2))
    assert rep.bound_kind == "general_phitot"
    assert not rep.violation
    assert rep.saturator_phi == pytest.approx(math.pi / 2, abs=STEP)


def test_single_mode_free_energy():
    rep = min_phi_search(SearchSpec(1, 4, exact_n=False, sample_count=1000, seed=2))
    assert rep.bound_kind == "single_mode_phi"
    assert not rep.violation
    assert rep.saturator_phi == pytest.approx(math.pi / 2, abs=2 * STEP)


@pytest.mark.parametrize("scheme", list(LambdaScheme))
@pytest.mark.parametrize("exact", [True, False])
def test_no_violation_any_scheme(scheme, exact):
    spec = SearchSpec(3, 2, exact_n=exact, lambda_scheme=scheme, sample_count=1000, seed=9)
    assert not min_phi_search(spec).violation
    assert not min_phitot_search(spec).violation


def test_determinism_and_worker_independence():
    spec = SearchSpec(3, 2, exact_n=False, sample_count=600, seed=42)
    a = min_phi_search(spec)
    b = min_phi_search(spec)
    c = min_phi_search(SearchSpec(3, 2, exact_n=False, sample_count=600, seed=42, workers=3))
    assert json.dumps(a.as_dict()) == json.dumps(b.as_dict()) == json.dumps(c.as_dict())
    d = min_phi_search(SearchSpec(3, 2, exact_n=False, sample_count=600, seed=43))
    assert d.seed == 43


def test_saturator_recovery_alone():
    for N in (1, 2, 4):
        rep = min_phi_search(SearchSpec(2, N, sample_count=1, seed=0))
        assert rep.saturator_phi == pytest.approx(math.pi / (2 * N), abs=STEP)


@pytest.mark.parametrize("cap", [1, 2, 3, 4])
def test_free_energy_products_stay_above_constant(cap):
    rep = min_phi_search(SearchSpec(2, cap, exact_n=False, sample_count=600, seed=cap))
    assert rep.best_found_phi >= rep.analytic_value - STEP


def test_search_spec_validation():
    with pytest.raises(SpecError):
        SearchSpec(2, 2, grid_steps=1)
    with pytest.raises(SpecError):
        SearchSpec(2, 2, phi_min=-1.0)
    with pytest.raises(SpecError):
        SearchSpec(2, 2, sample_count=0)
    with pytest.raises(SpecError):
        SearchSpec(2, 2, exact_n=False, manifolds=(0, 5))
    with pytest.raises(SpecError):
        min_phi_search(SearchSpec(1, 3))  # one ket: empty search space


def test_report_has_no_nonfinite_numbers():
    rep = min_phi_search(SearchSpec(2, 1, phi_max=0.5, sample_count=50, seed=0))
    assert rep.best_found_phi is None
    json.dumps(rep.as_dict(), allow_nan=False)


# scans ------------------------------------------------------------------------


def first_zero(records, tol=1e-9):
    return next(r.phi for r in records if r.overlap_abs <= tol and r.phi > 0)


def test_scan_noon_matches_cosine():
    recs = overlap_scan(make_phi_N(2), (1, -1), (0.0, math.pi, 4097))
    for r in recs:
        assert r.overlap_abs == pytest.approx(abs(math.cos(2 * r.phi)), abs=1e-12)
        assert r.overlap_abs == pytest.approx(math.hypot(r.overlap_re, r.overlap_im), abs=1e-12)
    assert recs[0].overlap_abs == pytest.approx(1.0, abs=1e-15)
    assert first_zero(recs) == pytest.approx(math.pi / 4, abs=1e-12)


def test_scan_vacuum_constant():
    recs = overlap_scan(PureState.vacuum(2), (1, -1), (0.0, 3.0, 50))
    assert all(r.overlap_abs == 1.0 for r in recs)


def test_scan_omega():
    recs = overlap_scan(make_omega_N(4, 2), (1, 0), (0.0, math.pi, 4097))
    assert first_zero(recs) == pytest.approx(math.pi / 4, abs=1e-12)


def test_scan_errors():
    with pytest.raises(DimensionError):
        overlap_scan(make_phi_N(2), (1, 0, -1), (0.0, 1.0, 10))
    with pytest.raises(SpecError):
        overlap_scan(make_phi_N(2), (1, -1), (0.0, 1.0, 1))


# linear profile -----------------------------------------------------------------


def test_linear_profile_two_modes():
    rep = linear_profile_demo(2, 3)
    assert rep.linear_min_phi == pytest.approx(math.pi / 3, abs=1e-9)
    assert rep.ratio == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("M,N", [(3, 1), (5, 2), (4, 3)])
def test_linear_profile_gain_is_bookkeeping(M, N):
    rep = linear_profile_demo(M, N)
    assert rep.linear_min_phi == pytest.approx(rep.two_mode_min_relative_shift / (M - 1), abs=1e-9)
    assert rep.two_mode_min_relative_shift == pytest.approx(math.pi / N, abs=1e-9)
    assert rep.ratio == pytest.approx(1.0, abs=1e-9)


def test_linear_profile_validation():
    with pytest.raises(SpecError):
        linear_profile_demo(1, 2)
