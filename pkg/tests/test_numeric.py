import numpy as np
import pytest

from geodesy.numeric import gradient_check, minimize, residual
from geodesy.weights import WeightData


STANDARD2 = WeightData({1: 2}, {-1: 2})


def test_exact_solution_has_zero_residual():
    point = {"cross[-1->1]": np.eye(2, dtype=complex)}
    assert residual(STANDARD2, point) < 1e-24


def _zero_point(wd):
    from geodesy.ladder import derive_constraints

    system = derive_constraints(wd)
    return {
        label: np.zeros((u.rows, u.cols), dtype=complex)
        for label, u in system.unknowns.items()
    }


def test_zero_point_residual_closed_form():
    # with all blocks zero only the fixed diagonal target survives
    for wd in (STANDARD2, WeightData({3: 1, 1: 1}, {-1: 1, -3: 1})):
        expected = sum(w * w * m for w, m in wd.plus.items()) + sum(
            w * w * m for w, m in wd.minus.items()
        )
        assert residual(wd, _zero_point(wd)) == pytest.approx(expected, abs=0)


def test_perturbation_is_second_order():
    eps = 1e-5
    point = {"cross[-1->1]": np.eye(2, dtype=complex)}
    point["cross[-1->1]"] = point["cross[-1->1]"].copy()
    point["cross[-1->1]"][0, 1] += eps
    value = residual(STANDARD2, point)
    assert 0 < value < 100 * eps**2


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        residual(STANDARD2, {"cross[-1->1]": np.eye(3, dtype=complex)})
    with pytest.raises(ValueError):
        residual(STANDARD2, {})


def test_gradient_matches_finite_differences():
    for wd in (STANDARD2, WeightData({3: 1, 1: 1}, {-1: 1, -3: 1})):
        assert gradient_check(wd, seed=5, points=10) < 1e-5


def test_minimize_feasible_pattern():
    report = minimize(WeightData({1: 1}, {-1: 1}), restarts=5, seed=3, target=1e-18)
    assert report.final_residual < 1e-18
    assert report.final_residual == residual(report.pattern, report.best_point)


def test_minimize_standard_two_within_twenty_restarts():
    report = minimize(STANDARD2, restarts=20, seed=7, target=1e-18)
    assert report.final_residual < 1e-18
    assert report.restarts <= 20


def test_minimize_never_underreports():
    report = minimize(STANDARD2, restarts=3, seed=9)
    assert report.final_residual == residual(STANDARD2, report.best_point)


def test_minimize_infeasible_pattern_has_floor():
    report = minimize(WeightData({3: 1, 1: 1}, {-1: 1, -3: 1}), restarts=5, seed=7)
    assert report.final_residual > 1e-3


def test_trivial_pattern_short_circuits():
    report = minimize(WeightData({0: 1}, {0: 1}), restarts=4, seed=0)
    assert report.final_residual == 0.0
    assert report.iterations == 0 and report.best_point == {}


def test_pattern_without_unknowns_reports_target_norm():
    report = minimize(WeightData({5: 1}, {-5: 1}), restarts=2, seed=0)
    assert report.final_residual == pytest.approx(50.0, abs=0)
    assert report.iterations == 0


def test_minimize_is_deterministic():
    a = minimize(STANDARD2, restarts=4, seed=11)
    b = minimize(STANDARD2, restarts=4, seed=11)
    assert a.final_residual == b.final_residual
    assert a.best_restart == b.best_restart and a.iterations == b.iterations
    for label in a.best_point:
        assert np.array_equal(a.best_point[label], b.best_point[label])


def test_minimize_argument_validation():
    with pytest.raises(ValueError):
        minimize(STANDARD2, restarts=0, seed=1)
    with pytest.raises(ValueError):
        minimize(STANDARD2, restarts=1, seed=-4)
