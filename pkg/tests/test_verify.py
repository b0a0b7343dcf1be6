"""Quadrature checks, reports, the finite-difference spectrum, and the suite."""
import math

import pytest

from ptdarboux import closed_form
from ptdarboux.errors import EvaluationError, ParameterError
from ptdarboux.verify import (
    DEFAULT_TOLERANCES,
    CheckResult,
    check_expectation_x,
    check_first_moment,
    check_hypergeom_norm,
    check_orthonormality,
    check_residual,
    check_trig_norm,
    fd_spectrum,
    integrate,
    resolve_tolerances,
    run_full_suite,
)


def test_integrate_standard_integrals():
    assert abs(integrate(lambda x: math.sin(x) ** 2, 0.0, math.pi, 32, 8) - math.pi / 2) <= 1e-13
    assert abs(integrate(lambda x: x, 0.0, math.pi, 32, 8) - math.pi**2 / 2) <= 1e-13
    # Beta(5/2, 5/2) through the raw algebraic kernel: endpoint square roots
    # limit plain panel quadrature, but 1e-12 is attainable at (64, 32)
    beta = integrate(lambda z: (z * (1 - z)) ** 1.5, 0.0, 1.0, 64, 32)
    assert abs(beta - 3 * math.pi / 128) <= 1e-12


def test_integrate_validation():
    with pytest.raises(ParameterError):
        integrate(lambda x: x, 1.0, 1.0, 8, 4)
    with pytest.raises(ParameterError):
        integrate(lambda x: x, 0.0, 1.0, 8, 0)


def test_integrate_reports_offending_abscissa():
    def bad(x):
        return math.inf if x > 0.5 else 1.0

    with pytest.raises(EvaluationError) as err:
        integrate(bad, 0.0, 1.0, 8, 4)
    assert "at x=" in str(err.value)


def test_resolve_tolerances():
    tols = resolve_tolerances()
    assert tols == DEFAULT_TOLERANCES
    assert tols is not DEFAULT_TOLERANCES
    tols = resolve_tolerances({"residual": 1e-5})
    assert tols["residual"] == 1e-5
    assert tols["quadrature"] == 1e-10
    with pytest.raises(ParameterError):
        resolve_tolerances({"bogus": 1e-3})


def test_check_result_invariant_on_zero_reference():
    fine = check_residual(2, 1.0)
    assert fine.reference == 0.0
    assert fine.rel_dev == fine.abs_dev == fine.computed


def test_trig_norm_small_indices():
    r2 = check_trig_norm(2)
    assert math.isclose(r2.reference, 1.5 * math.pi, rel_tol=1e-15)
    assert r2.passed and r2.rel_dev <= 1e-12
    r3 = check_trig_norm(3)
    assert math.isclose(r3.reference, 4 * math.pi, rel_tol=1e-15)
    assert r3.passed
    r10 = check_trig_norm(10)
    assert math.isclose(r10.reference, 0.5 * math.pi * 99, rel_tol=1e-15)
    assert r10.rel_dev <= 1e-12
    with pytest.raises(ParameterError):
        check_trig_norm(1)


def test_trig_norm_k2_closed_form_reduction():
    # the k=2 integrand collapses to 4 sin^4, whose integral is 4 * 3 pi / 8
    assert math.isclose(
        check_trig_norm(2).computed, 4 * (3 * math.pi / 8), rel_tol=1e-13
    )


def test_hypergeom_norm_ground_level():
    z_form = check_hypergeom_norm(0, "z")
    assert math.isclose(z_form.reference, 3 * math.pi / 128, rel_tol=1e-15)
    assert z_form.passed and z_form.rel_dev <= 1e-12
    x_form = check_hypergeom_norm(0, "x")
    assert math.isclose(x_form.reference, 3 * math.pi / 256, rel_tol=1e-15)
    assert x_form.passed


def test_hypergeom_norm_first_level():
    r = check_hypergeom_norm(1, "z")
    assert math.isclose(r.reference, math.pi / 256, rel_tol=1e-15)
    assert r.passed and r.rel_dev <= 1e-11


def test_hypergeom_norm_validation():
    with pytest.raises(ParameterError):
        check_hypergeom_norm(-1)
    with pytest.raises(ParameterError):
        check_hypergeom_norm(2, "bogus")


def test_expectation_x():
    r = check_expectation_x(2, 1.0)
    assert math.isclose(r.reference, math.pi / 4, rel_tol=1e-15)
    assert r.passed and r.abs_dev <= 1e-11
    # index independence and scale law
    assert math.isclose(check_expectation_x(7, 1.0).computed, math.pi / 4, rel_tol=1e-11)
    assert math.isclose(check_expectation_x(3, 2.0).computed, math.pi / 8, rel_tol=1e-11)


def test_first_moment_forms():
    trig = check_first_moment(2, "trig")
    assert math.isclose(trig.reference, 3 * math.pi**2 / 4, rel_tol=1e-15)
    assert trig.passed
    assert math.isclose(
        check_first_moment(5, "trig").reference, 6 * math.pi**2, rel_tol=1e-15
    )
    hyp = check_first_moment(0, "hypergeom")
    assert math.isclose(hyp.reference, 3 * math.pi**2 / 1024, rel_tol=1e-15)
    assert hyp.passed and hyp.rel_dev <= 1e-11
    with pytest.raises(ParameterError):
        check_first_moment(1, "trig")
    with pytest.raises(ParameterError):
        check_first_moment(0, "nope")


def test_orthonormality_report():
    report = check_orthonormality(6)
    names = [c.name for c in report.checks]
    assert names[0] == "gram (2,2)"
    assert len(names) == 5 * 6 // 2  # upper triangle of a 5x5 Gram matrix
    assert report.overall
    assert max(c.abs_dev for c in report.checks) <= 1e-10
    diag = [c for c in report.checks if c.name == "gram (4,4)"]
    assert diag and math.isclose(diag[0].computed, 1.0, rel_tol=1e-10)
    with pytest.raises(ParameterError):
        check_orthonormality(1)


def test_residual_partner_modes():
    for k in (2, 10):
        r = check_residual(k, 1.0, margin=1e-3)
        assert r.passed and r.computed <= 1e-8
    with pytest.raises(ParameterError):
        check_residual(2, 1.0, margin=0.0)


def test_residual_box_sanity_path():
    r = check_residual(5, 1.0, hamiltonian="box", tolerance=1e-10)
    assert r.passed and r.computed <= 1e-10
    with pytest.raises(ParameterError):
        check_residual(5, 1.0, hamiltonian="nope")


def test_fd_spectrum_converges_to_exact_energies():
    modes = fd_spectrum(1.0, 1000, 3)
    exact = [16.0, 36.0, 64.0]
    assert modes == sorted(modes)
    for computed, target in zip(modes, exact):
        assert abs(computed - target) / target <= 1e-5
    # the discretization approaches each level from below at O(h^2)
    assert all(computed < target for computed, target in zip(modes, exact))


def test_fd_spectrum_grid_refinement_improves():
    coarse = fd_spectrum(1.0, 1000, 3)
    fine = fd_spectrum(1.0, 2000, 3)
    exact = [16.0, 36.0, 64.0]
    for c, f, e in zip(coarse, fine, exact):
        assert abs(f - e) < abs(c - e)


def test_fd_spectrum_scale_law():
    modes = fd_spectrum(2.0, 1000, 2)
    for computed, target in zip(modes, [64.0, 144.0]):
        assert abs(computed - target) / target <= 1e-4


def test_fd_spectrum_no_mode_below_the_ground_level():
    # the annihilated seed level 4 alpha^2 must not reappear: the lowest
    # partner mode sits at 16 alpha^2 (up to discretization defect)
    modes = fd_spectrum(1.0, 2000, 3)
    tol = DEFAULT_TOLERANCES["fd_spectrum"]
    assert all(m >= 16.0 * (1 - tol) for m in modes)


def test_fd_spectrum_validation():
    assert fd_spectrum(1.0, 500, 0) == []
    with pytest.raises(ParameterError):
        fd_spectrum(0.0, 500, 2)
    with pytest.raises(ParameterError):
        fd_spectrum(1.0, 99, 2)
    with pytest.raises(ParameterError):
        fd_spectrum(1.0, 500, 11)
    with pytest.raises(ParameterError):
        fd_spectrum(1.0, 500, -1)


def test_run_full_suite_small():
    report = run_full_suite(n_max=4, grid_points=1000)
    assert report.overall
    assert report.parameters["n_max"] == 4
    names = [c.name for c in report.checks]
    assert names[0] == "coefficient C_0"
    assert "trig norm k=2" in names
    assert "identity (odd ratio) m=2" in names
    assert "fd mode 2" in names
    # deterministic ordering
    second = run_full_suite(n_max=4, grid_points=1000)
    assert [c.name for c in second.checks] == names


def test_run_full_suite_minimal_range():
    report = run_full_suite(n_max=0, grid_points=1000)
    names = [c.name for c in report.checks]
    assert "trig norm k=2" in names
    assert report.overall


def test_run_full_suite_rejects_bad_range():
    with pytest.raises(ParameterError):
        run_full_suite(n_max=-1)


def test_run_full_suite_is_falsifiable(monkeypatch):
    # corrupt the exact coefficient table: every check that leans on it
    # must fail, while coefficient-free checks keep passing
    from fractions import Fraction

    monkeypatch.setattr(closed_form, "coefficient_C", lambda n: Fraction(-1, 7))
    report = run_full_suite(n_max=2, grid_points=1000)
    assert not report.overall
    failed = {c.name for c in report.checks if not c.passed}
    assert "coefficient C_0" in failed
    assert any(name.startswith("hypergeom norm") for name in failed)
    assert any(name.startswith("identity (base)") for name in failed)
    passed = {c.name for c in report.checks if c.passed}
    assert "trig norm k=2" in passed  # independent of the coefficient table
    assert any(name.startswith("identity (even ratio)") for name in passed)


def test_run_full_suite_never_aborts(monkeypatch):
    def boom(n):
        raise RuntimeError("synthetic failure")

    monkeypatch.setattr(closed_form, "coefficient_C", boom)
    report = run_full_suite(n_max=2, grid_points=1000)
    assert not report.overall
    assert any("error" in c.name and "synthetic failure" in c.name for c in report.checks)
    assert any(c.passed for c in report.checks)  # independent checks still ran


def test_panel_doubling_convergence_sanity():
    # doubling panels must not degrade a check by more than 10x (allowing a
    # rounding floor of 1e-14 relative for checks already at machine noise)
    cases = [
        lambda panels: check_trig_norm(5, panels=panels),
        lambda panels: check_hypergeom_norm(3, "z", panels=panels),
        lambda panels: check_expectation_x(4, 1.0, panels=panels),
    ]
    for make in cases:
        base = make(32)
        doubled = make(64)
        floor = 1e-14
        assert doubled.rel_dev <= max(10 * base.rel_dev, floor)


def test_check_result_serialization():
    r = check_trig_norm(2)
    d = r.to_dict()
    assert isinstance(r, CheckResult)
    assert set(d) == {
        "name", "computed", "reference", "abs_dev", "rel_dev", "tolerance", "passed",
    }
    report = check_orthonormality(3)
    payload = report.to_dict()
    assert set(payload) == {"parameters", "overall", "checks"}
    assert payload["overall"] is True
