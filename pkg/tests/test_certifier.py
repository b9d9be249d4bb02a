import numpy as np
import pytest

from conftest import assert_sound, knots_spec
from harmcert import (BoundaryMap, alessandrini_nesi_check, build_param,
                      certify, conjecture_probe, fourier_coefficients,
                      harmonic_from_coeffs, mollified_pipeline,
                      univalence_oracle)
from harmcert.certifier import verdict_from
from harmcert.errors import ConvexityContradiction, NotADiffeomorphism

TWO_PI = 2.0 * np.pi


# -- verdict rule -------------------------------------------------------------

def test_verdict_margin_rule():
    assert verdict_from(0.5, 1e-6, False) == "certified-diffeomorphism"
    assert verdict_from(5e-7, 1e-6, False) == "inconclusive"
    assert verdict_from(-5e-7, 1e-6, False) == "inconclusive"
    assert verdict_from(-0.2, 1e-6, False) == "not-certified"


def test_convexity_contradiction_guard():
    with pytest.raises(ConvexityContradiction):
        verdict_from(-0.1, 1e-6, True)


# -- certificates -------------------------------------------------------------

def test_certify_circle_identity(circle):
    p = build_param({"type": "identity"}, circle.length)
    cert = certify(circle, p, 64, 1e-7, with_oracle=True, fourier_order=256)
    assert cert.verdict == "certified-diffeomorphism"
    assert cert.min_T == pytest.approx(1.0, abs=1e-7)
    assert cert.convex and cert.dini_convergent
    assert cert.oracle.verdict == "univalent-evidence"
    assert_sound(cert)
    d = cert.to_dict()
    assert d["toolkit_version"] and d["curve_spec"]["type"] == "circle"


def test_certify_convex_ellipse(ellipse21):
    p = build_param({"type": "identity"}, ellipse21.length)
    cert = certify(ellipse21, p, 64, 1e-7, with_oracle=True, fourier_order=512)
    assert cert.verdict == "certified-diffeomorphism"
    assert_sound(cert)


def test_certify_nonconvex_recorded_with_oracle(polar3):
    p = build_param({"type": "identity"}, polar3.length)
    cert = certify(polar3, p, 64, 1e-6, with_oracle=True, fourier_order=1024)
    assert not cert.convex
    assert cert.verdict == "not-certified"       # profile dips below -margin
    assert cert.oracle.verdict == "folding-detected"
    assert_sound(cert)


# -- univalence oracle --------------------------------------------------------

def test_oracle_rotation():
    rep = univalence_oracle(harmonic_from_coeffs({1: 1.0}), 32, 128)
    assert rep.verdict == "univalent-evidence"
    assert rep.min_interior_J == pytest.approx(1.0, abs=1e-12)
    assert rep.boundary_winding == 1 and rep.injective_on_grid


def test_oracle_double_cover():
    rep = univalence_oracle(harmonic_from_coeffs({2: 1.0}), 32, 128)
    assert rep.verdict == "folding-detected"
    assert rep.boundary_winding == 2
    assert not rep.injective_on_grid


def test_oracle_affine_shear():
    rep = univalence_oracle(harmonic_from_coeffs({1: 1.0, -1: 0.5}), 32, 128)
    assert rep.verdict == "univalent-evidence"
    assert rep.min_interior_J == pytest.approx(0.75, abs=1e-9)


def test_oracle_degenerate_constant():
    rep = univalence_oracle(harmonic_from_coeffs({0: 2.0}), 32, 128)
    assert rep.verdict == "folding-detected"


def test_oracle_winding_consistency(circle, polar_convex):
    for curve, mp in ((circle, {"type": "sin-perturbed", "a": 0.5, "k": 1}),
                      (polar_convex, {"type": "identity"})):
        p = build_param(mp, curve.length)
        hm = fourier_coefficients(BoundaryMap(curve, p), 512)
        rep = univalence_oracle(hm, 32, 128)
        if rep.verdict == "univalent-evidence":
            assert rep.boundary_winding == 1


def test_oracle_grid_preconditions():
    hm = harmonic_from_coeffs({1: 1.0})
    with pytest.raises(ValueError):
        univalence_oracle(hm, 16, 128)
    with pytest.raises(ValueError):
        univalence_oracle(hm, 32, 64)


# -- boundary-positivity check for strict data ---------------------------------

def test_an_check_identity(circle):
    p = build_param({"type": "identity"}, circle.length)
    res = alessandrini_nesi_check(circle, p, 64, 1e-7)
    assert res.passes
    assert res.min_boundary_J == pytest.approx(1.0, abs=1e-6)


def test_an_check_strict_sin(circle):
    p = build_param({"type": "sin-perturbed", "a": 0.5, "k": 1}, circle.length)
    res = alessandrini_nesi_check(circle, p, 64, 1e-7)
    assert res.passes
    hm = fourier_coefficients(BoundaryMap(circle, p), 256)
    assert univalence_oracle(hm, 32, 128).verdict == "univalent-evidence"


def test_an_check_refuses_weak_data(circle):
    p = build_param({"type": "sin-perturbed", "a": 1, "k": 1}, circle.length)
    with pytest.raises(NotADiffeomorphism):
        alessandrini_nesi_check(circle, p, 64, 1e-7)


def test_an_check_coherent_with_certify(circle, ellipse21):
    for curve in (circle, ellipse21):
        p = build_param({"type": "sin-perturbed", "a": 0.4, "k": 2},
                        curve.length)
        res = alessandrini_nesi_check(curve, p, 64, 1e-7)
        cert = certify(curve, p, 64, 1e-7)
        assert res.passes == (cert.verdict == "certified-diffeomorphism")


# -- conjecture probe ----------------------------------------------------------

def test_probe_identity(circle):
    p = build_param({"type": "identity"}, circle.length)
    probe = conjecture_probe(circle, p, 64, 1e-7, fourier_order=256)
    assert probe.exploratory
    assert probe.ess_inf_estimate == pytest.approx(1.0, abs=1e-6)
    assert probe.oracle_verdict == "univalent-evidence"


def test_probe_flat_point(circle):
    p = build_param({"type": "sin-perturbed", "a": 1, "k": 1}, circle.length)
    probe = conjecture_probe(circle, p, 64, 1e-6, fourier_order=256)
    assert abs(probe.ess_inf_estimate) <= 1e-6   # vanishing f' at tau = 0
    assert probe.oracle_verdict == "univalent-evidence"


def test_probe_folding_case_negative_ess_inf():
    # frozen folding case found by the polar family sweep
    from harmcert import build_curve
    curve = build_curve({"type": "polar", "formula_id": "cosine",
                         "params": {"eps": 0.6, "k": 2}})
    p = build_param({"type": "identity"}, curve.length)
    probe = conjecture_probe(curve, p, 64, 1e-6, fourier_order=1024)
    assert probe.oracle_verdict == "folding-detected"
    assert probe.ess_inf_estimate < 0


# -- mollified pipeline ---------------------------------------------------------

def test_mollified_pipeline_identity_fixed_point(circle):
    p = build_param({"type": "identity"}, circle.length)
    rep = mollified_pipeline(circle, p, [2, 4], 64, 1e-7, with_oracle=False)
    for cert in rep.certificates:
        assert cert.verdict == "certified-diffeomorphism"
        assert cert.min_T == pytest.approx(rep.base_min_T, abs=1e-8)
    assert max(rep.distances_to_base) <= 1e-7


def test_mollified_pipeline_flat_map(circle):
    p = build_param({"type": "sin-perturbed", "a": 1, "k": 1}, circle.length)
    rep = mollified_pipeline(circle, p, [2, 4, 8, 16, 32], 64, 1e-6,
                             with_oracle=True, fourier_order=512)
    d = rep.distances_to_base
    assert all(d[i + 1] < d[i] for i in range(len(d) - 1))
    assert rep.n0 == 2                      # convex curve: minima stay high
    for cert in rep.certificates:
        assert cert.verdict == "certified-diffeomorphism"
        assert_sound(cert)


def test_mollified_pipeline_convex_all_certified(polar_convex):
    spec = knots_spec(polar_convex.length, seed=21)
    p = build_param(spec, polar_convex.length)
    rep = mollified_pipeline(polar_convex, p, [2, 8], 64, 1e-6,
                             with_oracle=False)
    for cert in rep.certificates:
        assert cert.verdict == "certified-diffeomorphism"
