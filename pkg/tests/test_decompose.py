"""Tests for the fiber interpolation decomposition and degree-2 machinery."""
import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from blaschke_gamma.blaschke import BlaschkeProduct, fiber
from blaschke_gamma.decompose import (Degree2Split, MembershipCertificate,
                                      decomposition_grid, degree2_involution,
                                      degree2_membership, degree2_split,
                                      fiber_constancy, lagrange_coeffs,
                                      raw_lagrange_coeffs,
                                      verify_decomposition)
from blaschke_gamma.errors import (DegreeNotTwo, NearCriticalPoint,
                                   NearDegenerate, NotRational)
from blaschke_gamma.gamma import GammaFunction, gamma_eval
from blaschke_gamma.oracle import (as_oracle, compose_oracle, poly_oracle,
                                   sum_oracle)
from blaschke_gamma.polycore import ComplexPoly

B2 = BlaschkeProduct([0, 0])
B3 = BlaschkeProduct([0, 0, 0])

Z3 = poly_oracle([0, 0, 0, 1])
ONE = poly_oracle([1])
IDENT = poly_oracle([0, 1])

SAMPLE_POINTS = [0.4 + 0.1j, -0.3 + 0.35j, 0.2 - 0.5j, -0.55 - 0.2j]


def random_blaschke(rng, n):
    return BlaschkeProduct([complex(a, b)
                            for a, b in rng.uniform(-0.55, 0.55, (n, 2))])


def random_poly_oracle(rng, deg):
    return poly_oracle([complex(a, b)
                        for a, b in rng.uniform(-1, 1, (deg + 1, 2))])


# ---------------------------------------------------------------------------
# Lagrange coefficients
# ---------------------------------------------------------------------------

def test_constant_f_reproduces_gamma():
    G = GammaFunction(B2, Z3)
    for z in SAMPLE_POINTS:
        s = lagrange_coeffs(B2, Z3, ONE, z)
        assert len(s.coeffs) == 2
        assert abs(s.coeffs[0] - gamma_eval(G, z)) < 1e-12
        assert abs(s.coeffs[1]) < 1e-12
        assert s.residual < 1e-12


def test_f_equal_g_shifts_gamma_up():
    G = GammaFunction(B2, Z3)
    for z in SAMPLE_POINTS:
        s = lagrange_coeffs(B2, Z3, Z3, z)
        assert abs(s.coeffs[0]) < 1e-12
        assert abs(s.coeffs[1] - gamma_eval(G, z)) < 1e-12


def test_identity_g_interpolates_f():
    rng = np.random.default_rng(7)
    f = random_poly_oracle(rng, 5)
    for z in SAMPLE_POINTS:
        s = lagrange_coeffs(B3, IDENT, f, z)
        value = sum(c * z ** k for k, c in enumerate(s.coeffs))
        assert abs(value - f.eval(z)) < 1e-10


def test_near_critical_point_raises():
    with pytest.raises(NearCriticalPoint):
        lagrange_coeffs(B2, Z3, ONE, 1e-8 + 0j)


def test_coefficient_count_matches_degree():
    rng = np.random.default_rng(11)
    for n in (2, 3, 4):
        B = random_blaschke(rng, n)
        s = lagrange_coeffs(B, Z3, ONE, 0.41 + 0.17j)
        assert len(s.coeffs) == n


# ---------------------------------------------------------------------------
# grid verification and fiber constancy
# ---------------------------------------------------------------------------

def test_verify_decomposition_corpus():
    rng = np.random.default_rng(20260825)
    for _ in range(8):
        n = int(rng.integers(2, 5))
        B = random_blaschke(rng, n)
        g = random_poly_oracle(rng, int(rng.integers(2, 5)))
        f = random_poly_oracle(rng, int(rng.integers(0, 6)))
        report = verify_decomposition(B, g, f, points=30)
        assert len(report.samples) >= 20
        assert report.max_residual < 1e-8
        assert not report.degenerate


def test_verify_decomposition_polynomial_f_on_monomial_pair():
    rng = np.random.default_rng(3)
    f = random_poly_oracle(rng, 5)
    report = verify_decomposition(B3, poly_oracle([0, 0, 1]), f)
    assert report.max_residual < 1e-8


def test_verify_decomposition_degenerate_for_g_equal_b():
    report = verify_decomposition(B2, as_oracle(B2), poly_oracle([1, 2, 1]))
    assert report.degenerate
    assert report.max_residual < 1e-8      # identity trivially 0 = 0


def test_verify_decomposition_reports_skipped_points():
    grid = [0.4 + 0.1j, 1e-9 + 0j]
    report = verify_decomposition(B2, Z3, ONE, grid=grid)
    assert len(report.samples) == 1
    assert len(report.skipped) == 1
    assert abs(report.skipped[0][0]) < 1e-8


def test_fiber_constancy_random_points():
    rng = np.random.default_rng(5)
    for _ in range(20):
        z = complex(*rng.uniform(-0.5, 0.5, 2))
        if abs(z) < 0.05:
            continue
        assert fiber_constancy(B3, poly_oracle([0, 0, 1]), IDENT, z) < 1e-8


def test_fiber_constancy_constant_f():
    assert fiber_constancy(B3, Z3, ONE, 0.3 + 0.2j) < 1e-12


def test_coefficients_even_for_squared_generator():
    rng = np.random.default_rng(13)
    g = random_poly_oracle(rng, 3)
    f = random_poly_oracle(rng, 4)
    for z in SAMPLE_POINTS:
        a = lagrange_coeffs(B2, g, f, z)
        b = lagrange_coeffs(B2, g, f, -z)
        assert max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs)) < 1e-9


def test_raw_lagrange_agrees_at_regular_points():
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 50:
        n = int(rng.integers(2, 4))
        B = random_blaschke(rng, n)
        g = random_poly_oracle(rng, int(rng.integers(2, 4)))
        f = random_poly_oracle(rng, int(rng.integers(0, 5)))
        z = complex(*rng.uniform(-0.6, 0.6, 2))
        try:
            simplified = lagrange_coeffs(B, g, f, z)
            raw = raw_lagrange_coeffs(B, g, f, z)
        except (NearCriticalPoint, NearDegenerate):
            continue
        scale = max(1.0, max(abs(c) for c in simplified.coeffs))
        diff = max(abs(a - b) for a, b in zip(raw.coeffs, simplified.coeffs))
        assert diff < 1e-8 * scale
        checked += 1


def test_raw_lagrange_rejects_collapsed_nodes():
    with pytest.raises(NearDegenerate):
        raw_lagrange_coeffs(B2, as_oracle(B2), ONE, 0.4 + 0.1j)


def test_decomposition_grid_avoids_critical_fibers():
    grid = decomposition_grid(B2, count=40)
    assert len(grid) == 40
    # fiber of z^2 through any grid point stays separated
    for z in grid:
        pts = fiber(B2, z).points
        assert abs(pts[0] - pts[1]) > 1e-3


# ---------------------------------------------------------------------------
# degree-2 split
# ---------------------------------------------------------------------------

def test_split_odd_function():
    split = degree2_split(Z3, B2, SAMPLE_POINTS)
    for z, p1, p2 in zip(split.points, split.pi1, split.pi2):
        assert abs(p1) < 1e-12
        assert abs(p2 - z ** 3) < 1e-12


def test_split_even_function():
    split = degree2_split(poly_oracle([0, 0, 1]), B2, SAMPLE_POINTS)
    for z, p1, p2 in zip(split.points, split.pi1, split.pi2):
        assert abs(p1 - z ** 2) < 1e-12
        assert abs(p2) < 1e-12


def test_split_mixed_function():
    split = degree2_split(poly_oracle([1, 1]), B2, SAMPLE_POINTS)
    for z, p1, p2 in zip(split.points, split.pi1, split.pi2):
        assert abs(p1 - 1) < 1e-12
        assert abs(p2 - z) < 1e-12


def test_split_reconstructs_f_and_alternates():
    rng = np.random.default_rng(23)
    f = random_poly_oracle(rng, 5)
    split = degree2_split(f, B2, SAMPLE_POINTS)
    partner_split = degree2_split(f, B2, split.partners)
    for k, z in enumerate(split.points):
        assert abs(split.pi1[k] + split.pi2[k] - f.eval(z)) < 1e-12
        # composing with the involution fixes pi1 and negates pi2
        assert abs(partner_split.pi1[k] - split.pi1[k]) < 1e-12
        assert abs(partner_split.pi2[k] + split.pi2[k]) < 1e-12


def test_split_projections_idempotent_and_complementary():
    rng = np.random.default_rng(29)
    f = random_poly_oracle(rng, 4)
    split = degree2_split(f, B2, SAMPLE_POINTS)
    partner_split = degree2_split(f, B2, split.partners)
    for k in range(len(split.points)):
        p1_of_p1 = (split.pi1[k] + partner_split.pi1[k]) / 2
        p1_of_p2 = (split.pi2[k] + partner_split.pi2[k]) / 2
        assert abs(p1_of_p1 - split.pi1[k]) < 1e-12
        assert abs(p1_of_p2) < 1e-12


def test_split_requires_degree_two():
    with pytest.raises(DegreeNotTwo):
        degree2_split(Z3, B3, SAMPLE_POINTS)


# ---------------------------------------------------------------------------
# involution and membership
# ---------------------------------------------------------------------------

def test_involution_squared_generator():
    phi = degree2_involution(B2)
    for z in SAMPLE_POINTS:
        assert abs(phi.eval(z) + z) < 1e-14


def test_involution_polynomial_generator():
    p1 = ComplexPoly([0, Fraction(-1, 2), 1])     # z(z - 1/2)
    phi = degree2_involution(p1)
    for z in SAMPLE_POINTS:
        assert abs(phi.eval(z) - (0.5 - z)) < 1e-14


def test_involution_requires_degree_two():
    with pytest.raises(DegreeNotTwo):
        degree2_involution(B3)


def test_membership_odd_monomials():
    cert = degree2_membership(B2, Z3, poly_oracle([0, 1]))   # f = z
    assert not cert.member and not bool(cert)
    assert not cert.antisymmetric_part_zero
    assert len(cert.conditions) == 1
    cond = cert.conditions[0]
    assert abs(cond.zero) < 1e-9
    assert cond.required == 2 and cond.attained == 1

    cert = degree2_membership(B2, Z3, poly_oracle([0, 0, 0, 0, 0, 1]))
    assert cert.member
    assert cert.conditions[0].attained == 5


def test_membership_symmetric_function():
    # f = B^2 + 3B has no antisymmetric part
    f = compose_oracle(poly_oracle([0, 3, 1]), as_oracle(B2))
    cert = degree2_membership(B2, Z3, f)
    assert cert.member and cert.antisymmetric_part_zero
    assert all(c.attained == math.inf for c in cert.conditions)


def test_membership_zero_free_gamma_accepts_everything():
    # g = z^3 + z has Gamma = z^2 + 1 with no zeros inside the disk
    cert = degree2_membership(B2, poly_oracle([0, 1, 0, 1]), poly_oracle([0, 1]))
    assert cert.member
    assert cert.conditions == ()


def test_membership_mixed_f():
    # f = z^5 + B = z^5 + z^2: antisymmetric part z^5 clears Gamma = z^2
    cert = degree2_membership(B2, Z3, poly_oracle([0, 0, 1, 0, 0, 1]))
    assert cert.member


def test_membership_requires_exact_data():
    with pytest.raises(NotRational):
        degree2_membership(B2, Z3, poly_oracle([0, 1.5]))
    with pytest.raises(NotRational):
        degree2_membership(B2, poly_oracle([0, 0, 0, 1.0]), poly_oracle([0, 1]))


def test_membership_rejects_vanishing_gamma():
    with pytest.raises(NearDegenerate):
        degree2_membership(B2, poly_oracle([0, 0, 1]), poly_oracle([0, 1]))


def test_membership_requires_degree_two():
    with pytest.raises(DegreeNotTwo):
        degree2_membership(B3, Z3, poly_oracle([0, 1]))
