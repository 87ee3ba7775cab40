from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from blaschke_gamma.errors import BoundaryRoot, DegreeZero, FloatBackend
from blaschke_gamma.polycore import (BivariatePoly, ComplexPoly,
                                     GaussianRational, RationalFn,
                                     disk_zero_count, poly_eval,
                                     poly_from_roots, poly_gcd, poly_roots,
                                     resultant_in)


# ---------------------------------------------------------------------------
# oracles (independent implementations used only by this test module)
# ---------------------------------------------------------------------------

def _eval_powersum(coeffs, z):
    # naive sum c_k z^k, no Horner
    return sum(c * z ** k for k, c in enumerate(coeffs))


def _det_cofactor(mat):
    # Laplace expansion over exact ComplexPoly entries; exponential, fine for
    # the small matrices used here
    n = len(mat)
    if n == 0:
        return ComplexPoly([1], exact=True)
    if n == 1:
        return mat[0][0]
    acc = ComplexPoly([], exact=True)
    for j in range(n):
        entry = mat[0][j]
        if entry.is_zero:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in mat[1:]]
        term = entry * _det_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _sylvester_rows(ac, bc):
    m = len(ac) - 1
    n = len(bc) - 1
    zero = ComplexPoly([], exact=True)
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(reversed(ac)) + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(reversed(bc)) + [zero] * (m - 1 - i))
    return rows


def _rand_qi(rng, max_den=8):
    return GaussianRational(
        Fraction(rng.randint(-6, 6), rng.randint(1, max_den)),
        Fraction(rng.randint(-6, 6), rng.randint(1, max_den)))


# ---------------------------------------------------------------------------
# evaluation / arithmetic
# ---------------------------------------------------------------------------

def test_eval_matches_powersum_float():
    rng = random.Random(7)
    for _ in range(50):
        deg = rng.randint(0, 9)
        coeffs = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                  for _ in range(deg + 1)]
        p = ComplexPoly(coeffs)
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        assert abs(p(z) - _eval_powersum(coeffs, z)) < 1e-12 * (1 + abs(p(z)))


def test_eval_exact_stays_exact():
    p = ComplexPoly([Fraction(1, 3), Fraction(-2, 7), 1])
    v = p.eval(GaussianRational(Fraction(1, 2), Fraction(0)))
    assert isinstance(v, GaussianRational)
    assert v.re == Fraction(1, 3) - Fraction(1, 7) + Fraction(1, 4)
    assert v.im == 0


def test_zero_poly_is_empty_and_degree_minus_one():
    p = ComplexPoly([0, 0, 0])
    assert p.is_zero and p.coeffs == () and p.degree == -1
    q = ComplexPoly([1.0, -1.0]) - ComplexPoly([1.0, -1.0])
    assert q.is_zero


def test_mul_divmod_roundtrip_exact():
    rng = random.Random(11)
    for _ in range(30):
        a = ComplexPoly([_rand_qi(rng) for _ in range(rng.randint(1, 5))],
                        exact=True)
        b = ComplexPoly([_rand_qi(rng) for _ in range(rng.randint(2, 5))],
                        exact=True)
        if a.is_zero or b.is_zero:
            continue
        q, r = (a * b).divmod(b)
        assert r.is_zero
        assert q == a


def test_backend_mixing_downgrades_to_float():
    a = ComplexPoly([Fraction(1, 2), 1])
    b = ComplexPoly([0.5, 1.0])
    assert a.exact and not b.exact
    assert not (a + b).exact
    assert not (a * b).exact


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def test_roots_planted_simple():
    rng = random.Random(3)
    for _ in range(25):
        k = rng.randint(1, 8)
        roots = []
        while len(roots) < k:
            cand = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
            if all(abs(cand - r) > 0.15 for r in roots):
                roots.append(cand)
        lead = complex(rng.uniform(0.5, 2), rng.uniform(-1, 1))
        p = poly_from_roots(roots, lead)
        rs = poly_roots(p)
        assert rs.total() == k
        got = sorted(rs.points(), key=lambda w: (w.real, w.imag))
        want = sorted(roots, key=lambda w: (w.real, w.imag))
        for g, w in zip(got, want):
            assert abs(g - w) < 1e-8 * max(1.0, abs(w))


def test_roots_planted_double_is_clustered():
    p = poly_from_roots([0.4 + 0.1j, 0.4 + 0.1j, -0.7], 1.0)
    rs = poly_roots(p)
    mults = sorted(m for _, m in rs.roots)
    assert mults == [1, 2]
    double = next(loc for loc, m in rs.roots if m == 2)
    assert abs(double - (0.4 + 0.1j)) < 1e-6


def test_roots_reconstruction_invariant():
    rng = random.Random(19)
    for _ in range(20):
        deg = rng.randint(1, 8)
        coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                  for _ in range(deg)] + [1.0]
        p = ComplexPoly(coeffs)
        rs = poly_roots(p)
        rebuilt = poly_from_roots(
            [loc for loc, m in rs.roots for _ in range(m)], p.lc())
        err = max(abs(x - y) for x, y in zip(
            np.pad(rebuilt.float_coeffs(), (0, len(coeffs) - len(rebuilt.coeffs))),
            p.float_coeffs()))
        assert err < 1e-8
        assert rs.residual < 1e-8


def test_roots_rejects_constants():
    with pytest.raises(DegreeZero):
        poly_roots(ComplexPoly([2.0]))
    with pytest.raises(DegreeZero):
        poly_roots(ComplexPoly([]))


# ---------------------------------------------------------------------------
# disk zero counting
# ---------------------------------------------------------------------------

def test_disk_count_example_inside_outside():
    # z(z-2): one zero inside the unit circle
    p = ComplexPoly([0, -2, 1], exact=True)
    assert disk_zero_count(p, 1.0) == 1
    assert disk_zero_count(p.to_float(), 1.0) == 1


def test_disk_count_multiplicity():
    # (z-1/2)^2 (z-3): two zeros inside, with multiplicity
    p = poly_from_roots([Fraction(1, 2), Fraction(1, 2), 3], 1, exact=True)
    assert disk_zero_count(p, 1.0) == 2
    assert disk_zero_count(p.to_float(), 1.0) == 2


def test_disk_count_boundary_root_raises():
    p = poly_from_roots([1.0, 0.3], 1.0)
    with pytest.raises(BoundaryRoot):
        disk_zero_count(p, 1.0)


def test_disk_count_inversive_pair_needs_dither():
    # roots 1/2 and 2 = 1/conj(1/2): first Schur step is degenerate
    p = poly_from_roots([Fraction(1, 2), 2], 1, exact=True)
    assert disk_zero_count(p, 1.0) == 1


def test_disk_count_origin_roots():
    p = ComplexPoly([0, 0, 0, 1], exact=True)  # z^3
    assert disk_zero_count(p, 1.0) == 3


def test_schur_cohn_agrees_with_filtered_roots_500():
    rng = random.Random(123)
    checked = 0
    while checked < 500:
        deg = rng.randint(1, 10)
        coeffs = [_rand_qi(rng) for _ in range(deg + 1)]
        if not coeffs[-1]:
            continue
        p = ComplexPoly(coeffs, exact=True)
        if p.degree < 1:
            continue
        rs = poly_roots(p)
        if any(abs(abs(loc) - 1.0) < 1e-3 for loc, _ in rs.roots):
            continue  # keep the comparison away from the circle
        expected = sum(m for loc, m in rs.roots if abs(loc) < 1.0)
        assert disk_zero_count(p, 1.0) == expected
        checked += 1


def test_disk_count_radius_scaling():
    p = poly_from_roots([Fraction(1, 2), Fraction(3, 4), 2], 1, exact=True)
    assert disk_zero_count(p, 0.6) == 1
    assert disk_zero_count(p, 0.9) == 2
    assert disk_zero_count(p, 3.0) == 3


# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------

def test_gcd_planted_common_factor():
    rng = random.Random(5)
    for _ in range(20):
        g = ComplexPoly([_rand_qi(rng), _rand_qi(rng), QI_ONE := GaussianRational(Fraction(1), Fraction(0))],
                        exact=True)
        a = g * ComplexPoly([_rand_qi(rng), GaussianRational(Fraction(1), Fraction(0))], exact=True)
        b = g * ComplexPoly([_rand_qi(rng), _rand_qi(rng), GaussianRational(Fraction(1), Fraction(0))], exact=True)
        d = poly_gcd(a, b)
        # d must divide both and contain g (generic cofactors are coprime)
        assert (a % d).is_zero and (b % d).is_zero
        assert (d % g.monic()).is_zero


def test_gcd_rejects_floats():
    with pytest.raises(FloatBackend):
        poly_gcd(ComplexPoly([1.0, 1.0]), ComplexPoly([1.0, 2.0]))


def test_gcd_with_zero():
    p = ComplexPoly([2, 4], exact=True)
    z = ComplexPoly([], exact=True)
    assert poly_gcd(p, z) == p.monic()
    assert poly_gcd(z, z).is_zero


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def test_resultant_linear_example():
    # res_t(t - z, t - z^2) = z - z^2 up to sign
    zero = Fraction(0)
    p = BivariatePoly([ComplexPoly([0, -1], exact=True), ComplexPoly([1], exact=True)])
    q = BivariatePoly([ComplexPoly([0, 0, -1], exact=True), ComplexPoly([1], exact=True)])
    r = resultant_in(p, q, "t")
    expect = ComplexPoly([0, 1, -1], exact=True)
    assert r == expect or r == -expect


def test_resultant_matches_cofactor_oracle_exact():
    rng = random.Random(31)
    for _ in range(15):
        dt1, dt2 = rng.randint(1, 3), rng.randint(1, 3)
        p = BivariatePoly([ComplexPoly([_rand_qi(rng, 4) for _ in range(rng.randint(1, 3))], exact=True)
                           for _ in range(dt1 + 1)])
        q = BivariatePoly([ComplexPoly([_rand_qi(rng, 4) for _ in range(rng.randint(1, 3))], exact=True)
                           for _ in range(dt2 + 1)])
        if p.deg_t < 1 or q.deg_t < 1:
            continue
        got = resultant_in(p, q, "t")
        oracle = _det_cofactor(_sylvester_rows(list(p.tcoeffs), list(q.tcoeffs)))
        assert (got - oracle).is_zero


def test_resultant_float_matches_exact():
    rng = random.Random(41)
    for _ in range(10):
        p = BivariatePoly([ComplexPoly([_rand_qi(rng, 4) for _ in range(2)], exact=True)
                           for _ in range(3)])
        q = BivariatePoly([ComplexPoly([_rand_qi(rng, 4) for _ in range(3)], exact=True)
                           for _ in range(2)])
        if p.deg_t < 1 or q.deg_t < 1:
            continue
        exact = resultant_in(p, q, "t").float_coeffs()
        fl = resultant_in(
            BivariatePoly([c.to_float() for c in p.tcoeffs]),
            BivariatePoly([c.to_float() for c in q.tcoeffs]), "t").float_coeffs()
        n = max(len(exact), len(fl))
        exact = np.pad(exact, (0, n - len(exact)))
        fl = np.pad(fl, (0, n - len(fl)))
        scale = max(1.0, np.max(np.abs(exact)))
        assert np.max(np.abs(exact - fl)) < 1e-8 * scale


def test_resultant_eliminate_z():
    p = BivariatePoly([ComplexPoly([0, -1], exact=True), ComplexPoly([1], exact=True)])
    q = BivariatePoly([ComplexPoly([0, 0, -1], exact=True), ComplexPoly([1], exact=True)])
    # swapping variables then eliminating z is the same as eliminating t of
    # the swapped polynomials
    r1 = resultant_in(p, q, "z")
    r2 = resultant_in(p.swap(), q.swap(), "t")
    assert (r1 - r2).is_zero


def test_resultant_degree_zero_raises():
    c = BivariatePoly([ComplexPoly([1], exact=True)])
    p = BivariatePoly([ComplexPoly([0, 1], exact=True), ComplexPoly([1], exact=True)])
    with pytest.raises(DegreeZero):
        resultant_in(c, p, "t")


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

def test_rational_reduction_is_canonical():
    num = ComplexPoly([0, 2], exact=True) * ComplexPoly([1, 1], exact=True)
    den = ComplexPoly([2, 2], exact=True)
    r = RationalFn(num, den)
    assert r.num == ComplexPoly([0, 1], exact=True)
    assert r.den == ComplexPoly([1], exact=True)


def test_rational_derivative_matches_finite_differences():
    rng = random.Random(13)
    r = RationalFn(ComplexPoly([1, 2, 1], exact=True),
                   ComplexPoly([3, 0, 1], exact=True))
    d = r.derivative()
    for _ in range(10):
        z = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        h = 1e-6
        fd = (r.eval(z + h) - r.eval(z - h)) / (2 * h)
        assert abs(d.eval(z) - fd) < 1e-7 * (1 + abs(fd))


def test_rational_compose():
    # f = z^2, g = (1+z)/(1-z): f(g) = (1+z)^2/(1-z)^2
    f = RationalFn(ComplexPoly([0, 0, 1], exact=True), ComplexPoly([1], exact=True))
    g = RationalFn(ComplexPoly([1, 1], exact=True), ComplexPoly([1, -1], exact=True))
    h = f.compose(g)
    for z in [0.2, -0.3 + 0.1j, 0.05j]:
        assert abs(h.eval(z) - f.eval(g.eval(z))) < 1e-12


def test_rational_equality_cross_multiplied():
    a = RationalFn(ComplexPoly([0, 1], exact=True), ComplexPoly([1], exact=True))
    b = RationalFn(ComplexPoly([0, 2], exact=True), ComplexPoly([2], exact=True))
    assert a == b
