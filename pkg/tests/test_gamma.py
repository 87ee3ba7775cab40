import cmath
import math
import random
from fractions import Fraction

import pytest

from blaschke_gamma.blaschke import BlaschkeProduct
from blaschke_gamma.errors import NoWitness, NotAZero, NotRational
from blaschke_gamma.gamma import (GammaFunction, GammaSettings, circle_grid,
                                  gamma_eval, gamma_exact,
                                  gamma_scaling_law_check, gamma_zero_witness,
                                  golden_spiral_grid)
from blaschke_gamma.oracle import (compose_oracle, identity_oracle,
                                   poly_oracle, product_oracle,
                                   singular_inner_oracle)
from blaschke_gamma.polycore import ComplexPoly, RationalFn


def _random_product(rng, degree, rmax=0.7):
    zeros = []
    while len(zeros) < degree:
        a = complex(rng.uniform(-rmax, rmax), rng.uniform(-rmax, rmax))
        if abs(a) < rmax:
            zeros.append(a)
    theta = rng.uniform(0, 2 * math.pi)
    return BlaschkeProduct(zeros, cmath.exp(1j * theta))


def chi():
    return singular_inner_oracle(1.0, 1.0)


# ---------------------------------------------------------------------------
# known values
# ---------------------------------------------------------------------------

def test_identity_function_gives_one():
    rng = random.Random(11)
    for _ in range(5):
        b = _random_product(rng, rng.randint(2, 6))
        G = GammaFunction(b, identity_oracle())
        for z in golden_spiral_grid(20, 0.9):
            assert abs(gamma_eval(G, z) - 1.0) < 1e-10


def test_square_cube_closed_form():
    b = BlaschkeProduct([0.0, 0.0])
    G = GammaFunction(b, poly_oracle([0, 0, 0, 1]))
    for z in golden_spiral_grid(30, 0.95):
        assert abs(gamma_eval(G, z) - z * z) < 1e-10


def test_g_equal_generator_gives_zero():
    b = BlaschkeProduct([0.0, 0.3])
    G = GammaFunction(b, b)
    for z in golden_spiral_grid(10, 0.8):
        assert abs(gamma_eval(G, z)) < 1e-10


def test_singular_inner_composite():
    # B = z^2, g = z * chi(z^2): Gamma(g) = chi(z^2)
    b = BlaschkeProduct([0.0, 0.0])
    g = product_oracle(identity_oracle(),
                       compose_oracle(chi(), poly_oracle([0, 0, 1])))
    G = GammaFunction(b, g)
    for z in golden_spiral_grid(50, 0.9):
        want = cmath.exp((z * z + 1) / (z * z - 1))
        assert abs(gamma_eval(G, z) - want) < 1e-9


def test_atom_quotient_value_at_origin():
    # B = z^2, g = chi: Gamma(g)(z) = (chi(z) - chi(-z)) / (2z), and at the
    # origin the removable value is chi'(0) = -2/e
    b = BlaschkeProduct([0.0, 0.0])
    G = GammaFunction(b, chi())
    z = 0.4 + 0.1j
    want = (cmath.exp((z + 1) / (z - 1)) - cmath.exp((-z + 1) / (-z - 1))) / (2 * z)
    assert abs(gamma_eval(G, z) - want) < 1e-11
    assert abs(gamma_eval(G, 0.0) - (-2.0 / math.e)) < 1e-7


def test_degree_one_generator():
    b = BlaschkeProduct([0.4])
    G = GammaFunction(b, poly_oracle([0, 0, 1]))
    assert gamma_eval(G, 0.2) == 1.0


# ---------------------------------------------------------------------------
# exact path
# ---------------------------------------------------------------------------

def test_exact_square_cube():
    b = BlaschkeProduct([0, 0], exact=True)
    r = gamma_exact(b, ComplexPoly([0, 0, 0, 1], exact=True))
    assert r.exact
    assert r.den.degree == 0
    # Gamma = z^2 exactly
    assert r == RationalFn(ComplexPoly([0, 0, 1], exact=True),
                           ComplexPoly([1], exact=True))


def test_exact_polynomial_sharpness_pair():
    for a in (Fraction(1, 2), Fraction(1, 3)):
        p1 = ComplexPoly([0, -a, 1], exact=True)
        p2 = ComplexPoly([0, 0, -a, 1], exact=True)
        r = gamma_exact(p1, p2)
        assert r == RationalFn(p1, ComplexPoly([1], exact=True))


def test_exact_monomial_degree_growth():
    # B = z^5, g = z^3: Gamma = c * z^8 with c nonzero
    b = BlaschkeProduct([0] * 5, exact=True)
    r = gamma_exact(b, ComplexPoly([0, 0, 0, 1], exact=True))
    assert r.den.degree == 0
    assert r.num.degree == 8
    lead = r.num.coeffs[8] / r.den.coeffs[0]
    assert bool(lead)
    for k in range(8):
        assert not r.num.coeffs[k]


def test_exact_gamma_zero_when_g_factors_through_generator():
    b = BlaschkeProduct([0, 0, 0, 0], exact=True)
    r = gamma_exact(b, ComplexPoly([0, 0, 0, 0, 0, 0, 1], exact=True))
    assert r.is_zero  # z^6 vs z^4: gcd 2 > 1 forces collapse... check below


def test_exact_matches_numeric_on_grid():
    rng = random.Random(7)
    b1 = BlaschkeProduct([0.0, 0.4 - 0.1j])
    b2 = BlaschkeProduct([0.25, -0.3, 0.1j])
    b3 = BlaschkeProduct([0.0, 0.0])
    g3 = RationalFn(ComplexPoly([0, 1]), ComplexPoly([1, 0.25]))
    cases = [(b1, poly_oracle([0.2, 0, 1, 0.5])),
             (b2, poly_oracle([0, 1, 1])),
             (b3, g3)]
    for gen, g in cases:
        G = GammaFunction(gen, g)
        r = G.exact()
        assert r is not None
        count = 0
        while count < 200:
            z = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
            if abs(z) > 0.92 or G.critical().distance_to_s0(z) < 1e-3:
                continue
            count += 1
            assert abs(gamma_eval(G, z) - complex(r.eval(z))) < 1e-9


def test_exact_rejects_singular_inner():
    b = BlaschkeProduct([0.0, 0.0])
    with pytest.raises(NotRational):
        gamma_exact(b, product_oracle(identity_oracle(), chi()))


def test_exact_blaschke_g():
    # g itself a Blaschke product (rational): exact path works end to end
    b = BlaschkeProduct([0, 0], exact=True)
    g = BlaschkeProduct([Fraction(1, 2)], exact=True)
    G = GammaFunction(b, g)
    r = G.exact()
    rng = random.Random(3)
    for _ in range(30):
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        if abs(z) < 1e-3:
            continue
        assert abs(gamma_eval(G, z) - complex(r.eval(z))) < 1e-10


# ---------------------------------------------------------------------------
# removability and invariances
# ---------------------------------------------------------------------------

def test_shuffle_invariance_of_product():
    # evaluating with fiber points in any order gives the same value: the
    # product formula is symmetric; exercised via repeated evaluation
    b = BlaschkeProduct([0.2, -0.5, 0.1 + 0.3j])
    G = GammaFunction(b, poly_oracle([0, 0, 1, 1]))
    z = 0.33 - 0.21j
    vals = {gamma_eval(G, z) for _ in range(5)}
    assert len(vals) == 1


def test_removability_mean_value_agreement():
    # value just outside the exclusion radius of a collision point agrees
    # with the average over a surrounding circle
    b = BlaschkeProduct([0.0, 0.5])
    G = GammaFunction(b, poly_oracle([0, 0, 0, 1]))
    crit = G.critical().points.roots[0][0]
    z = crit + 1e-4
    direct = gamma_eval(G, z)
    ring = [z + 1e-3 * cmath.exp(2j * math.pi * (k + 0.5) / 16)
            for k in range(16)]
    mean = sum(gamma_eval(G, w) for w in ring) / 16
    assert abs(direct - mean) < 1e-5


def test_value_inside_exclusion_radius_is_finite_and_smooth():
    b = BlaschkeProduct([0.0, 0.5])
    G = GammaFunction(b, poly_oracle([0, 0, 0, 1]))
    crit = G.critical().points.roots[0][0]
    inner = gamma_eval(G, crit + 1e-7)
    outer = gamma_eval(G, crit + 2e-5)
    assert abs(inner - outer) < 1e-3
    exact = G.exact()
    assert abs(inner - complex(exact.eval(crit + 1e-7))) < 1e-6


def test_scaling_and_shift_laws():
    rng = random.Random(19)
    b = _random_product(rng, 3)
    G = GammaFunction(b, poly_oracle([0, 0.5, 0, 1]))
    grid = golden_spiral_grid(25, 0.75)
    assert gamma_scaling_law_check(G, 1.0, grid) < 1e-10
    assert gamma_scaling_law_check(G, 2.0, grid) < 1e-9
    assert gamma_scaling_law_check(G, 0.5 - 1.2j, grid) < 1e-9


def test_bounded_near_circle():
    b = BlaschkeProduct([0.0, 0.0])
    g = product_oracle(identity_oracle(),
                       compose_oracle(chi(), poly_oracle([0, 0, 1])))
    G = GammaFunction(b, g)
    sup1 = max(abs(gamma_eval(G, z)) for z in circle_grid(64, 0.999))
    sup2 = max(abs(gamma_eval(G, z)) for z in circle_grid(128, 0.999))
    assert sup1 < 2.0 and sup2 < 2.0
    assert abs(sup1 - sup2) < 0.5


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

def test_witness_critical_point_case():
    b = BlaschkeProduct([0.0, 0.0])
    G = GammaFunction(b, poly_oracle([0, 0, 0, 1]))
    w = gamma_zero_witness(G, 0.0)
    assert w.kind == "critical_point"
    assert abs(w.b_derivative) < 1e-9
    assert abs(w.g_derivative) < 1e-9


def test_witness_fiber_partner_case():
    p1 = ComplexPoly([0, Fraction(-1, 2), 1], exact=True)
    p2 = ComplexPoly([0, 0, Fraction(-1, 2), 1], exact=True)
    G = GammaFunction(p1, poly_oracle(p2))
    w = gamma_zero_witness(G, 0.0)
    assert w.kind == "fiber_partner"
    assert abs(w.partner - 0.5) < 1e-9


def test_witness_not_a_zero():
    b = BlaschkeProduct([0.0, 0.0])
    G = GammaFunction(b, poly_oracle([0, 1, 1]))  # Gamma = 1 everywhere
    with pytest.raises(NotAZero):
        gamma_zero_witness(G, 0.1)
    with pytest.raises(NotAZero):
        gamma_zero_witness(G, 0.0)


def test_exact_equals_numeric_invariant_on_gammafunction():
    b = BlaschkeProduct([0.0, 0.2 + 0.1j, -0.4])
    G = GammaFunction(b, poly_oracle([1, 0, 0.3, 0, 1]))
    r = G.exact()
    count = 0
    rng = random.Random(123)
    while count < 100:
        z = complex(rng.uniform(-0.85, 0.85), rng.uniform(-0.85, 0.85))
        if abs(z) > 0.9 or G.critical().distance_to_s0(z) < 1e-3:
            continue
        count += 1
        assert abs(gamma_eval(G, z) - complex(r.eval(z))) < 1e-9
