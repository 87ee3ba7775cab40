"""Fiber-Lagrange decomposition and degree-2 projection machinery.

For a degree-n generator B and a second function g, interpolation over the
fiber of B through z produces coefficients A_0(z) .. A_{n-1}(z) with

    f(z) * Gamma(g)(z) = sum_k A_k(z) * g(z)^k

and each A_k constant on fibers of B (so a function of B alone).  For
degree-2 generators the fiber involution phi splits any f into symmetric
and antisymmetric parts, and membership of f in the closed algebra reduces
to divisibility of the antisymmetric part by the in-disk zeros of Gamma.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .blaschke import critical_data, fiber, generator_degree
from .errors import (DegreeNotTwo, NearCriticalPoint, NearDegenerate,
                     NotRational)
from .gamma import _fiber_bivariate, gamma_exact, golden_spiral_grid
from .oracle import as_oracle
from .polycore import (RationalFn, disk_zero_count, poly_gcd, poly_roots)

# fiber points closer than this are treated as a critical-point collision
_FIBER_SEPARATION = 1e-6
# relative g-value separation below which the interpolation nodes collapse
_GVALUE_SEPARATION = 1e-7
# in-disk zeros for membership are counted strictly inside this radius
_MEMBERSHIP_RADIUS = 1.0 - 1e-7


@dataclass(frozen=True)
class DecompositionSample:
    """Coefficients A_0(z)..A_{n-1}(z) at one point, with the residual
    |f(z) Gamma(g)(z) - sum A_k g(z)^k|; g_values_collapsed notes that the
    interpolation nodes g(phi_j) were not separated (the identity still
    holds, but the coefficients carry no interpolation content)."""

    z: complex
    coeffs: tuple
    residual: float
    g_values_collapsed: bool = False


@dataclass(frozen=True)
class DecompositionReport:
    """Grid verification of the decomposition identity.

    degenerate means every usable sample had collapsed g-fiber-values
    (e.g. g a function of B), so the coefficient data is vacuous."""

    max_residual: float
    samples: tuple
    skipped: tuple
    degenerate: bool


@dataclass(frozen=True)
class Degree2Split:
    """Samples of f = pi1 + pi2 with pi1 symmetric and pi2 antisymmetric
    under the fiber involution phi of a degree-2 generator."""

    points: tuple
    partners: tuple
    pi1: tuple
    pi2: tuple


@dataclass(frozen=True)
class MembershipCondition:
    zero: complex
    required: int
    attained: float


@dataclass(frozen=True)
class MembershipCertificate:
    """Decision data for f in the closed algebra of a degree-2 generator:
    the antisymmetric part of f must vanish at every in-disk zero of Gamma
    to at least the zero's multiplicity."""

    member: bool
    antisymmetric_part_zero: bool
    conditions: tuple

    def __bool__(self) -> bool:
        return self.member


def _fiber_points(generator, z):
    pts = list(fiber(generator, z).points)
    n = len(pts)
    worst = min((abs(pts[i] - pts[j])
                 for i in range(n) for j in range(i + 1, n)),
                default=math.inf)
    if worst < _FIBER_SEPARATION:
        raise NearCriticalPoint(
            f"fiber points separated by only {worst:.3e} at z = {z}; "
            "evaluate away from the critical set")
    return pts


def _nodes(generator, g, f, z):
    g = as_oracle(g)
    f = as_oracle(f)
    pts = _fiber_points(generator, z)
    gv = [g.eval(p) for p in pts]
    fv = [f.eval(p) for p in pts]
    return pts, gv, fv


def _gvalues_collapsed(gv) -> bool:
    n = len(gv)
    scale = max(1.0, max(abs(v) for v in gv))
    worst = min((abs(gv[i] - gv[j])
                 for i in range(n) for j in range(i + 1, n)),
                default=math.inf)
    return worst < _GVALUE_SEPARATION * scale


def _base_gamma(pts, gv) -> complex:
    out = 1.0 + 0j
    for l in range(1, len(pts)):
        out *= (gv[0] - gv[l]) / (pts[0] - pts[l])
    return out


def _sample(z, coeffs, pts, gv, fv) -> DecompositionSample:
    h = fv[0] * _base_gamma(pts, gv)
    approx = complex(np.polyval(coeffs[::-1], gv[0]))
    return DecompositionSample(complex(z), tuple(complex(c) for c in coeffs),
                               abs(h - approx), _gvalues_collapsed(gv))


def lagrange_coeffs(generator, g, f, z) -> DecompositionSample:
    """Coefficients of the fiber interpolation

        L_z(X) = sum_j f(phi_j) prod_{l != j} (X - g(phi_l)) / (phi_j - phi_l)

    expanded in the monomial basis; L_z(g(z)) = f(z) Gamma(g)(z), so the
    residual field measures the conditioning of the expansion."""
    n = generator_degree(generator)
    pts, gv, fv = _nodes(generator, g, f, z)
    coeffs = np.zeros(n, dtype=complex)
    for j in range(n):
        denom = 1.0 + 0j
        factor = np.array([1.0 + 0j])
        for l in range(n):
            if l == j:
                continue
            denom *= pts[j] - pts[l]
            factor = np.convolve(factor, np.array([-gv[l], 1.0 + 0j]))
        coeffs[:factor.size] += (fv[j] / denom) * factor
    return _sample(z, coeffs, pts, gv, fv)


def raw_lagrange_coeffs(generator, g, f, z) -> DecompositionSample:
    """Interpolation of h = f * Gamma(g) directly through the nodes
    g(phi_j); agrees with lagrange_coeffs wherever the nodes stay apart."""
    n = generator_degree(generator)
    pts, gv, fv = _nodes(generator, g, f, z)
    if _gvalues_collapsed(gv):
        raise NearDegenerate(
            f"g-fiber-values collapsed at z = {z}; the direct interpolation "
            "form divides by their differences")
    coeffs = np.zeros(n, dtype=complex)
    for j in range(n):
        gamma_j = 1.0 + 0j
        for l in range(n):
            if l != j:
                gamma_j *= (gv[j] - gv[l]) / (pts[j] - pts[l])
        denom = 1.0 + 0j
        factor = np.array([1.0 + 0j])
        for l in range(n):
            if l == j:
                continue
            denom *= gv[j] - gv[l]
            factor = np.convolve(factor, np.array([-gv[l], 1.0 + 0j]))
        coeffs[:factor.size] += (fv[j] * gamma_j / denom) * factor
    return _sample(z, coeffs, pts, gv, fv)


def fiber_constancy(generator, g, f, z) -> float:
    """Max over fiber points phi_j and indices k of
    |A_k(phi_j) - A_k(z)|: the coefficients must factor through B."""
    base = lagrange_coeffs(generator, g, f, z)
    pts = _fiber_points(generator, z)
    worst = 0.0
    for p in pts[1:]:
        other = lagrange_coeffs(generator, g, f, p)
        worst = max(worst, max(abs(a - b) for a, b
                               in zip(other.coeffs, base.coeffs)))
    return worst


def decomposition_grid(generator, count: int = 50, radius: float = 0.75,
                       s0_clearance: float = 1e-3):
    """Evaluation grid avoiding the critical-value fibers of the
    generator."""
    cd = critical_data(generator)
    grid = [z for z in golden_spiral_grid(4 * count, radius)
            if cd.distance_to_s0(z) > s0_clearance]
    return grid[:count]


def verify_decomposition(generator, g, f, grid=None,
                         points: int = 50) -> DecompositionReport:
    """Decomposition identity over a grid; near-critical points are
    skipped and reported rather than raised."""
    g = as_oracle(g)
    f = as_oracle(f)
    if grid is None:
        grid = decomposition_grid(generator, points)
    samples = []
    skipped = []
    for z in grid:
        try:
            samples.append(lagrange_coeffs(generator, g, f, z))
        except NearCriticalPoint as exc:
            skipped.append((complex(z), str(exc)))
    max_residual = max((s.residual for s in samples), default=math.nan)
    degenerate = bool(samples) and all(s.g_values_collapsed for s in samples)
    return DecompositionReport(max_residual, tuple(samples), tuple(skipped),
                               degenerate)


# ---------------------------------------------------------------------------
# degree-2 machinery
# ---------------------------------------------------------------------------

def _require_degree2(generator) -> None:
    n = generator_degree(generator)
    if n != 2:
        raise DegreeNotTwo(f"generator has degree {n}; the involution and "
                           "membership machinery need degree 2")


def degree2_involution(generator) -> RationalFn:
    """The rational involution phi with fiber {z, phi(z)}: from the fiber
    polynomial a(z) t + b(z) left after the base root is divided out."""
    _require_degree2(generator)
    f1, _ = _fiber_bivariate(generator)
    b, a = f1.tcoeffs[0], f1.tcoeffs[1]
    return RationalFn(-b, a)


def degree2_split(f, generator, grid) -> Degree2Split:
    """Samples of the symmetric/antisymmetric parts
    pi1 = (f + f o phi) / 2 and pi2 = (f - f o phi) / 2 over the grid."""
    _require_degree2(generator)
    f = as_oracle(f)
    points = []
    partners = []
    pi1 = []
    pi2 = []
    for z in grid:
        phi = fiber(generator, z).others()[0]
        a = f.eval(z)
        b = f.eval(phi)
        points.append(complex(z))
        partners.append(complex(phi))
        pi1.append((a + b) / 2)
        pi2.append((a - b) / 2)
    return Degree2Split(tuple(points), tuple(partners), tuple(pi1),
                        tuple(pi2))


def _attained_order(numerator, zero, tol: float = 1e-6) -> int:
    if numerator.degree < 1:
        return 0
    return sum(m for loc, m in poly_roots(numerator.to_float()).roots
               if abs(loc - zero) < tol)


def degree2_membership(generator, g, f) -> MembershipCertificate:
    """Is f in the closed algebra generated by a degree-2 B and g?

    Exactly when the antisymmetric part pi2(f) vanishes at every in-disk
    zero of Gamma(g) to at least its multiplicity.  The decision is exact:
    with H the reduced numerator of Gamma and F that of pi2(f), membership
    holds iff H / gcd(F, H) has no zeros in the disk (no float roots are
    consulted).  The certificate lists each in-disk zero with the required
    and attained vanishing orders for inspection."""
    _require_degree2(generator)
    gr = as_oracle(g).to_rational()
    fr = as_oracle(f).to_rational()
    if not (gr.exact and fr.exact):
        raise NotRational("the membership decision needs exact rational "
                          "coefficients")
    gamma = gamma_exact(generator, gr)
    if not gamma.exact:
        raise NotRational("the generator must carry exact coefficients for "
                          "the membership decision")
    H = gamma.num
    if H.is_zero:
        raise NearDegenerate("Gamma(g) vanishes identically; there is no "
                             "inner part to divide by")
    phi = degree2_involution(generator)
    pi2 = (fr - fr.compose(phi)).scale(Fraction(1, 2))
    F = pi2.num
    if F.is_zero:
        member = True
    else:
        quotient = H.div_exact(poly_gcd(F, H))
        member = disk_zero_count(quotient, _MEMBERSHIP_RADIUS,
                                 boundary_tol=1e-9) == 0
    conditions = []
    if H.degree >= 1:
        for loc, m in poly_roots(H.to_float()).roots:
            if abs(loc) >= _MEMBERSHIP_RADIUS:
                continue
            attained = math.inf if F.is_zero else _attained_order(F, loc)
            conditions.append(MembershipCondition(complex(loc), m, attained))
    return MembershipCertificate(member, F.is_zero, tuple(conditions))
