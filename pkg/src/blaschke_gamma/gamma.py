"""The discriminant quotient Gamma attached to a generator and a second
function.

For a degree-n generator ``B`` (finite Blaschke product on the disk, or a
polynomial on the plane) every point z has n fiber partners solving
``B(t) = B(z)``; with the base solution removed, the quotient

    Gamma(g)(z) = prod_j (g(z) - g(phi_j(z))) / prod_j (z - phi_j(z))

extends analytically across the finitely many points where fiber partners
collide.  Numeric evaluation works for any oracle g; when g is rational the
same function is computed in closed form by eliminating the fiber variable
with resultants.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .blaschke import (BlaschkeProduct, CriticalData, critical_data, fiber,
                       generator_degree, generator_derivative, generator_eval,
                       generator_is_disk_map)
from .errors import EvaluationFailure, NotAZero, NotRational, NoWitness
from .oracle import (AnalyticOracle, as_oracle, compose_oracle, poly_oracle,
                     scale_oracle, sum_oracle)
from .polycore import (BivariatePoly, ComplexPoly, RationalFn, poly_one,
                       resultant_in)

GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


def golden_spiral_grid(count: int, radius: float = 0.8):
    """Deterministic quasi-uniform points in the disk of the given radius."""
    pts = []
    for k in range(count):
        r = radius * math.sqrt((k + 0.5) / count)
        pts.append(r * cmath.exp(1j * GOLDEN_ANGLE * k))
    return pts


def circle_grid(count: int, radius: float, offset: float = 0.5):
    """Equispaced points on |z| = radius, offset to dodge axis atoms."""
    return [radius * cmath.exp(2j * math.pi * (k + offset) / count)
            for k in range(count)]


@dataclass(frozen=True)
class GammaSettings:
    """Evaluation tolerances.

    exclusion_radius: within this distance of a fiber-collision point the
        direct product is ill-conditioned and the value is recovered from
        the mean over a small surrounding circle.
    """

    exclusion_radius: float = 1e-5
    mean_circle_radius: float = 1e-4
    mean_circle_points: int = 8
    zero_tol: float = 1e-8
    witness_tol: float = 1e-6
    cluster_tol: float = 1e-7


DEFAULT_SETTINGS = GammaSettings()


class GammaFunction:
    """Gamma for a fixed generator and second function; immutable and
    re-entrant (evaluations share only read-only cached data)."""

    __slots__ = ("generator", "g", "settings", "_cache")

    def __init__(self, generator, g, settings: GammaSettings | None = None):
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "g", as_oracle(g))
        object.__setattr__(self, "settings", settings or DEFAULT_SETTINGS)
        object.__setattr__(self, "_cache", {})
        generator_degree(generator)  # validates the generator kind

    def __setattr__(self, name, value):
        raise AttributeError("GammaFunction is immutable")

    @property
    def degree(self) -> int:
        return generator_degree(self.generator)

    def critical(self) -> CriticalData:
        if "critical" not in self._cache:
            self._cache["critical"] = critical_data(self.generator)
        return self._cache["critical"]

    def exact(self) -> RationalFn | None:
        """Closed rational form of Gamma, or None when g is not rational."""
        if "exact" not in self._cache:
            try:
                self._cache["exact"] = gamma_exact(self.generator, self.g)
            except NotRational:
                self._cache["exact"] = None
        return self._cache["exact"]

    def eval(self, z) -> complex:
        return gamma_eval(self, z)

    __call__ = eval

    def eval_grid(self, points):
        return [gamma_eval(self, z) for z in points]


def _direct_product(G: GammaFunction, z: complex) -> complex:
    fb = fiber(G.generator, z, cluster_tol=G.settings.cluster_tol)
    gz = G.g.eval(z)
    acc = 1.0 + 0j
    for p in fb.others():
        dz = z - p
        if abs(dz) < 1e-12:
            raise ZeroDivisionError  # caught by gamma_eval, retried on circle
        acc *= (gz - G.g.eval(p)) / dz
    return acc


def _mean_circle(G: GammaFunction, z: complex) -> complex:
    s = G.settings
    radius = s.mean_circle_radius
    if generator_is_disk_map(G.generator):
        # keep the circle inside the closed disk
        radius = min(radius, max((1.0 - abs(z)) * 0.5, 1e-9))
    total = 0j
    m = s.mean_circle_points
    for k in range(m):
        w = z + radius * cmath.exp(2j * math.pi * (k + 0.5) / m)
        total += _direct_product(G, w)
    return total / m


def gamma_eval(G: GammaFunction, z) -> complex:
    """Value of Gamma at z; near fiber-collision points the removable
    singularity is crossed by averaging over a small circle (mean-value
    property of the analytic extension)."""
    z = complex(z)
    if G.degree == 1:
        return 1.0 + 0j
    if G.critical().distance_to_s0(z) < G.settings.exclusion_radius:
        return _mean_circle(G, z)
    try:
        return _direct_product(G, z)
    except ZeroDivisionError:
        return _mean_circle(G, z)


# ---------------------------------------------------------------------------
# exact path
# ---------------------------------------------------------------------------

def _generator_pair(gen):
    """(P, Q) with B = P/Q; Q = 1 for a polynomial generator."""
    if isinstance(gen, BlaschkeProduct):
        return gen.numden()
    return gen, poly_one(gen.exact)


def _fiber_bivariate(gen):
    """F(t,z) = P(t)Q(z) - P(z)Q(t), the cleared fiber equation; then the
    base root is divided out:  F = (t - z) * F1.  Returns (F1, L) with
    L = leading t-coefficient of F1 (a polynomial in z)."""
    p, q = _generator_pair(gen)
    n = generator_degree(gen)
    pc = list(p.coeffs) + [p.coeffs[0] * 0] * (n + 1 - len(p.coeffs))
    qc = list(q.coeffs) + [q.coeffs[0] * 0] * (n + 1 - len(q.coeffs))
    acoeffs = [q.scale(pc[k]) - p.scale(qc[k]) for k in range(n + 1)]
    # synthetic division by (t - z): multiply-by-z is a coefficient shift
    bcoeffs = [None] * n
    bcoeffs[n - 1] = acoeffs[n]
    for k in range(n - 2, -1, -1):
        bcoeffs[k] = acoeffs[k + 1] + bcoeffs[k + 1].shift_up(1)
    remainder = acoeffs[0] + bcoeffs[0].shift_up(1)
    if not remainder.is_zero:
        scale = max(float(np.max(np.abs(c.float_coeffs()))) if not c.is_zero
                    else 0.0 for c in acoeffs) or 1.0
        worst = float(np.max(np.abs(remainder.float_coeffs())))
        if worst > 1e-9 * scale:
            raise EvaluationFailure("fiber polynomial failed to split off "
                                    "the base root")
    f1 = BivariatePoly(bcoeffs)
    return f1, bcoeffs[n - 1]


def _as_rational(g) -> RationalFn:
    if isinstance(g, AnalyticOracle):
        return g.to_rational()
    if isinstance(g, RationalFn):
        return g
    if isinstance(g, ComplexPoly):
        return RationalFn(g, poly_one(g.exact))
    return as_oracle(g).to_rational()


def gamma_exact(gen, g) -> RationalFn:
    """Gamma as a rational function of z, by resultant elimination of the
    fiber variable.

    With F1(t,z) the fiber polynomial (base root removed, leading
    t-coefficient L(z)) and g = U/V,

        prod_j W(phi_j)  = res_t(F1, W) / L^{deg W},   W = U(z)V(t) - V(z)U(t)
        prod_j V(phi_j)  = res_t(F1, V) / L^{deg V}
        prod_j (z-phi_j) = F1(z,z) / L

    assemble to Num/Den below; the shared polynomial factors cancel exactly
    in the rational-function reduction.
    """
    g = _as_rational(g)
    n = generator_degree(gen)
    if n == 1:
        return RationalFn(poly_one(g.exact), poly_one(g.exact))
    f1, lead = _fiber_bivariate(gen)
    u, v = g.num, g.den
    d = max(u.degree, v.degree)
    uc = list(u.coeffs) + [u.coeffs[0] * 0] * (d + 1 - len(u.coeffs))
    vc = list(v.coeffs) + [v.coeffs[0] * 0] * (d + 1 - len(v.coeffs))
    wcoeffs = [u.scale(vc[k]) - v.scale(uc[k]) for k in range(d + 1)]
    w = BivariatePoly(wcoeffs)
    if w.deg_t < 0:
        # g is constant: every fiber difference vanishes
        zero = ComplexPoly([], exact=g.exact)
        return RationalFn(zero, poly_one(g.exact))
    rw = resultant_in(f1, w, eliminate="t")
    dw = w.deg_t
    dv = v.degree
    if dv == 0:
        rv = poly_one(v.exact).scale(v.coeffs[0] ** (n - 1))
    else:
        vbiv = BivariatePoly([ComplexPoly([c], exact=v.exact)
                              for c in v.coeffs])
        rv = resultant_in(f1, vbiv, eliminate="t")
    # F1(z, z)
    f1zz = None
    for k, c in enumerate(f1.tcoeffs):
        term = c.shift_up(k)
        f1zz = term if f1zz is None else f1zz + term
    num = rw * (lead ** (dv + 1))
    den = (lead ** dw) * (v ** (n - 1)) * rv * f1zz
    if not num.exact:
        num = num.trim(1e-10)
        den = den.trim(1e-10)
    if num.is_zero:
        return RationalFn(num, poly_one(num.exact))
    return RationalFn(num, den)


# ---------------------------------------------------------------------------
# zero witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessCase:
    """Certificate for a zero of Gamma.

    kind "fiber_partner": a distinct fiber point shares the g-value
    (annihilating functional f -> f(z0) - f(partner)).
    kind "critical_point": generator and g both have vanishing derivative
    (annihilating functional f -> f'(z0)).
    """

    kind: str
    z0: complex
    gamma_value: complex
    partner: complex | None = None
    value_gap: float | None = None
    b_derivative: complex | None = None
    g_derivative: complex | None = None


def gamma_zero_witness(G: GammaFunction, z0, tol: float | None = None,
                       witness_tol: float | None = None) -> WitnessCase:
    """Certify a claimed zero z0 of Gamma by one of the two structural
    mechanisms; NotAZero when |Gamma(z0)| is not small, NoWitness (with
    diagnostics) when neither mechanism verifies numerically."""
    z0 = complex(z0)
    tol = G.settings.zero_tol if tol is None else tol
    wtol = G.settings.witness_tol if witness_tol is None else witness_tol
    gv = gamma_eval(G, z0)
    if abs(gv) >= tol:
        raise NotAZero(f"|Gamma({z0})| = {abs(gv):.3e} >= {tol:.3e}")
    fb = fiber(G.generator, z0, cluster_tol=G.settings.cluster_tol)
    gz = G.g.eval(z0)
    best_partner = None
    best_gap = math.inf
    for p in fb.others():
        if abs(p - z0) < 1e-9:
            continue  # the partner must be genuinely distinct
        gap = abs(G.g.eval(p) - gz)
        if gap < best_gap:
            best_gap = gap
            best_partner = p
    if best_partner is not None and best_gap < wtol:
        return WitnessCase("fiber_partner", z0, gv, partner=best_partner,
                           value_gap=best_gap)
    bder = complex(generator_derivative(G.generator).eval(z0))
    gder = G.g.derivative_at(z0)
    if abs(bder) < wtol and abs(gder) < wtol:
        return WitnessCase("critical_point", z0, gv,
                           b_derivative=bder, g_derivative=gder)
    raise NoWitness(
        f"no certificate for zero at {z0}",
        diagnostics={
            "gamma_value": gv,
            "closest_partner": best_partner,
            "partner_value_gap": best_gap,
            "b_derivative": bder,
            "g_derivative": gder,
        })


# ---------------------------------------------------------------------------
# structural identities
# ---------------------------------------------------------------------------

def gamma_scaling_law_check(G: GammaFunction, c, grid,
                            shift: AnalyticOracle | None = None) -> float:
    """Max deviation over the grid of the two structural identities:
    scaling Gamma(c*g) = c^(n-1) * Gamma(g), and invariance of Gamma under
    adding a function of the generator (default shift h(B) = B^2)."""
    n = G.degree
    c = complex(c)
    scaled = GammaFunction(G.generator, scale_oracle(c, G.g), G.settings)
    if shift is None:
        shift = compose_oracle(poly_oracle([0, 0, 1]), as_oracle(G.generator))
    shifted = GammaFunction(G.generator, sum_oracle(G.g, shift), G.settings)
    dev = 0.0
    factor = c ** (n - 1)
    for z in grid:
        base = gamma_eval(G, z)
        dev = max(dev, abs(gamma_eval(scaled, z) - factor * base))
        dev = max(dev, abs(gamma_eval(shifted, z) - base))
    return dev
