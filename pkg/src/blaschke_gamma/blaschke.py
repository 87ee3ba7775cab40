"""Finite Blaschke products, fibers, critical data.

A degree-n Blaschke product maps the closed disk onto itself n-to-1; the
fiber through z is the root set of a degree-n polynomial whose coefficients
are affine in the value B(z).  The same fiber machinery also serves plain
polynomial generators (fiber of p through z = roots of p(t) - p(z)), which is
what the generator_* helpers abstract over.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (DegenerateLeading, DegreeZero, InconsistentFiber,
                     OutsideDomain)
from .polycore import (ComplexPoly, GaussianRational, RationalFn, RootSet,
                       _cluster, _polish, _roots_raw, poly_one, poly_roots,
                       _looks_exact)

_EVAL_SLACK = 1e-6          # how far past the closed disk evaluation tolerates
_UNIMODULAR_TOL = 1e-12     # |c| must be 1 within this
_ZERO_MARGIN = 1e-12        # zeros must satisfy |a| < 1 - margin


class BlaschkeProduct:
    """c * prod (a_j - z)/(1 - conj(a_j) z) with |a_j| < 1, |c| = 1."""

    __slots__ = ("zeros", "unimodular", "exact", "_cache")

    def __init__(self, zeros, unimodular=1, exact: bool | None = None):
        zeros = list(zeros)
        if not zeros:
            raise DegreeZero("a Blaschke product needs at least one zero")
        if exact is None:
            exact = (all(_looks_exact(a) for a in zeros)
                     and _looks_exact(unimodular))
        if exact:
            zs = tuple(GaussianRational.from_value(a) for a in zeros)
            c = GaussianRational.from_value(unimodular)
            for a in zs:
                if math.sqrt(float(a.abs2())) >= 1.0 - _ZERO_MARGIN:
                    raise OutsideDomain(f"zero {a.to_complex():.6g} not inside the open disk")
            cab = math.sqrt(float(c.abs2()))
        else:
            zs = tuple(complex(a.to_complex() if isinstance(a, GaussianRational) else a)
                       for a in zeros)
            c = complex(unimodular.to_complex()
                        if isinstance(unimodular, GaussianRational) else unimodular)
            for a in zs:
                if abs(a) >= 1.0 - _ZERO_MARGIN:
                    raise OutsideDomain(f"zero {a:.6g} not inside the open disk")
            cab = abs(c)
        if abs(cab - 1.0) > _UNIMODULAR_TOL:
            raise OutsideDomain(f"constant has modulus {cab:.12g}, expected 1")
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "unimodular", c)
        object.__setattr__(self, "exact", bool(exact))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("BlaschkeProduct is immutable")

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def float_zeros(self):
        if self.exact:
            return [a.to_complex() for a in self.zeros]
        return list(self.zeros)

    def float_constant(self) -> complex:
        return (self.unimodular.to_complex() if self.exact
                else self.unimodular)

    # -- evaluation -----------------------------------------------------

    def eval(self, z) -> complex:
        """Product form; |z| may exceed 1 by at most 1e-6."""
        zc = complex(z.to_complex() if isinstance(z, GaussianRational) else z)
        if abs(zc) > 1.0 + _EVAL_SLACK:
            raise OutsideDomain(f"|z| = {abs(zc):.9g} > 1 + {_EVAL_SLACK}")
        acc = self.float_constant()
        for a in self.float_zeros():
            acc *= (a - zc) / (1.0 - a.conjugate() * zc)
        return acc

    __call__ = eval

    # -- rational form ----------------------------------------------------

    def as_rational(self) -> RationalFn:
        """P/Q with P = c prod(a_j - z), Q = prod(1 - conj(a_j) z).

        Note P, Q are built unreduced (they are already coprime: P's roots
        lie inside the disk, Q's outside)."""
        key = "rational"
        if key not in self._cache:
            exact = self.exact
            p = ComplexPoly([self.unimodular], exact=exact)
            q = poly_one(exact)
            for a in self.zeros:
                conj = a.conjugate() if exact else a.conjugate()
                p = p * ComplexPoly([a, -1 if exact else -1.0], exact=exact)
                q = q * ComplexPoly([1 if exact else 1.0,
                                     -conj], exact=exact)
            self._cache[key] = (p, q)
        p, q = self._cache[key]
        return RationalFn(p, q)

    def numden(self):
        self.as_rational()
        return self._cache["rational"]

    def derivative(self) -> RationalFn:
        """Exact rational derivative (P'Q - PQ')/Q^2; numerator degree at
        most 2n - 2."""
        key = "derivative"
        if key not in self._cache:
            p, q = self.numden()
            num = p.derivative() * q - p * q.derivative()
            if not num.exact:
                # the formal top coefficient cancels; drop float residue
                num = num.trim()
            self._cache[key] = RationalFn(num, q * q)
        return self._cache[key]

    def _fiber_coeff_arrays(self):
        key = "fibercoeffs"
        if key not in self._cache:
            p, q = self.numden()
            n = self.degree
            pc = np.zeros(n + 1, dtype=complex)
            pc[:p.degree + 1] = p.float_coeffs()
            qc = np.zeros(n + 1, dtype=complex)
            qc[:q.degree + 1] = q.float_coeffs()
            self._cache[key] = (pc, qc)
        return self._cache[key]

    def __repr__(self):
        return (f"BlaschkeProduct(zeros={self.float_zeros()!r}, "
                f"unimodular={self.float_constant()!r})")


def blaschke_eval(b: BlaschkeProduct, z) -> complex:
    return b.eval(z)


# ---------------------------------------------------------------------------
# generator protocol: BlaschkeProduct or polynomial generator
# ---------------------------------------------------------------------------

def generator_degree(gen) -> int:
    if isinstance(gen, BlaschkeProduct):
        return gen.degree
    if isinstance(gen, ComplexPoly):
        return gen.degree
    raise TypeError(f"unsupported generator {type(gen).__name__}")


def generator_eval(gen, z) -> complex:
    if isinstance(gen, BlaschkeProduct):
        return gen.eval(z)
    return complex(gen.eval(complex(z)))


def generator_rational(gen) -> RationalFn:
    if isinstance(gen, BlaschkeProduct):
        return gen.as_rational()
    return RationalFn(gen, poly_one(gen.exact))


def generator_derivative(gen) -> RationalFn:
    if isinstance(gen, BlaschkeProduct):
        return gen.derivative()
    return RationalFn(gen.derivative(), poly_one(gen.exact))


def generator_is_disk_map(gen) -> bool:
    return isinstance(gen, BlaschkeProduct)


# ---------------------------------------------------------------------------
# fibers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fiber:
    """Full preimage of gen(base) under gen; base listed first.

    multiplicities[k] is the size of the root cluster containing points[k];
    residual is max |gen(point) - gen(base)| over the fiber.
    """

    base: complex
    points: tuple
    multiplicities: tuple
    residual: float

    def others(self):
        """Fiber points other than the base (the base's own copy removed)."""
        return list(self.points[1:])


def _fiber_poly_coeffs(gen, z: complex) -> np.ndarray:
    if isinstance(gen, BlaschkeProduct):
        pc, qc = gen._fiber_coeff_arrays()
        w = gen.eval(z)
        return pc - w * qc
    # polynomial generator: p(t) - p(z)
    c = np.array(gen.float_coeffs(), dtype=complex, copy=True)
    c[0] -= gen.eval(complex(z))
    return c


def fiber(gen, z, cluster_tol: float = 1e-7) -> Fiber:
    """All n preimages of gen(z), the base point z itself listed first.

    The root nearest z is replaced by z exactly, so downstream quotients see
    the base with no root-finder noise.
    """
    n = generator_degree(gen)
    if n < 1:
        raise DegreeZero("generator must have degree >= 1")
    zc = complex(z.to_complex() if isinstance(z, GaussianRational) else z)
    if isinstance(gen, BlaschkeProduct) and abs(zc) > 1.0 + _EVAL_SLACK:
        raise OutsideDomain(f"fiber base |z| = {abs(zc):.9g} outside the closed disk")
    coeffs = _fiber_poly_coeffs(gen, zc)
    scale = float(np.max(np.abs(coeffs))) or 1.0
    if abs(coeffs[-1]) <= 1e-12 * scale:
        raise DegenerateLeading("fiber polynomial leading coefficient vanished")
    roots = _roots_raw(coeffs)
    roots = _polish(coeffs, roots)
    # swap the root closest to the base into front and pin it to z exactly
    idx = int(np.argmin(np.abs(roots - zc)))
    pts = [zc] + [roots[k] for k in range(len(roots)) if k != idx]
    clusters = _cluster(pts, cluster_tol)
    mult_of = []
    for p in pts:
        best = min(clusters, key=lambda cm: abs(cm[0] - p))
        mult_of.append(best[1])
    w = generator_eval(gen, zc)
    vscale = max(1.0, abs(w))
    residual = max(abs(generator_eval(gen, p) - w) for p in pts) / vscale
    return Fiber(zc, tuple(pts), tuple(mult_of), residual)


def discriminant_d(gen, z) -> complex:
    """prod over the fiber (z - phi_j(z)), base excluded; vanishes exactly at
    the critical points of the generator."""
    fb = fiber(gen, z)
    acc = 1.0 + 0j
    for p in fb.others():
        acc *= (fb.base - p)
    return acc


# ---------------------------------------------------------------------------
# critical data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalData:
    """Critical points/values of the generator plus the induced bad set
    (all fiber points over critical values), used for evaluation guards."""

    points: RootSet
    values: tuple
    s0_points: tuple
    tol: float = 1e-8

    def is_critical_value(self, w: complex, tol: float | None = None) -> bool:
        t = self.tol if tol is None else tol
        return any(abs(w - v) <= t for v in self.values)

    def in_s0(self, gen, z, tol: float | None = None) -> bool:
        """z lies over a critical value (within tolerance on values)."""
        return self.is_critical_value(generator_eval(gen, z), tol)

    def distance_to_s0(self, z: complex) -> float:
        if not self.s0_points:
            return math.inf
        return min(abs(z - s) for s in self.s0_points)


def critical_data(gen, tol: float = 1e-8) -> CriticalData:
    """Critical points of the generator (inside the open disk for Blaschke
    generators, everywhere for polynomial ones), their values, and the full
    preimage set of those values."""
    der = generator_derivative(gen)
    num = der.num.to_float().trim()
    if num.degree < 1:
        if num.is_zero:
            raise DegreeZero("derivative vanished identically")
        return CriticalData(RootSet((), 0.0), (), (), tol)
    rs = poly_roots(num)
    if isinstance(gen, BlaschkeProduct):
        kept = tuple((loc, m) for loc, m in rs.roots if abs(loc) < 1.0)
        n = generator_degree(gen)
        total = sum(m for _, m in kept)
        if total != n - 1:
            # should be impossible for a valid product; surface loudly
            raise InconsistentFiber(
                f"expected {n - 1} interior critical points, found {total}")
    else:
        kept = rs.roots
    values = tuple(generator_eval(gen, loc) for loc, _ in kept)
    s0: list[complex] = []
    for loc, _ in kept:
        try:
            fb = fiber(gen, loc)
        except DegenerateLeading:
            continue
        for p in fb.points:
            if all(abs(p - q) > 1e-9 for q in s0):
                s0.append(p)
    return CriticalData(RootSet(kept, rs.residual), values, tuple(s0), tol)


# ---------------------------------------------------------------------------
# origin normalization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizedBlaschke:
    product: BlaschkeProduct
    mobius: RationalFn          # disk automorphism with mobius(0) = a_1
    mobius_inverse: RationalFn  # the same map: it is an involution


def normalize_origin(b: BlaschkeProduct) -> NormalizedBlaschke:
    """Precompose with the self-inverse automorphism (a_1 - z)/(1 - conj(a_1) z)
    so the first zero moves to the origin; returns the adjusted product and
    the Mobius pair satisfying b(mobius(z)) = product(z)."""
    exact = b.exact
    one = 1 if exact else 1.0
    zeros = list(b.zeros)
    # already vanishing at the origin: reorder only
    for k, a in enumerate(zeros):
        is_origin = (not a) if exact else (a == 0)
        if is_origin:
            reordered = [zeros[k]] + zeros[:k] + zeros[k + 1:]
            ident = RationalFn(ComplexPoly([0, one], exact=exact),
                               poly_one(exact))
            return NormalizedBlaschke(
                BlaschkeProduct(reordered, b.unimodular, exact=exact),
                ident, ident)
    a1 = zeros[0]
    a1c = a1.conjugate()
    num = ComplexPoly([a1, -one], exact=exact)
    den = ComplexPoly([one, -a1c], exact=exact)
    mobius = RationalFn(num, den)
    new_zeros = []
    lam_prod = GaussianRational.from_value(1) if exact else 1.0 + 0j
    for a in zeros:
        u = one - a * a1c
        lam = -u / u.conjugate() if exact else -(u / u.conjugate())
        lam_prod = lam_prod * lam
        new_zeros.append((a1 - a) / (one - a1c * a))
    new_zeros[0] = GaussianRational.from_value(0) if exact else 0j
    product = BlaschkeProduct(new_zeros, b.unimodular * lam_prod, exact=exact)
    return NormalizedBlaschke(product, mobius, mobius)


# ---------------------------------------------------------------------------
# symmetric-function reduction
# ---------------------------------------------------------------------------

def _elementary_symmetric(values):
    e = [1.0 + 0j]
    for v in values:
        e = [e[0]] + [e[k] + v * e[k - 1] for k in range(1, len(e))] + [v * e[-1]]
        # note: ^ builds coefficients of prod (1 + v X): e[k] = e_k
    return e


def symmetric_reduce(values, z, b: BlaschkeProduct, tol: float = 1e-8):
    """Affine forms (alpha_k, beta_k) with e_k(truncated fiber) = alpha_k +
    beta_k * B(z) for k = 1..n-1, via the recursion
        e'_k = sigma_k - z * e'_{k-1}
    against the full-fiber elementary symmetric functions sigma_k read off
    the fiber polynomial.  Requires B(0) = 0 (otherwise the full-fiber
    sigma_k are Mobius, not affine, in B(z)).

    `values` are the fiber points other than the base; they are checked
    against the recursion and InconsistentFiber is raised on disagreement.
    """
    n = b.degree
    if len(values) != n - 1:
        raise InconsistentFiber(
            f"expected {n - 1} truncated-fiber values, got {len(values)}")
    if all(abs(a) > 1e-12 for a in (b.float_zeros())):
        raise OutsideDomain(
            "symmetric_reduce requires a product vanishing at the origin; "
            "apply normalize_origin first")
    pc, qc = b._fiber_coeff_arrays()
    lead = pc[n]
    if qc[n] != 0:
        raise OutsideDomain("leading fiber coefficient depends on B(z)")
    zc = complex(z)
    w = b.eval(zc)
    # full-fiber sigma_k = (-1)^k (pc[n-k] - w qc[n-k]) / lead, affine in w
    alpha = [(-1) ** k * pc[n - k] / lead for k in range(n + 1)]
    beta = [-((-1) ** k) * qc[n - k] / lead for k in range(n + 1)]
    forms = [(1.0 + 0j, 0j)]
    for k in range(1, n):
        pa, pb = forms[k - 1]
        forms.append((alpha[k] - zc * pa, beta[k] - zc * pb))
    direct = _elementary_symmetric([complex(v) for v in values])
    out = []
    scale = max(1.0, abs(w))
    for k in range(1, n):
        fa, fb = forms[k]
        predicted = fa + fb * w
        if abs(predicted - direct[k]) > tol * max(1.0, abs(direct[k]), scale):
            raise InconsistentFiber(
                f"e_{k}: recursion gives {predicted:.9g}, points give {direct[k]:.9g}")
        out.append((fa, fb))
    return out
