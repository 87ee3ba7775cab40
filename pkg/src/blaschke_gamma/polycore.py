"""Complex polynomials and rational functions with float and exact backends.

Coefficients are stored ascending (coeffs[k] multiplies z**k); the zero
polynomial is the empty coefficient list.  The float backend uses python
complex scalars and numpy eigenvalue root-finding; the exact backend stores
Gaussian rationals (pairs of arbitrary-precision fractions.Fraction), which
keeps gcds, resultants and unit-disk zero counts exact.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BoundaryRoot, DegreeZero, FloatBackend


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)  # exact binary lift
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build a Fraction from {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def from_value(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return GaussianRational(_frac(x.real), _frac(x.imag))
        return GaussianRational(_frac(x), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.from_value(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.from_value(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.from_value(other) - self

    def __mul__(self, other):
        o = GaussianRational.from_value(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.from_value(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / d,
                                (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return GaussianRational.from_value(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(Fraction(1), Fraction(0)) / self ** (-k)
        out = GaussianRational(Fraction(1), Fraction(0))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"


QI_ZERO = GaussianRational(Fraction(0), Fraction(0))
QI_ONE = GaussianRational(Fraction(1), Fraction(0))


def _looks_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational, str))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class ComplexPoly:
    """Univariate polynomial, ascending coefficients, float or exact backend."""

    __slots__ = ("coeffs", "exact", "_float")

    def __init__(self, coeffs=(), exact: bool | None = None):
        coeffs = list(coeffs)
        if exact is None:
            exact = all(_looks_exact(c) for c in coeffs)
        if exact:
            cs = [GaussianRational.from_value(c) for c in coeffs]
            while cs and not cs[-1]:
                cs.pop()
        else:
            cs = [complex(c.to_complex() if isinstance(c, GaussianRational) else c)
                  for c in coeffs]
            while cs and cs[-1] == 0:
                cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "exact", bool(exact))
        object.__setattr__(self, "_float", None)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("ComplexPoly is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if self.is_zero:
            raise DegreeZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self):
        if self.is_zero:
            return QI_ZERO if self.exact else 0j
        return self.coeffs[0]

    def to_float(self) -> "ComplexPoly":
        if not self.exact:
            return self
        return ComplexPoly([c.to_complex() for c in self.coeffs], exact=False)

    def to_exact(self) -> "ComplexPoly":
        if self.exact:
            return self
        return ComplexPoly([GaussianRational.from_value(c) for c in self.coeffs],
                           exact=True)

    def float_coeffs(self) -> np.ndarray:
        cached = self._float
        if cached is None:
            if self.exact:
                cached = np.array([c.to_complex() for c in self.coeffs],
                                  dtype=complex)
            else:
                cached = np.array(self.coeffs, dtype=complex)
            object.__setattr__(self, "_float", cached)
        return cached

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _common(a: "ComplexPoly", b: "ComplexPoly"):
        if a.exact == b.exact:
            return a, b, a.exact
        return a.to_float(), b.to_float(), False

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        a, b, exact = ComplexPoly._common(self, other)
        n = max(len(a.coeffs), len(b.coeffs))
        zero = QI_ZERO if exact else 0j
        ca = list(a.coeffs) + [zero] * (n - len(a.coeffs))
        cb = list(b.coeffs) + [zero] * (n - len(b.coeffs))
        return ComplexPoly([x + y for x, y in zip(ca, cb)], exact=exact)

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self + (-other)

    def __neg__(self) -> "ComplexPoly":
        return ComplexPoly([-c for c in self.coeffs], exact=self.exact)

    def __mul__(self, other) -> "ComplexPoly":
        if not isinstance(other, ComplexPoly):
            return self.scale(other)
        a, b, exact = ComplexPoly._common(self, other)
        if a.is_zero or b.is_zero:
            return ComplexPoly([], exact=exact)
        zero = QI_ZERO if exact else 0j
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if not (ca if exact else ca != 0):
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] = out[i + j] + ca * cb
        return ComplexPoly(out, exact=exact)

    __rmul__ = __mul__

    def scale(self, s) -> "ComplexPoly":
        if self.exact and _looks_exact(s):
            s = GaussianRational.from_value(s)
            return ComplexPoly([c * s for c in self.coeffs], exact=True)
        s = complex(s.to_complex() if isinstance(s, GaussianRational) else s)
        return ComplexPoly([c * s for c in self.to_float().coeffs], exact=False)

    def __pow__(self, k: int) -> "ComplexPoly":
        if k < 0:
            raise ValueError("negative power")
        out = ComplexPoly([QI_ONE] if self.exact else [1.0], exact=self.exact)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift_up(self, k: int) -> "ComplexPoly":
        """Multiply by z**k."""
        if self.is_zero:
            return self
        zero = QI_ZERO if self.exact else 0j
        return ComplexPoly([zero] * k + list(self.coeffs), exact=self.exact)

    def divmod(self, other: "ComplexPoly"):
        a, b, exact = ComplexPoly._common(self, other)
        if b.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if a.degree < b.degree:
            return ComplexPoly([], exact=exact), a
        rem = list(a.coeffs)
        blc = b.coeffs[-1]
        zero = QI_ZERO if exact else 0j
        q = [zero] * (a.degree - b.degree + 1)
        for k in range(a.degree - b.degree, -1, -1):
            factor = rem[k + b.degree] / blc
            q[k] = factor
            if factor if exact else factor != 0:
                for j, cb in enumerate(b.coeffs):
                    rem[k + j] = rem[k + j] - factor * cb
        return ComplexPoly(q, exact=exact), ComplexPoly(rem[:b.degree], exact=exact)

    def __floordiv__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self.divmod(other)[1]

    def div_exact(self, other: "ComplexPoly") -> "ComplexPoly":
        """Division known to be remainder-free; raises if it is not."""
        q, r = self.divmod(other)
        if not r.is_zero:
            if self.exact:
                raise ArithmeticError("inexact polynomial division")
            fr = max(abs(c) for c in r.coeffs)
            fs = max(abs(c) for c in self.float_coeffs()) or 1.0
            if fr > 1e-9 * fs:
                raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "ComplexPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        one = QI_ONE if self.exact else 1.0
        return ComplexPoly([c / lead for c in self.coeffs[:-1]] + [one],
                           exact=self.exact)

    def derivative(self) -> "ComplexPoly":
        return ComplexPoly([k * c for k, c in enumerate(self.coeffs)][1:],
                           exact=self.exact)

    def conj_reciprocal(self) -> "ComplexPoly":
        """z**deg * conj(p(1/conj(z))): conjugated, reversed coefficients."""
        if self.exact:
            return ComplexPoly([c.conjugate() for c in reversed(self.coeffs)],
                               exact=True)
        return ComplexPoly([c.conjugate() for c in reversed(self.coeffs)],
                           exact=False)

    def trim(self, rel_tol: float = 1e-12) -> "ComplexPoly":
        """Drop trailing float coefficients below rel_tol * max |coeff|."""
        if self.exact or self.is_zero:
            return self
        scale = max(abs(c) for c in self.coeffs)
        if scale == 0:
            return ComplexPoly([], exact=False)
        cs = list(self.coeffs)
        while cs and abs(cs[-1]) <= rel_tol * scale:
            cs.pop()
        return ComplexPoly(cs, exact=False)

    # -- evaluation ----------------------------------------------------------

    def eval(self, z):
        """Horner evaluation; exact backend with exact z stays exact."""
        if self.is_zero:
            if self.exact and _looks_exact(z):
                return QI_ZERO
            return 0j
        if self.exact and _looks_exact(z):
            zq = GaussianRational.from_value(z)
            acc = QI_ZERO
            for c in reversed(self.coeffs):
                acc = acc * zq + c
            return acc
        zc = complex(z.to_complex() if isinstance(z, GaussianRational) else z)
        acc = 0j
        for c in reversed(self.float_coeffs()):
            acc = acc * zc + c
        return acc

    __call__ = eval

    def __eq__(self, other):
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        return self.exact == other.exact and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.exact, self.coeffs))

    def __repr__(self):
        tag = "exact" if self.exact else "float"
        return f"ComplexPoly({list(self.coeffs)!r}, {tag})"


def poly_one(exact: bool) -> ComplexPoly:
    return ComplexPoly([QI_ONE] if exact else [1.0], exact=exact)


def poly_eval(p: ComplexPoly, z):
    return p.eval(z)


def poly_from_roots(roots, leading=1.0, exact: bool | None = None) -> ComplexPoly:
    if exact is None:
        exact = _looks_exact(leading) and all(_looks_exact(r) for r in roots)
    p = ComplexPoly([leading], exact=exact)
    for r in roots:
        p = p * ComplexPoly([-1 * (GaussianRational.from_value(r) if exact else complex(r)),
                             QI_ONE if exact else 1.0], exact=exact)
    return p


# ---------------------------------------------------------------------------
# gcd (exact backend only)
# ---------------------------------------------------------------------------

def poly_gcd(p: ComplexPoly, q: ComplexPoly) -> ComplexPoly:
    """Monic gcd over the Gaussian rationals.

    Raises FloatBackend for float inputs: float gcds are numerically
    meaningless at the tolerances this library guarantees.
    """
    if not (p.exact and q.exact):
        raise FloatBackend("poly_gcd requires exact coefficients")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
        if not b.is_zero:
            b = b.monic()
    return a.monic() if not a.is_zero else a


# ---------------------------------------------------------------------------
# Root finding (float): companion matrix + Newton polish + clustering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSet:
    """Clustered roots: ((location, multiplicity), ...) and max residual."""

    roots: tuple
    residual: float

    def points(self):
        return [r for r, _ in self.roots]

    def total(self) -> int:
        return sum(m for _, m in self.roots)


def _roots_raw(c: np.ndarray) -> np.ndarray:
    """All roots of the ascending coefficient array (degree >= 1, lc != 0)."""
    n = len(c) - 1
    if n == 1:
        return np.array([-c[0] / c[1]])
    if n == 2:
        a, b, cc = c[2], c[1], c[0]
        disc = b * b - 4.0 * a * cc
        sq = cmath.sqrt(disc)
        # pick the sign that avoids cancellation
        if (b.conjugate() * sq).real < 0:
            sq = -sq
        qq = -0.5 * (b + sq)
        if qq == 0:
            r = -b / (2.0 * a)
            return np.array([r, r])
        return np.array([qq / a, cc / qq])
    monic = c / c[-1]
    comp = np.zeros((n, n), dtype=complex)
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -monic[:-1]
    return np.linalg.eigvals(comp)


def _polish(c: np.ndarray, roots: np.ndarray, passes: int = 2) -> np.ndarray:
    dc = np.polynomial.polynomial.polyder(c)
    out = roots.copy()
    for _ in range(passes):
        pv = np.polynomial.polynomial.polyval(out, c)
        dv = np.polynomial.polynomial.polyval(out, dc)
        ok = np.abs(dv) > 1e-8 * (1.0 + np.abs(out)) ** (len(c) - 2)
        step = np.zeros_like(out)
        step[ok] = pv[ok] / dv[ok]
        # only accept small corrections: Newton must not leave the cluster
        step[np.abs(step) > 0.1] = 0.0
        out = out - step
    return out


def _cluster(points, tol: float):
    """Greedy union-find clustering with relative tolerance."""
    pts = list(points)
    k = len(pts)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(pts[i] - pts[j]) <= tol * max(1.0, abs(pts[i]), abs(pts[j])):
                parent[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(pts[i])
    out = []
    for members in groups.values():
        center = sum(members) / len(members)
        out.append((center, len(members)))
    out.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return out


def poly_roots(p: ComplexPoly, cluster_tol: float = 1e-7) -> RootSet:
    """All complex roots with multiplicities by clustering.

    Companion-matrix eigenvalues polished by Newton where the derivative is
    healthy; clusters merged at relative tolerance cluster_tol.
    """
    if p.is_zero:
        raise DegreeZero("zero polynomial")
    c = p.float_coeffs()
    # strip exact trailing zeros already done; guard degree
    if p.degree < 1:
        raise DegreeZero("constant polynomial has no roots")
    raw = _roots_raw(c)
    raw = _polish(c, raw)
    clustered = _cluster(raw, cluster_tol)
    scale = float(np.max(np.abs(c)))
    residual = 0.0
    for center, _ in clustered:
        residual = max(residual,
                       abs(np.polynomial.polynomial.polyval(center, c)) / scale)
    return RootSet(tuple(clustered), residual)


# ---------------------------------------------------------------------------
# Unit-disk zero counting
# ---------------------------------------------------------------------------

class _SchurCohnDegenerate(Exception):
    pass


def _sc_count(c: list[GaussianRational]) -> int:
    """Zeros inside |z| < 1 for an exact polynomial with c[0] != 0 and no
    zeros on the circle.  Recursion on the Schur transform
    T f = conj(f(0)) f - lc(f) f*;   sign of (Tf)(0) = |f(0)|^2 - |lc|^2
    decides whether the dropped zero was inside or outside."""
    n = len(c) - 1
    if n == 0:
        return 0
    a0c = c[0].conjugate()
    an = c[-1]
    g = [a0c * c[k] - an * c[n - k].conjugate() for k in range(n + 1)]
    while g and not g[-1]:
        g.pop()
    if not g:
        raise _SchurCohnDegenerate
    gamma = g[0]
    if gamma.im != 0:
        raise AssertionError("Schur transform constant must be real")
    if gamma.re == 0:
        raise _SchurCohnDegenerate
    inner = _sc_count(g)
    return inner if gamma.re > 0 else n - inner


def _schur_cohn_disk_count(p: ComplexPoly, radius: Fraction) -> int:
    coeffs = list(p.coeffs)
    count = 0
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        count += 1  # zero at the origin, inside any positive radius
    if len(coeffs) <= 1:
        return count
    # dither the radius by <= 6.4e-9 relative: degenerate Schur steps occur
    # on a finite set of radii (e.g. inversive root pairs), and the counting
    # precondition keeps true roots at least 1e-7 away from the circle.
    for attempt in range(64):
        r = radius * (1 - Fraction(attempt, 10 ** 10))
        rk = QI_ONE
        scaled = []
        for a in coeffs:
            scaled.append(a * rk)
            rk = rk * GaussianRational(r, Fraction(0))
        try:
            return count + _sc_count(scaled)
        except _SchurCohnDegenerate:
            continue
    raise BoundaryRoot("Schur-Cohn recursion degenerate at every dithered radius")


def disk_zero_count(p: ComplexPoly, radius: float = 1.0,
                    boundary_tol: float = 1e-7) -> int:
    """Number of zeros (with multiplicity) in |z| < radius.

    Float backend filters clustered roots; exact backend runs a Schur-Cohn
    count which never consults float root locations.  Raises BoundaryRoot if
    a root sits within boundary_tol of the circle.
    """
    if p.is_zero:
        raise DegreeZero("zero polynomial")
    if p.degree == 0:
        return 0
    rs = poly_roots(p)
    for loc, _ in rs.roots:
        if abs(abs(loc) - radius) < boundary_tol:
            raise BoundaryRoot(f"root {loc:.9g} within {boundary_tol} of |z|={radius}")
    if p.exact:
        rad = radius if isinstance(radius, Fraction) else Fraction(radius)
        return _schur_cohn_disk_count(p, rad)
    return sum(m for loc, m in rs.roots if abs(loc) < radius)


# ---------------------------------------------------------------------------
# Bivariate polynomials and resultants
# ---------------------------------------------------------------------------

class BivariatePoly:
    """Polynomial in (t, z): tcoeffs[i] is the z-polynomial on t**i."""

    __slots__ = ("tcoeffs", "exact")

    def __init__(self, tcoeffs, exact: bool | None = None):
        tcs = [c if isinstance(c, ComplexPoly) else ComplexPoly(c, exact=exact)
               for c in tcoeffs]
        if exact is None:
            exact = all(c.exact for c in tcs)
        tcs = [c.to_exact() if exact else c.to_float() for c in tcs]
        while tcs and tcs[-1].is_zero:
            tcs.pop()
        object.__setattr__(self, "tcoeffs", tuple(tcs))
        object.__setattr__(self, "exact", bool(exact))

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    @property
    def deg_t(self) -> int:
        return len(self.tcoeffs) - 1

    @property
    def deg_z(self) -> int:
        return max((c.degree for c in self.tcoeffs), default=-1)

    def swap(self) -> "BivariatePoly":
        """Exchange the roles of t and z."""
        dz = self.deg_z
        zero = QI_ZERO if self.exact else 0j
        grid = []
        for j in range(dz + 1):
            row = []
            for c in self.tcoeffs:
                row.append(c.coeffs[j] if j <= c.degree else zero)
            grid.append(ComplexPoly(row, exact=self.exact))
        return BivariatePoly(grid, exact=self.exact)

    def eval_z(self, z) -> ComplexPoly:
        """Collapse to a polynomial in t at a numeric z."""
        return ComplexPoly([c.eval(z) for c in self.tcoeffs], exact=False)

    def eval_tz(self, t, z):
        acc = 0j
        for c in reversed(self.tcoeffs):
            acc = acc * t + c.eval(z)
        return acc


def _sylvester(acoeffs, bcoeffs, exact: bool):
    """Sylvester matrix rows over ComplexPoly entries; a, b ascending in t."""
    m = len(acoeffs) - 1
    n = len(bcoeffs) - 1
    size = m + n
    zero = ComplexPoly([], exact=exact)
    rows = []
    arev = list(reversed(acoeffs))
    brev = list(reversed(bcoeffs))
    for i in range(n):
        rows.append([zero] * i + arev + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + brev + [zero] * (m - 1 - i))
    return rows


def _det_bareiss(mat) -> ComplexPoly:
    """Fraction-free determinant over exact polynomial entries."""
    n = len(mat)
    if n == 0:
        return poly_one(True)
    m = [row[:] for row in mat]
    sign = 1
    prev = poly_one(True)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
            if pivot is None:
                return ComplexPoly([], exact=True)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.div_exact(prev)
            m[i][k] = ComplexPoly([], exact=True)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _resultant_float(acoeffs, bcoeffs) -> ComplexPoly:
    """Evaluate/interpolate: scalar Sylvester determinants at scaled roots of
    unity, coefficients recovered by inverse FFT."""
    dza = max((c.degree for c in acoeffs), default=0)
    dzb = max((c.degree for c in bcoeffs), default=0)
    mt = len(acoeffs) - 1
    nt = len(bcoeffs) - 1
    bound = mt * dzb + nt * dza
    samples = max(bound + 1, 1)
    zs = np.exp(2j * np.pi * np.arange(samples) / samples)
    vals = np.empty(samples, dtype=complex)
    for i, z in enumerate(zs):
        av = [c.eval(z) for c in acoeffs]
        bv = [c.eval(z) for c in bcoeffs]
        size = mt + nt
        mat = np.zeros((size, size), dtype=complex)
        arev = list(reversed(av))
        brev = list(reversed(bv))
        for r in range(nt):
            mat[r, r:r + mt + 1] = arev
        for r in range(mt):
            mat[nt + r, r:r + nt + 1] = brev
        vals[i] = np.linalg.det(mat) if size else 1.0
    # vals[k] = sum_j c_j e^{+2 pi i jk/M}: recover c with a forward DFT / M
    coeffs = np.fft.fft(vals) / samples
    return ComplexPoly(list(coeffs), exact=False).trim(1e-10)


def _resultant_coeff_lists(acoeffs, bcoeffs, exact: bool) -> ComplexPoly:
    """res_t of two polynomials in t with ComplexPoly-in-z coefficients."""
    if len(acoeffs) - 1 < 1 or len(bcoeffs) - 1 < 1:
        raise DegreeZero("resultant needs degree >= 1 in the eliminated variable")
    if exact:
        return _det_bareiss(_sylvester(acoeffs, bcoeffs, exact=True))
    return _resultant_float(acoeffs, bcoeffs)


def resultant_in(p: BivariatePoly, q: BivariatePoly,
                 eliminate: str = "t") -> ComplexPoly:
    """Sylvester resultant eliminating one variable of two bivariate polys."""
    if eliminate == "z":
        p, q = p.swap(), q.swap()
    elif eliminate != "t":
        raise ValueError("eliminate must be 't' or 'z'")
    exact = p.exact and q.exact
    a = p if p.exact == exact else p  # backends reconciled below
    acs = [c.to_exact() if exact else c.to_float() for c in p.tcoeffs]
    bcs = [c.to_exact() if exact else c.to_float() for c in q.tcoeffs]
    return _resultant_coeff_lists(acs, bcs, exact)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RationalFn:
    """Quotient of two ComplexPoly; exact backend is kept reduced with a
    monic denominator, so equal functions have equal representations."""

    __slots__ = ("num", "den", "exact")

    def __init__(self, num: ComplexPoly, den: ComplexPoly):
        num, den, exact = ComplexPoly._common(num, den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if exact and not num.is_zero:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.div_exact(g)
                den = den.div_exact(g)
        if exact:
            lead = den.lc()
            den = den.monic()
            num = num.scale(QI_ONE / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def eval(self, z):
        dv = self.den.eval(z)
        if isinstance(dv, GaussianRational):
            if not dv:
                raise ZeroDivisionError("pole")
            return self.num.eval(z) / dv
        if dv == 0:
            raise ZeroDivisionError("pole")
        return self.num.eval(z) / dv

    __call__ = eval

    def derivative(self) -> "RationalFn":
        n, d = self.num, self.den
        return RationalFn(n.derivative() * d - n * d.derivative(), d * d)

    def compose(self, inner: "RationalFn") -> "RationalFn":
        """self(inner(z)) by homogeneous substitution."""
        u, v = inner.num, inner.den
        deg = max(self.num.degree, self.den.degree, 0)
        exact = self.exact and inner.exact

        def subst(p: ComplexPoly) -> ComplexPoly:
            acc = ComplexPoly([], exact=exact)
            for k, c in enumerate(p.coeffs):
                term = (u ** k) * (v ** (deg - k))
                acc = acc + term.scale(c)
            return acc

        return RationalFn(subst(self.num), subst(self.den))

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.den - other.num * self.den,
                          self.den * other.den)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def scale(self, s) -> "RationalFn":
        return RationalFn(self.num.scale(s), self.den)

    def to_float(self) -> "RationalFn":
        return RationalFn(self.num.to_float(), self.den.to_float())

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        # cross-multiplied comparison works for both backends
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFn({self.num!r} / {self.den!r})"


def rational_constant(value, exact: bool) -> RationalFn:
    return RationalFn(ComplexPoly([value], exact=exact), poly_one(exact))
