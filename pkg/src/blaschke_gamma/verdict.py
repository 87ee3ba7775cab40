"""Classification of the closed algebra generated by B and g.

The decision data is the discriminant quotient Gamma: its zero set inside
the disk (counted by the argument principle and located by contour
quadrisection, or read off exactly when Gamma is rational), and a
log-circle-mean "defect" that estimates non-Blaschke inner mass.  Verdicts:

    Dense         Gamma zero-free and defect-clean
    FiniteCodim   finitely many zeros, defect-clean
    InfiniteCodim defect persists after zero removal (or zero budget blown)
    GammaZero     Gamma identically zero; fibers partition into g-level
                  blocks of one size m >= 2 dividing deg B
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .blaschke import (BlaschkeProduct, fiber, generator_degree,
                       generator_is_disk_map)
from .errors import (BoundaryResolutionExceeded, BoundaryRoot, BudgetExceeded,
                     DegreeZero, Inconclusive, NearCircleZero, NotCoprime,
                     OutsideDomain, StructureNotFound, ZeroAtOrigin)
from .gamma import (GammaFunction, GammaSettings, gamma_eval, gamma_exact,
                    gamma_zero_witness, golden_spiral_grid)
from .oracle import AnalyticOracle, as_oracle, product_oracle, poly_oracle
from .polycore import ComplexPoly, RationalFn, disk_zero_count, poly_gcd, poly_roots

KIND_DENSE = "Dense"
KIND_FINITE = "FiniteCodim"
KIND_INFINITE = "InfiniteCodim"
KIND_GAMMA_ZERO = "GammaZero"

REASON_ZERO_FREE = "ZeroFree"
REASON_FINITE_ZEROS = "FiniteZeros"
REASON_INFINITE_ZEROS = "InfiniteZerosSuspected"
REASON_SINGULAR = "SingularFactorSuspected"
REASON_IDENTICALLY_ZERO = "IdenticallyZero"

# zeros counted strictly inside |z| < 1 - _DISK_MARGIN; anything within the
# margin of the circle is treated as a boundary point
_DISK_MARGIN = 1e-7


@dataclass(frozen=True)
class VerdictSettings:
    zero_cert_tol: float = 1e-10
    zero_cert_points: int = 64
    defect_threshold: float = 0.05
    defect_radii: tuple = (0.9, 0.99, 0.999)
    defect_points: int = 128
    max_zeros: int = 64
    search_radius: float = 0.999
    boundary_points: int = 512
    gamma: GammaSettings = field(default_factory=GammaSettings)


DEFAULT_VERDICT_SETTINGS = VerdictSettings()


@dataclass(frozen=True)
class DefectReport:
    """Circle-mean diagnostics for inner mass.

    table rows are (radius, raw, after_zero_removal) where raw compares the
    circle mean of log|Gamma| with log|Gamma(0)| (origin zero divided out
    first) and the removal column divides out the supplied in-disk zeros via
    disk automorphism factors before comparing.  Limits extrapolate the last
    two radii linearly in (1 - r)."""

    table: tuple
    raw_limit: float
    removed_limit: float
    points: int
    zeros: tuple
    origin_multiplicity: int

    def removed_at(self, radius: float) -> float:
        for r, _, rem in self.table:
            if abs(r - radius) < 1e-12:
                return rem
        raise KeyError(f"radius {radius} not in defect table")


@dataclass(frozen=True)
class VanishingStructure:
    """Fiber partition certified when Gamma vanishes identically: g is
    constant on blocks of one common size m >= 2, and m divides deg B."""

    m: int
    divides_n: bool
    sample_partitions: tuple


@dataclass(frozen=True)
class Annihilator:
    """A functional that kills every polynomial in B and g.

    point_difference: f -> f(a) - f(a_prime), for a fiber pair sharing the
    g-value.  derivative_at: f -> f'(a), at a shared critical point."""

    kind: str
    a: complex
    a_prime: complex | None = None

    def apply(self, f: AnalyticOracle) -> complex:
        f = as_oracle(f)
        if self.kind == "point_difference":
            return f.eval(self.a) - f.eval(self.a_prime)
        return f.derivative_at(self.a)


@dataclass(frozen=True)
class Verdict:
    kind: str
    reason: str
    space: str = "h2"
    codim_bound: int | None = None
    exact_codim: int | None = None
    zeros: tuple = ()
    boundary_zeros: tuple = ()
    defect: DefectReport | None = None
    structure: VanishingStructure | None = None
    diagnostics: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# winding numbers
# ---------------------------------------------------------------------------

class _EvalBudget:
    __slots__ = ("left",)

    def __init__(self, total: int):
        self.left = total

    def spend(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise BudgetExceeded("contour evaluation budget exhausted")


# largest accepted step of log Gamma along a contour, measured as
# hypot(phase step, log-modulus step); phase alone is not safe: the phase
# can slip a full turn between samples and alias into (-pi/2, pi/2), but a
# slip that fast always rides a steep modulus wall, which this length sees
_MAX_LOG_STEP = 1.2


def _phase_step(G, pfun, s1, v1, s2, v2, depth, budget, floor):
    """Accumulated phase of Gamma along pfun([s1, s2]), refined until the
    complex-log step is below _MAX_LOG_STEP."""
    if abs(v1) < floor or abs(v2) < floor:
        raise NearCircleZero(
            f"|Gamma| = {min(abs(v1), abs(v2)):.3e} on the contour")
    d = cmath.phase(v2 / v1)
    if math.hypot(d, math.log(abs(v2) / abs(v1))) <= _MAX_LOG_STEP:
        return d
    if depth <= 0:
        raise NearCircleZero("phase refinement stalled on the contour")
    sm = 0.5 * (s1 + s2)
    budget.spend()
    vm = gamma_eval(G, pfun(sm))
    return (_phase_step(G, pfun, s1, v1, sm, vm, depth - 1, budget, floor)
            + _phase_step(G, pfun, sm, vm, s2, v2, depth - 1, budget, floor))


def _path_winding_phase(G, pfun, seeds, budget, floor=None):
    """Total phase of Gamma along the path pfun([0, 1]) using `seeds` initial
    samples and adaptive refinement."""
    params = [k / seeds for k in range(seeds + 1)]
    budget.spend(len(params))
    vals = [gamma_eval(G, pfun(s)) for s in params]
    if floor is None:
        scale = max(abs(v) for v in vals)
        floor = max(scale * 1e-10, 1e-280)
    total = 0.0
    for k in range(seeds):
        total += _phase_step(G, pfun, params[k], vals[k],
                             params[k + 1], vals[k + 1], 42, budget, floor)
    return total


def _circle_phase(G, radius, points, budget):
    def pfun(s):
        return radius * cmath.exp(2j * math.pi * s)
    return _path_winding_phase(G, pfun, points, budget)


def count_zeros_argument(G: GammaFunction, radius: float,
                         points: int = 64) -> int:
    """Number of zeros of Gamma in |z| < radius by phase accumulation along
    the circle, refined adaptively until every step is below pi/2."""
    budget = _EvalBudget(20000)
    total = _circle_phase(G, radius, points, budget)
    turns = total / (2 * math.pi)
    n = round(turns)
    if abs(turns - n) > 0.2:
        raise NearCircleZero(
            f"winding {turns:.4f} along |z|={radius} is not near an integer")
    return int(n)


# ---------------------------------------------------------------------------
# zero search
# ---------------------------------------------------------------------------

def _cell_winding(G, r1, r2, t1, t2, budget):
    """Winding of Gamma around the polar rectangle [r1,r2] x [t1,t2]."""
    if abs((t2 - t1) - 2 * math.pi) < 1e-15:
        outer = _path_winding_phase(
            G, lambda s: r2 * cmath.exp(1j * (t1 + (t2 - t1) * s)), 16, budget)
        inner = _path_winding_phase(
            G, lambda s: r1 * cmath.exp(1j * (t1 + (t2 - t1) * s)), 16, budget)
        total = outer - inner
    else:
        legs = [
            lambda s: (r1 + (r2 - r1) * s) * cmath.exp(1j * t1),
            lambda s: r2 * cmath.exp(1j * (t1 + (t2 - t1) * s)),
            lambda s: (r2 + (r1 - r2) * s) * cmath.exp(1j * t2),
            lambda s: r1 * cmath.exp(1j * (t2 + (t1 - t2) * s)),
        ]
        total = sum(_path_winding_phase(G, leg, 8, budget) for leg in legs)
    turns = total / (2 * math.pi)
    n = round(turns)
    if abs(turns - n) > 0.2:
        raise NearCircleZero(f"cell winding {turns:.4f} not near an integer")
    return int(n)


_JIGGLE = (0.5, 0.55, 0.45, 0.6, 0.4, 0.52)


def _newton_polish(G, z0, mult, step_cap):
    z = z0
    h = 1e-6
    for _ in range(60):
        v = gamma_eval(G, z)
        d = (gamma_eval(G, z + h) - gamma_eval(G, z - h)) / (2 * h)
        if abs(d) < 1e-14:
            break
        step = mult * v / d
        if abs(step) > step_cap:
            break
        z -= step
        if abs(step) < 1e-12:
            break
    return z


def _search_cell(G, r1, r2, t1, t2, count, budget, found):
    """Recursive quadrisection; appends (zero, multiplicity) to found."""
    if count == 0:
        return
    size = max(r2 - r1, (t2 - t1) * r2)
    if size < 1e-4:
        center = 0.5 * (r1 + r2) * cmath.exp(0.5j * (t1 + t2))
        z = _newton_polish(G, center, count, step_cap=10 * size)
        found.append((z, count))
        return
    for jig in _JIGGLE:
        rm = r1 + (r2 - r1) * jig
        tm = t1 + (t2 - t1) * jig
        cells = [(r1, rm, t1, tm), (r1, rm, tm, t2),
                 (rm, r2, t1, tm), (rm, r2, tm, t2)]
        try:
            counts = [_cell_winding(G, *c, budget) for c in cells]
        except NearCircleZero:
            continue  # a zero sits near the proposed split; jiggle it
        if sum(counts) != count:
            continue
        for c, k in zip(cells, counts):
            _search_cell(G, *c, k, budget, found)
        return
    raise NearCircleZero(
        f"could not split cell [{r1},{r2}]x[{t1},{t2}] cleanly")


def _find_zeros_numeric(G, radius, max_zeros):
    budget = _EvalBudget(60000)
    r_core = 1e-3
    # small nudges first (a zero may sit on the requested contour), then
    # coarse retreats: |Gamma| can collapse below the phase-tracking floor
    # on a whole annulus near the circle (singular inner factors)
    candidates = [radius - d for d in (0.0, 5e-4, 1e-3, 2e-3)]
    candidates += [r for r in (0.99, 0.95, 0.9, 0.8) if r < radius - 2e-3]
    candidates = [r for r in candidates if r > 4 * r_core]
    total = None
    for rr in candidates:
        try:
            total = count_zeros_argument(G, rr, 64)
            radius = rr
            break
        except NearCircleZero:
            continue
    if total is None:
        raise NearCircleZero(
            "|Gamma| too small on every search contour down to |z|=0.8")
    if total > max_zeros:
        raise BudgetExceeded(
            f"{total} zeros inside |z|={radius} exceeds budget {max_zeros}")
    if total == 0:
        return [], radius
    found: list = []
    m0 = count_zeros_argument(G, r_core, 32)
    if m0 > 0:
        # zeros this close to the origin are reported as one origin zero
        found.append((0j, m0))
    remaining = total - m0
    if remaining > 0:
        _search_cell(G, r_core, radius, 0.0, 2 * math.pi, remaining,
                     budget, found)
    merged: list = []
    for z, m in found:
        for i, (w, wm) in enumerate(merged):
            if abs(z - w) < 1e-6:
                merged[i] = ((w * wm + z * m) / (wm + m), wm + m)
                break
        else:
            merged.append((z, m))
    zeros = sorted(merged, key=lambda zm: (abs(zm[0]), cmath.phase(zm[0])))
    return zeros, radius


def _exact_numerator(G: GammaFunction) -> RationalFn | None:
    r = G.exact()
    if r is None or not r.exact:
        return None
    return r


def find_zeros_report(G: GammaFunction, radius: float = 0.999,
                      max_zeros: int = 64):
    """Zeros of Gamma in the disk: ((location, multiplicity) pairs, radius
    actually searched).

    Rational Gamma with exact coefficients: roots of the reduced numerator.
    Otherwise: winding count, then recursive quadrisection of polar cells
    with Newton polish.  When the requested contour runs too close to a
    zero (or |Gamma| collapses near the circle) the search retreats to a
    smaller radius, reported in the second slot."""
    exact = _exact_numerator(G)
    if exact is not None:
        if exact.num.is_zero:
            return [], radius
        out = []
        for loc, m in poly_roots(exact.num.to_float()).roots:
            if abs(loc) < radius:
                out.append((loc, m))
        total = sum(m for _, m in out)
        if total > max_zeros:
            raise BudgetExceeded(
                f"{total} zeros inside |z|={radius} exceeds budget {max_zeros}")
        return sorted(out, key=lambda zm: (abs(zm[0]), cmath.phase(zm[0]))), radius
    return _find_zeros_numeric(G, radius, max_zeros)


def find_zeros(G: GammaFunction, radius: float = 0.999,
               max_zeros: int = 64):
    """Zeros of Gamma in |z| < radius as (location, multiplicity) pairs;
    see find_zeros_report for the search strategy."""
    zeros, _ = find_zeros_report(G, radius, max_zeros)
    return zeros


# ---------------------------------------------------------------------------
# outer defect
# ---------------------------------------------------------------------------

def _blaschke_factor(a: complex, z: complex) -> complex:
    return (a - z) / (1.0 - a.conjugate() * z)


def _removed_value(G, z, zeros):
    v = gamma_eval(G, z)
    for a, m in zeros:
        v /= _blaschke_factor(a, z) ** m
    return v


def _center_value(G, zeros, origin_mult):
    """Value at 0 of Gamma with the listed zeros divided out; recovered from
    a small-circle mean when the direct quotient is 0/0."""
    if origin_mult == 0:
        return _removed_value(G, 0j, zeros)
    r = 5e-2
    n = 64
    acc = 0j
    for k in range(n):
        w = r * cmath.exp(2j * math.pi * (k + 0.5) / n)
        acc += _removed_value(G, w, zeros)
    return acc / n


def outer_defect(G: GammaFunction, radii=(0.9, 0.99, 0.999),
                 points: int = 128, zeros=()) -> DefectReport:
    """Jensen-style defect of Gamma.

    raw(r) = mean of log|Gamma| on |z| = r minus log|Gamma(0)|, with any
    origin zero divided out first (the mean is then shifted by the origin
    multiplicity times log r).  after-removal(r) divides out all supplied
    zeros via (a - z)/(1 - conj(a) z) factors.  Both vanish identically for
    outer Gamma; persistent positive defect as r -> 1 indicates singular
    inner mass.  Zeros on the unit circle itself carry no mass and need no
    special handling: the grid radii keep a safe distance from them."""
    origin_mult = 0
    for a, m in zeros:
        if abs(a) < 1e-9:
            origin_mult += m
    origin_zeros = ((0j, origin_mult),) if origin_mult else ()
    raw_base = _center_value(G, origin_zeros, origin_mult)
    if abs(raw_base) < 1e-13:
        raise ZeroAtOrigin(
            "Gamma vanishes at 0 beyond the supplied origin multiplicity")
    removed_base = _center_value(G, zeros, origin_mult)
    if abs(removed_base) < 1e-13:
        raise ZeroAtOrigin(
            "zero removal left a vanishing value at the origin")
    table = []
    for r in radii:
        raw_acc = 0.0
        rem_acc = 0.0
        for k in range(points):
            theta = 2 * math.pi * (k + 0.5) / points
            z = r * cmath.exp(1j * theta)
            v = gamma_eval(G, z)
            av = abs(v)
            if av <= 1e-300:
                av = 1e-300
            raw_acc += math.log(av) - origin_mult * math.log(r)
            rem = av
            for a, m in zeros:
                rem /= abs(_blaschke_factor(a, z)) ** m
            rem_acc += math.log(max(rem, 1e-300))
        raw = raw_acc / points - math.log(abs(raw_base))
        rem = rem_acc / points - math.log(abs(removed_base))
        table.append((r, raw, rem))
    if len(table) >= 2:
        (r1, raw1, rem1), (r2, raw2, rem2) = table[-2], table[-1]
        s1, s2 = 1.0 - r1, 1.0 - r2
        raw_lim = raw2 + (raw2 - raw1) * s2 / (s1 - s2)
        rem_lim = rem2 + (rem2 - rem1) * s2 / (s1 - s2)
    else:
        raw_lim, rem_lim = table[-1][1], table[-1][2]
    return DefectReport(tuple(table), raw_lim, rem_lim, points, tuple(zeros),
                        origin_mult)


# ---------------------------------------------------------------------------
# vanishing structure
# ---------------------------------------------------------------------------

def _partition_by_value(points, values, tol):
    blocks = []
    assigned = [False] * len(points)
    scale = max(1.0, max(abs(v) for v in values))
    for i in range(len(points)):
        if assigned[i]:
            continue
        block = [i]
        assigned[i] = True
        for j in range(i + 1, len(points)):
            if not assigned[j] and abs(values[j] - values[i]) < tol * scale:
                block.append(j)
                assigned[j] = True
        blocks.append(tuple(points[k] for k in block))
    return blocks


def vanishing_structure(generator, g, samples=None,
                        tol: float = 1e-6) -> VanishingStructure:
    """Certify the fiber partition forced by Gamma == 0: at each sample the
    fiber splits into g-level blocks of one common size m >= 2 with m | n."""
    g = as_oracle(g)
    n = generator_degree(generator)
    G = GammaFunction(generator, g)
    if samples is None:
        cd = G.critical()
        samples = [z for z in golden_spiral_grid(24, 0.7)
                   if cd.distance_to_s0(z) > 1e-3][:6]
    m_seen = None
    partitions = []
    for z in samples:
        fb = fiber(generator, z)
        values = [g.eval(p) for p in fb.points]
        blocks = _partition_by_value(fb.points, values, tol)
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise StructureNotFound(
                f"unequal g-level block sizes {sorted(len(b) for b in blocks)} "
                f"at z = {z}")
        m = sizes.pop()
        if m < 2:
            raise StructureNotFound(
                f"fiber g-values all distinct at z = {z}; "
                "contradicts a certified identically-zero Gamma")
        if m_seen is None:
            m_seen = m
        elif m != m_seen:
            raise StructureNotFound(
                f"block size changed between samples: {m_seen} vs {m}")
        partitions.append((z, tuple(blocks)))
    if m_seen is None:
        raise StructureNotFound("no usable samples")
    if n % m_seen != 0:
        raise StructureNotFound(
            f"block size {m_seen} does not divide the degree {n}")
    return VanishingStructure(m_seen, True, tuple(partitions))


# ---------------------------------------------------------------------------
# annihilators
# ---------------------------------------------------------------------------

def annihilator_at_zero(generator, g, a) -> Annihilator:
    """Functional vanishing on the whole algebra, from a zero of Gamma."""
    g = as_oracle(g)
    G = GammaFunction(generator, g)
    w = gamma_zero_witness(G, a)
    if w.kind == "fiber_partner":
        return Annihilator("point_difference", w.z0, w.partner)
    return Annihilator("derivative_at", w.z0)


def annihilator_self_test(generator, g, ann: Annihilator,
                          max_power: int = 4) -> float:
    """Max |functional| over the monomials g^alpha * B^beta with exponents
    up to max_power; small values certify the functional kills the algebra."""
    g = as_oracle(g)
    bo = as_oracle(generator)
    worst = 0.0
    one = poly_oracle([1.0])
    for alpha in range(max_power + 1):
        for beta in range(max_power + 1):
            factors = [g] * alpha + [bo] * beta
            node = product_oracle(*factors) if factors else one
            worst = max(worst, abs(ann.apply(node)))
    return worst


# ---------------------------------------------------------------------------
# monomial case
# ---------------------------------------------------------------------------

def monomial_codim(n: int, m: int):
    """For B = z^n, g = z^m with coprime n, m >= 2: Gamma has N = (n-1)(m-1)
    zeros (all at the origin) and the algebra closure has codimension N/2,
    cross-checked by enumerating the gaps of the numerical semigroup <n, m>."""
    if n < 2 or m < 2:
        raise OutsideDomain("monomial exponents must be >= 2")
    if math.gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n},{m}) = {math.gcd(n, m)} > 1")
    N = (n - 1) * (m - 1)
    codim = N // 2
    # gap count of the semigroup generated by n and m
    limit = N + 1
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for k in range(1, limit + 1):
        if (k >= n and reachable[k - n]) or (k >= m and reachable[k - m]):
            reachable[k] = True
    gaps = sum(1 for k in range(1, limit + 1) if not reachable[k])
    if gaps != codim:
        raise Inconclusive(
            f"semigroup gap count {gaps} disagrees with (n-1)(m-1)/2 = {codim}",
            diagnostics={"n": n, "m": m})
    return N, codim


def _monomial_exponents(generator, g: AnalyticOracle):
    """(n, m) when the pair is a monomial instance: generator z^n (up to a
    unimodular constant) and g = c * z^m; None otherwise."""
    if isinstance(generator, BlaschkeProduct):
        for a in generator.zeros:
            av = a.to_complex() if hasattr(a, "to_complex") else complex(a)
            if abs(av) > 1e-15:
                return None
        n = generator.degree
    elif isinstance(generator, ComplexPoly):
        cs = generator.float_coeffs()
        n = generator.degree
        if n < 2 or np.any(np.abs(cs[:-1]) > 1e-15 * max(1.0, abs(cs[-1]))):
            return None
    else:
        return None
    if g.kind != "poly":
        return None
    gc = g.payload.float_coeffs()
    m = g.payload.degree
    if m < 2 or abs(gc[m]) == 0:
        return None
    if np.any(np.abs(gc[:-1]) > 1e-15 * abs(gc[m])):
        return None
    if n < 2 or math.gcd(n, m) != 1:
        return None
    return n, m


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def _certify_gamma_zero(G: GammaFunction, s: VerdictSettings):
    """Grid certificate for Gamma == 0, with exact confirmation when
    available; returns True/False, or raises Inconclusive on disagreement."""
    grid = golden_spiral_grid(s.zero_cert_points, 0.9)
    grid_zero = all(abs(gamma_eval(G, z)) < s.zero_cert_tol for z in grid)
    exact = G.exact() if G.g.is_rational() else None
    if exact is not None:
        exact_zero = exact.num.is_zero
        if exact.exact:
            if grid_zero and not exact_zero:
                raise Inconclusive(
                    "grid certifies Gamma == 0 but the exact numerator is "
                    "nonzero", diagnostics={"numerator": repr(exact.num)})
            return exact_zero
        if exact_zero != grid_zero:
            return grid_zero
    return grid_zero


def _gamma_zero_verdict(G: GammaFunction, space: str,
                        s: VerdictSettings) -> Verdict:
    try:
        structure = vanishing_structure(G.generator, G.g)
    except StructureNotFound as exc:
        raise Inconclusive(
            "Gamma certified zero but the fiber partition did not verify",
            diagnostics={"structure_error": str(exc)}) from exc
    return Verdict(KIND_GAMMA_ZERO, REASON_IDENTICALLY_ZERO, space=space,
                   structure=structure)


def _monomial_exact_codim(G: GammaFunction):
    nm = _monomial_exponents(G.generator, G.g)
    if nm is None:
        return None
    _, codim = monomial_codim(*nm)
    return codim


def _defect_with_stability(G, zeros, s: VerdictSettings):
    """Defect report plus the stability of the threshold decision under grid
    doubling; returns (report, decision_above_threshold)."""
    report = outer_defect(G, s.defect_radii, s.defect_points, zeros)
    check = outer_defect(G, s.defect_radii, 2 * s.defect_points, zeros)
    r_last = s.defect_radii[-1]
    above1 = report.removed_at(r_last) > s.defect_threshold
    above2 = check.removed_at(r_last) > s.defect_threshold
    if above1 != above2:
        raise Inconclusive(
            "defect decision flipped when the circle grid was doubled",
            diagnostics={
                "removed_defect": report.removed_at(r_last),
                "removed_defect_doubled": check.removed_at(r_last),
                "threshold": s.defect_threshold,
            })
    return report, above1


def classify(generator, g, settings: VerdictSettings | None = None) -> Verdict:
    """Verdict for the closure in H^p (1 <= p < infinity): Dense / finite
    codimension / infinite codimension / identically-zero Gamma."""
    s = settings or DEFAULT_VERDICT_SETTINGS
    g = as_oracle(g)
    n = generator_degree(generator)
    if n < 2:
        raise OutsideDomain("classification needs a generator of degree >= 2")
    G = GammaFunction(generator, g, s.gamma)
    if _certify_gamma_zero(G, s):
        return _gamma_zero_verdict(G, "h2", s)
    exact = _exact_numerator(G)
    if exact is not None:
        return _classify_exact(G, exact, s)
    return _classify_oracle(G, s)


def _exact_in_disk_zeros(num: ComplexPoly):
    """(zero list, boundary list, in-disk count) of an exact polynomial;
    count by Schur-Cohn at radius 1 - margin, locations from float roots."""
    if num.degree < 1:
        return [], [], 0
    inside = disk_zero_count(num, 1.0 - _DISK_MARGIN, boundary_tol=1e-9)
    zeros = []
    boundary = []
    for loc, m in poly_roots(num.to_float()).roots:
        if abs(loc) < 1.0 - _DISK_MARGIN:
            zeros.append((loc, m))
        elif abs(loc) <= 1.0 + _DISK_MARGIN:
            boundary.append((loc, m))
    listed = sum(m for _, m in zeros)
    if listed != inside:
        raise Inconclusive(
            "float root locations disagree with the exact in-disk count",
            diagnostics={"exact_count": inside, "float_count": listed})
    return zeros, boundary, inside


def _classify_exact(G: GammaFunction, exact: RationalFn,
                    s: VerdictSettings) -> Verdict:
    zeros, boundary, inside = _exact_in_disk_zeros(exact.num)
    report = outer_defect(G, s.defect_radii, s.defect_points, tuple(zeros))
    diag = {"path": "exact", "numerator_degree": exact.num.degree}
    exact_codim = _monomial_exact_codim(G)
    if inside == 0:
        return Verdict(KIND_DENSE, REASON_ZERO_FREE, codim_bound=0,
                       zeros=(), boundary_zeros=tuple(boundary),
                       defect=report, diagnostics=diag)
    return Verdict(KIND_FINITE, REASON_FINITE_ZEROS, codim_bound=inside,
                   exact_codim=exact_codim, zeros=tuple(zeros),
                   boundary_zeros=tuple(boundary), defect=report,
                   diagnostics=diag)


def _classify_oracle(G: GammaFunction, s: VerdictSettings) -> Verdict:
    diag = {"path": "oracle"}
    try:
        zeros, searched = find_zeros_report(G, s.search_radius, s.max_zeros)
        diag["search_radius"] = searched
    except BudgetExceeded as exc:
        report = outer_defect(G, s.defect_radii, s.defect_points, ())
        diag["budget"] = str(exc)
        return Verdict(KIND_INFINITE, REASON_INFINITE_ZEROS, defect=report,
                       diagnostics=diag)
    except NearCircleZero as exc:
        raise Inconclusive(
            "zero search could not isolate the zeros of Gamma",
            diagnostics={"search_error": str(exc)}) from exc
    report, above = _defect_with_stability(G, tuple(zeros), s)
    if above:
        return Verdict(KIND_INFINITE, REASON_SINGULAR, zeros=tuple(zeros),
                       codim_bound=None, defect=report, diagnostics=diag)
    bound = sum(m for _, m in zeros)
    if bound == 0:
        return Verdict(KIND_DENSE, REASON_ZERO_FREE, codim_bound=0,
                       defect=report, diagnostics=diag)
    return Verdict(KIND_FINITE, REASON_FINITE_ZEROS, codim_bound=bound,
                   exact_codim=_monomial_exact_codim(G), zeros=tuple(zeros),
                   defect=report, diagnostics=diag)


# ---------------------------------------------------------------------------
# disk algebra
# ---------------------------------------------------------------------------

def _boundary_scan(G: GammaFunction, points: int, zero_tol: float = 1e-8,
                   clear_tol: float = 1e-6):
    """Distinct boundary zeros of Gamma by scanning |z| = 1 and refining
    local minima; raises BoundaryResolutionExceeded when a minimum cannot be
    certified on either side of the tolerance window."""
    vals = []
    for k in range(points):
        theta = 2 * math.pi * (k + 0.5) / points
        vals.append((theta, abs(gamma_eval(G, cmath.exp(1j * theta)))))
    found = []
    step = 2 * math.pi / points
    for i, (theta, v) in enumerate(vals):
        left = vals[(i - 1) % points][1]
        right = vals[(i + 1) % points][1]
        if v <= left and v <= right and v < clear_tol * 1e3:
            lo, hi = theta - step, theta + step
            for _ in range(80):
                t1 = lo + (hi - lo) / 3
                t2 = hi - (hi - lo) / 3
                v1 = abs(gamma_eval(G, cmath.exp(1j * t1)))
                v2 = abs(gamma_eval(G, cmath.exp(1j * t2)))
                if v1 < v2:
                    hi = t2
                else:
                    lo = t1
                if hi - lo < 1e-12:
                    break
            tmin = 0.5 * (lo + hi)
            vmin = abs(gamma_eval(G, cmath.exp(1j * tmin)))
            if vmin < zero_tol:
                found.append(tmin % (2 * math.pi))
            elif vmin < clear_tol:
                raise BoundaryResolutionExceeded(
                    f"|Gamma| minimum {vmin:.3e} near angle {tmin:.6f} sits "
                    f"between the zero tolerance {zero_tol:.1e} and the "
                    f"clearance tolerance {clear_tol:.1e}")
    distinct = []
    for t in sorted(found):
        if all(min(abs(t - u), 2 * math.pi - abs(t - u)) > 1e-6
               for u in distinct):
            distinct.append(t)
    return [cmath.exp(1j * t) for t in distinct]


def disk_algebra_classify(generator, g,
                          settings: VerdictSettings | None = None) -> Verdict:
    """Verdict for the closure in the algebra of functions continuous up to
    the circle; requires g certified or asserted boundary-continuous.
    Density needs Gamma zero-free on the closed disk; with finitely many
    zeros the codimension is exactly (# boundary zeros) + (interior zeros
    counted with multiplicity)."""
    s = settings or DEFAULT_VERDICT_SETTINGS
    g = as_oracle(g)
    n = generator_degree(generator)
    if n < 2:
        raise OutsideDomain("classification needs a generator of degree >= 2")
    if not generator_is_disk_map(generator):
        raise OutsideDomain("disk-algebra classification needs a Blaschke "
                            "generator")
    if not g.boundary_continuous():
        raise OutsideDomain(
            "disk-algebra mode requires g continuous up to the circle "
            '(assert with "boundary_continuous": true if known)')
    G = GammaFunction(generator, g, s.gamma)
    if _certify_gamma_zero(G, s):
        return _gamma_zero_verdict(G, "disk_algebra", s)
    exact = _exact_numerator(G)
    diag = {"path": "exact" if exact is not None else "oracle"}
    if exact is not None:
        interior, boundary, inside = _exact_in_disk_zeros(exact.num)
        boundary = [(loc, m) for loc, m in boundary]
    else:
        interior, searched = find_zeros_report(G, s.search_radius, s.max_zeros)
        diag["search_radius"] = searched
        inside = sum(m for _, m in interior)
        pts = _boundary_scan(G, s.boundary_points)
        boundary = [(p, 1) for p in pts]
    if inside == 0 and not boundary:
        return Verdict(KIND_DENSE, REASON_ZERO_FREE, space="disk_algebra",
                       codim_bound=0, defect=None, diagnostics=diag)
    report, above = _defect_with_stability(G, tuple(interior), s)
    if above:
        return Verdict(KIND_INFINITE, REASON_SINGULAR, space="disk_algebra",
                       zeros=tuple(interior), boundary_zeros=tuple(boundary),
                       defect=report, diagnostics=diag)
    exact_codim = len(boundary) + inside
    bound = inside + sum(m for _, m in boundary)
    return Verdict(KIND_FINITE, REASON_FINITE_ZEROS, space="disk_algebra",
                   codim_bound=bound, exact_codim=exact_codim,
                   zeros=tuple(interior), boundary_zeros=tuple(boundary),
                   defect=report, diagnostics=diag)


# ---------------------------------------------------------------------------
# polynomial families
# ---------------------------------------------------------------------------

def family_common_zeros(polys):
    """Common zeros of a family of exact polynomials (roots of their gcd)."""
    if not polys:
        return []
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
    if g.degree < 1:
        return []
    return [loc for loc, _ in poly_roots(g.to_float()).roots]


def family_min_zero_count(polys, radius: float = 1.0) -> int:
    """min over ordered pairs (j != k) of the zero count of Gamma_{p_j}(p_k)
    inside |z| < radius; 0 means some pair already generates maximally."""
    best = None
    for j, pj in enumerate(polys):
        for k, pk in enumerate(polys):
            if j == k:
                continue
            r = gamma_exact(pj, pk)
            if r.num.is_zero:
                continue
            if r.exact:
                try:
                    cnt = disk_zero_count(r.num, radius)
                except BoundaryRoot:
                    cnt = sum(m for loc, m in
                              poly_roots(r.num.to_float()).roots
                              if abs(loc) < radius)
            else:
                cnt = sum(m for loc, m in poly_roots(r.num).roots
                          if abs(loc) < radius)
            best = cnt if best is None else min(best, cnt)
    if best is None:
        raise DegreeZero("no usable pair in the family")
    return best
