"""Command implementations shared by the HTTP routes and the CLI.

Each handler accepts already-decoded JSON function specs, runs the core
library, and returns a :class:`~.models.Report`.  Soft outcomes — an
inconclusive classification, a degenerate decomposition, a structure
search that found nothing — are folded into ``report.status`` so both
front ends surface them uniformly; hard errors (spec parse, domain,
exactness) propagate as library exceptions for the callers to map to
exit codes or HTTP statuses.

Grid evaluation honours an optional ``THREADS`` environment variable;
output ordering is deterministic either way.
"""
from __future__ import annotations

import cmath
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction

from ..blaschke import fiber
from ..decompose import (decomposition_grid, fiber_constancy,
                         verify_decomposition)
from ..errors import (BoundaryResolutionExceeded, BudgetExceeded,
                      Inconclusive, NearCircleZero, NearDegenerate,
                      NoWitness, StructureNotFound)
from ..funcspec import parse_function_spec, parse_generator
from ..gamma import GammaFunction, gamma_eval, gamma_exact
from ..polycore import GaussianRational
from ..verdict import (DEFAULT_VERDICT_SETTINGS, VerdictSettings, classify,
                       disk_algebra_classify, find_zeros_report,
                       monomial_codim, vanishing_structure)
from .models import (DecompositionSection, DefectRow, DefectSection,
                     ExactSection, FiberSection, MonomialSection,
                     PartitionEntry, Report, SampleEntry, SkippedEntry,
                     StructureSection, ValueEntry, VerdictSection, ZeroEntry)

# outcomes reported in the status field instead of raised to the caller
_SOFT = (Inconclusive, NearDegenerate, StructureNotFound, NoWitness,
         NearCircleZero, BoundaryResolutionExceeded, BudgetExceeded)

_GOLDEN_FRACTION = 0.6180339887498949


def _pair(z) -> tuple:
    zc = complex(z)
    return (float(zc.real), float(zc.imag))


def _finite(x):
    if x is None or math.isnan(x):
        return None
    return float(x)


def jsonable(value):
    """Coerce library values (complex numbers, exact rationals, tuples)
    to JSON-safe structures for the diagnostics dict."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, GaussianRational):
        return [str(value.re), str(value.im)]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, float):
        return float(value) if math.isfinite(value) else repr(value)
    return str(value)


def _timed(command: str, build) -> Report:
    start = time.perf_counter()
    try:
        report = build()
    except _SOFT as exc:
        status = "degenerate" if isinstance(exc, NearDegenerate) \
            else "inconclusive"
        report = Report(
            command=command, status=status, detail=str(exc),
            diagnostics=jsonable(getattr(exc, "diagnostics", None) or {}))
    report.command = command
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report


# ---------------------------------------------------------------------------
# grid evaluation
# ---------------------------------------------------------------------------

def thread_count() -> int:
    raw = os.environ.get("THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, min(32, n))


def polar_grid(points: int, radius: float):
    """``points`` rings of ``points`` samples; each ring's angles are
    offset by the golden-ratio fraction so sample rays do not align."""
    out = []
    for i in range(points):
        r = radius * (i + 1) / points
        offset = (i * _GOLDEN_FRACTION) % 1.0
        for j in range(points):
            theta = 2.0 * math.pi * (j + offset) / points
            out.append(r * cmath.exp(1j * theta))
    return out


def _eval_many(G: GammaFunction, pts):
    workers = thread_count()
    if workers <= 1 or len(pts) < 64:
        return [gamma_eval(G, z) for z in pts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda z: gamma_eval(G, z), pts))


def _value_entry(z, v) -> ValueEntry:
    return ValueEntry(z=_pair(z), value=_pair(v),
                      abs=abs(v), arg=cmath.phase(v))


def _coeff_pair(c):
    if isinstance(c, GaussianRational):
        return (str(c.re), str(c.im))
    cc = complex(c)
    return (repr(cc.real), repr(cc.imag))


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------

def run_fiber(generator_spec, z: complex) -> Report:
    def build():
        gen = parse_generator(generator_spec, "$.generator")
        fb = fiber(gen, z)
        return Report(command="fiber", fiber=FiberSection(
            base=_pair(fb.base),
            points=[_pair(p) for p in fb.points],
            multiplicities=list(fb.multiplicities),
            residual=fb.residual))
    return _timed("fiber", build)


def run_gamma(generator_spec, g_spec, z=None, grid=None,
              exact: bool = False) -> Report:
    def build():
        gen = parse_generator(generator_spec, "$.generator")
        g = parse_function_spec(g_spec, "$.g")
        report = Report(command="gamma")
        if exact:
            rational = gamma_exact(gen, g)
            report.exact = ExactSection(
                num=[_coeff_pair(c) for c in rational.num.coeffs],
                den=[_coeff_pair(c) for c in rational.den.coeffs])
            report.diagnostics["exact_backend"] = (
                "rational" if rational.exact else "float")
        G = GammaFunction(gen, g)
        if z is not None:
            report.values = [_value_entry(z, gamma_eval(G, z))]
        elif grid is not None:
            points, radius = grid
            pts = polar_grid(points, radius)
            report.values = [_value_entry(p, v)
                             for p, v in zip(pts, _eval_many(G, pts))]
        return report
    return _timed("gamma", build)


def run_zeros(generator_spec, g_spec, radius: float = 0.999,
              max_zeros: int = 64) -> Report:
    def build():
        gen = parse_generator(generator_spec, "$.generator")
        g = parse_function_spec(g_spec, "$.g")
        G = GammaFunction(gen, g)
        pairs, searched = find_zeros_report(G, radius, max_zeros)
        return Report(
            command="zeros",
            zeros=[ZeroEntry(location=_pair(loc), multiplicity=m)
                   for loc, m in pairs],
            search_radius=searched)
    return _timed("zeros", build)


def _settings(tol=None, defect_threshold=None, max_zeros=None,
              radii=None, points=None) -> VerdictSettings:
    overrides = {}
    if tol is not None:
        overrides["zero_cert_tol"] = tol
    if defect_threshold is not None:
        overrides["defect_threshold"] = defect_threshold
    if max_zeros is not None:
        overrides["max_zeros"] = max_zeros
    if radii is not None:
        overrides["defect_radii"] = tuple(radii)
    if points is not None:
        overrides["defect_points"] = points
    if not overrides:
        return DEFAULT_VERDICT_SETTINGS
    return replace(DEFAULT_VERDICT_SETTINGS, **overrides)


def _defect_section(defect) -> DefectSection:
    return DefectSection(
        rows=[DefectRow(radius=r, raw=a, removed=b)
              for r, a, b in defect.table],
        raw_limit=defect.raw_limit,
        removed_limit=defect.removed_limit,
        points=defect.points,
        origin_multiplicity=defect.origin_multiplicity)


def _structure_section(structure) -> StructureSection:
    return StructureSection(
        level_size=structure.m,
        divides_degree=structure.divides_n,
        partitions=[
            PartitionEntry(base=_pair(z),
                           blocks=[[_pair(p) for p in block]
                                   for block in blocks])
            for z, blocks in structure.sample_partitions])


def run_classify(generator_spec, g_spec, space: str = "h2", tol=None,
                 defect_threshold=None, max_zeros=None, radii=None,
                 points=None) -> Report:
    def build():
        gen = parse_generator(generator_spec, "$.generator")
        g = parse_function_spec(g_spec, "$.g")
        settings = _settings(tol, defect_threshold, max_zeros, radii, points)
        if space == "disk-algebra":
            verdict = disk_algebra_classify(gen, g, settings)
        else:
            verdict = classify(gen, g, settings)
        report = Report(
            command="classify",
            verdict=VerdictSection(kind=verdict.kind, reason=verdict.reason,
                                   space=verdict.space,
                                   codim_bound=verdict.codim_bound,
                                   exact_codim=verdict.exact_codim),
            zeros=[ZeroEntry(location=_pair(loc), multiplicity=m)
                   for loc, m in verdict.zeros],
            boundary_zeros=[ZeroEntry(location=_pair(loc), multiplicity=m)
                            for loc, m in verdict.boundary_zeros],
            diagnostics=jsonable(verdict.diagnostics))
        if verdict.defect is not None:
            report.defect = _defect_section(verdict.defect)
        if verdict.structure is not None:
            report.structure = _structure_section(verdict.structure)
        return report
    return _timed("classify", build)


def run_decompose(generator_spec, g_spec, f_spec, points: int = 50,
                  radius: float = 0.75,
                  include_samples: bool = False) -> Report:
    def build():
        gen = parse_generator(generator_spec, "$.generator")
        g = parse_function_spec(g_spec, "$.g")
        f = parse_function_spec(f_spec, "$.f")
        grid = decomposition_grid(gen, points, radius)
        result = verify_decomposition(gen, g, f, grid=grid)
        residuals = [s.residual for s in result.samples]
        constancy = None
        if result.samples and not result.degenerate:
            stride = max(1, len(result.samples) // 8)
            constancy = max(fiber_constancy(gen, g, f, s.z)
                            for s in result.samples[::stride])
        section = DecompositionSection(
            max_residual=_finite(result.max_residual),
            mean_residual=(sum(residuals) / len(residuals)
                           if residuals else None),
            fiber_constancy=constancy,
            sample_count=len(result.samples),
            skipped=[SkippedEntry(z=_pair(z), reason=reason)
                     for z, reason in result.skipped],
            degenerate=result.degenerate)
        if include_samples:
            section.samples = [
                SampleEntry(z=_pair(s.z),
                            coeffs=[_pair(c) for c in s.coeffs],
                            residual=s.residual)
                for s in result.samples]
        report = Report(command="decompose", decomposition=section)
        if result.degenerate:
            report.status = "degenerate"
            report.detail = ("interpolation nodes g(fiber points) coincide "
                             "across the sample grid (g behaves like a "
                             "function of the generator); the identity holds "
                             "but the coefficients carry no information")
        return report
    return _timed("decompose", build)


def run_structure(generator_spec, g_spec) -> Report:
    def build():
        gen = parse_generator(generator_spec, "$.generator")
        g = parse_function_spec(g_spec, "$.g")
        return Report(command="structure",
                      structure=_structure_section(
                          vanishing_structure(gen, g)))
    return _timed("structure", build)


def run_monomial(n: int, m: int) -> Report:
    def build():
        zero_count, codim = monomial_codim(n, m)
        return Report(command="monomial",
                      monomial=MonomialSection(n=n, m=m,
                                               zero_count=zero_count,
                                               codimension=codim))
    return _timed("monomial", build)
