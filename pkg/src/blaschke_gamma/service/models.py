"""Request and report models shared by the HTTP service and the CLI.

A single :class:`Report` type carries the output of every command;
each command fills in the sections it produces and leaves the rest
``None``.  ``schema_version`` identifies the layout so downstream
consumers can detect incompatible changes.

Complex numbers travel as ``[re, im]`` pairs of floats.  Exact rational
coefficients travel as ``[re, im]`` pairs of fraction strings (``"1/2"``),
which the function-spec parser accepts back unchanged.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCHEMA_VERSION = "blaschke-gamma.report/1"

# column order of the polar-grid CSV export
CSV_HEADER = "re,im,gamma_re,gamma_im,abs,arg"

ComplexPair = tuple[float, float]
ExactPair = tuple[str, str]


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# ---------------------------------------------------------------------------
# requests
# ---------------------------------------------------------------------------

class GridRequest(StrictModel):
    """Polar evaluation grid: ``points`` rings with ``points`` samples
    each, out to ``radius``."""

    points: int = Field(32, ge=2, le=512)
    radius: float = Field(0.95, gt=0.0, lt=1.0)


class FiberRequest(StrictModel):
    generator: dict
    z: ComplexPair


class GammaRequest(StrictModel):
    generator: dict
    g: dict
    z: Optional[ComplexPair] = None
    grid: Optional[GridRequest] = None
    exact: bool = False

    @model_validator(mode="after")
    def _needs_an_output(self):
        if self.z is None and self.grid is None and not self.exact:
            raise ValueError("request one of: z, grid, exact")
        if self.z is not None and self.grid is not None:
            raise ValueError("z and grid are mutually exclusive")
        return self


class ZerosRequest(StrictModel):
    generator: dict
    g: dict
    radius: float = Field(0.999, gt=0.0, lt=1.0)
    max_zeros: int = Field(64, ge=1, le=4096)


class ClassifyRequest(StrictModel):
    generator: dict
    g: dict
    space: Literal["h2", "disk-algebra"] = "h2"
    tol: Optional[float] = Field(None, gt=0.0)
    defect_threshold: Optional[float] = Field(None, gt=0.0)
    max_zeros: Optional[int] = Field(None, ge=1)
    radii: Optional[tuple[float, ...]] = None
    points: Optional[int] = Field(None, ge=8)


class DecomposeRequest(StrictModel):
    generator: dict
    g: dict
    f: dict
    points: int = Field(50, ge=1, le=2000)
    radius: float = Field(0.75, gt=0.0, lt=1.0)
    include_samples: bool = False


class StructureRequest(StrictModel):
    generator: dict
    g: dict


class MonomialRequest(StrictModel):
    n: int = Field(ge=2)
    m: int = Field(ge=2)


# ---------------------------------------------------------------------------
# report sections
# ---------------------------------------------------------------------------

class FiberSection(StrictModel):
    base: ComplexPair
    points: list[ComplexPair]
    multiplicities: list[int]
    residual: float


class ValueEntry(StrictModel):
    z: ComplexPair
    value: ComplexPair
    abs: float
    arg: float


class ExactSection(StrictModel):
    """Rational form of gamma: coefficient lists, ascending powers."""

    num: list[ExactPair]
    den: list[ExactPair]


class ZeroEntry(StrictModel):
    location: ComplexPair
    multiplicity: int


class DefectRow(StrictModel):
    radius: float
    raw: float
    removed: float


class DefectSection(StrictModel):
    """Circle means of log|gamma| against log|gamma(0)|; ``removed``
    divides out the listed in-disk zeros first.  Limits extrapolate the
    last two radii to the boundary."""

    rows: list[DefectRow]
    raw_limit: float
    removed_limit: float
    points: int
    origin_multiplicity: int


class PartitionEntry(StrictModel):
    base: ComplexPair
    blocks: list[list[ComplexPair]]


class StructureSection(StrictModel):
    """Fiber partition certified when gamma vanishes identically: g is
    constant on blocks of one common size dividing the generator degree."""

    level_size: int
    divides_degree: bool
    partitions: list[PartitionEntry]


class VerdictSection(StrictModel):
    kind: Literal["Dense", "FiniteCodim", "InfiniteCodim", "GammaZero"]
    reason: str
    space: str
    codim_bound: Optional[int] = None
    exact_codim: Optional[int] = None


class SampleEntry(StrictModel):
    z: ComplexPair
    coeffs: list[ComplexPair]
    residual: float


class SkippedEntry(StrictModel):
    z: ComplexPair
    reason: str


class DecompositionSection(StrictModel):
    max_residual: Optional[float] = None
    mean_residual: Optional[float] = None
    fiber_constancy: Optional[float] = None
    sample_count: int
    skipped: list[SkippedEntry]
    degenerate: bool
    samples: Optional[list[SampleEntry]] = None


class MonomialSection(StrictModel):
    n: int
    m: int
    zero_count: int
    codimension: int


class Report(StrictModel):
    schema_version: str = SCHEMA_VERSION
    command: str
    status: Literal["ok", "inconclusive", "degenerate"] = "ok"
    detail: Optional[str] = None
    elapsed_ms: float = 0.0
    fiber: Optional[FiberSection] = None
    values: Optional[list[ValueEntry]] = None
    exact: Optional[ExactSection] = None
    zeros: Optional[list[ZeroEntry]] = None
    boundary_zeros: Optional[list[ZeroEntry]] = None
    search_radius: Optional[float] = None
    verdict: Optional[VerdictSection] = None
    defect: Optional[DefectSection] = None
    structure: Optional[StructureSection] = None
    decomposition: Optional[DecompositionSection] = None
    monomial: Optional[MonomialSection] = None
    diagnostics: dict = Field(default_factory=dict)


class ErrorBody(StrictModel):
    kind: str
    message: str
    path: Optional[str] = None


class ErrorEnvelope(StrictModel):
    error: ErrorBody


class HealthResponse(StrictModel):
    status: Literal["ok"]
    version: str
    schema_version: str
