"""Expression trees for holomorphic functions on the unit disk.

An :class:`AnalyticOracle` is an immutable tree whose leaves are
polynomials, rational functions, finite Blaschke products, or atomic
singular inner functions exp(mass*(z+p)/(z-p)) with |p| = 1, and whose
interior nodes are sums, products, scalar multiples, and compositions.
Every node supports pointwise evaluation and an exact chain-rule
derivative; trees without singular-inner leaves can be collapsed to a
single rational function.
"""
from __future__ import annotations

import cmath

import numpy as np

from .blaschke import BlaschkeProduct
from .errors import (BudgetExceeded, EvaluationFailure, NotRational,
                     OutsideDomain)
from .polycore import (ComplexPoly, GaussianRational, RationalFn, poly_one)

LEAF_KINDS = ("poly", "rational", "blaschke", "singular_inner")
NODE_KINDS = LEAF_KINDS + ("sum", "product", "scalar_mul", "compose")

MAX_NODES = 500
MAX_DEPTH = 64

_SINGULAR_RADIUS = 1e-12  # evaluation this close to the boundary atom fails
_CIRCLE_TOL = 1e-9        # how close to the unit circle the atom must sit
_RATIONAL_DEGREE_CAP = 512


class AnalyticOracle:
    """One node of the expression tree; use the module factory functions."""

    __slots__ = ("kind", "payload", "children", "assume_boundary_continuous",
                 "_cache")

    def __init__(self, kind, payload=None, children=(),
                 assume_boundary_continuous=False):
        if kind not in NODE_KINDS:
            raise ValueError(f"unknown oracle node kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "children", tuple(children))
        object.__setattr__(self, "assume_boundary_continuous",
                           bool(assume_boundary_continuous))
        object.__setattr__(self, "_cache", {})
        for child in self.children:
            if not isinstance(child, AnalyticOracle):
                raise TypeError("oracle children must be AnalyticOracle")
        if self.node_count() > MAX_NODES:
            raise BudgetExceeded(
                f"oracle tree exceeds {MAX_NODES} nodes")
        if self.depth() > MAX_DEPTH:
            raise BudgetExceeded(
                f"oracle tree exceeds depth {MAX_DEPTH}")

    def __setattr__(self, name, value):
        raise AttributeError("AnalyticOracle is immutable")

    # -- structure ---------------------------------------------------------

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for c in self.children)

    def depth(self) -> int:
        if not self.children:
            return 1
        return 1 + max(c.depth() for c in self.children)

    def contains_singular_inner(self) -> bool:
        if self.kind == "singular_inner":
            return True
        return any(c.contains_singular_inner() for c in self.children)

    def __repr__(self):
        if self.kind in LEAF_KINDS:
            return f"AnalyticOracle({self.kind}, {self.payload!r})"
        return f"AnalyticOracle({self.kind}, {list(self.children)!r})"

    # -- evaluation --------------------------------------------------------

    def eval(self, z) -> complex:
        return self._eval_d(complex(z), need_derivative=False)[0]

    def derivative_at(self, z) -> complex:
        """Derivative by recursive sum/product/chain rules (exact for every
        node kind, including the singular-inner closed form)."""
        return self._eval_d(complex(z), need_derivative=True)[1]

    def eval_with_derivative(self, z):
        return self._eval_d(complex(z), need_derivative=True)

    def _eval_d(self, z: complex, need_derivative: bool):
        kind = self.kind
        if kind == "poly":
            p = self.payload
            v = complex(p.eval(z))
            d = complex(p.derivative().eval(z)) if need_derivative else 0j
            return v, d
        if kind == "rational":
            r = self.payload
            try:
                v = complex(r.eval(z))
                d = (complex(self._rational_derivative().eval(z))
                     if need_derivative else 0j)
            except ZeroDivisionError:
                raise EvaluationFailure(
                    f"rational oracle has a pole at {z}") from None
            return v, d
        if kind == "blaschke":
            b = self.payload
            v = b.eval(z)
            d = complex(b.derivative().eval(z)) if need_derivative else 0j
            return v, d
        if kind == "singular_inner":
            point, mass = self.payload
            dz = z - point
            if abs(dz) < _SINGULAR_RADIUS:
                raise EvaluationFailure(
                    f"singular inner factor evaluated at its boundary "
                    f"point {point}")
            try:
                v = cmath.exp(mass * (z + point) / dz)
            except OverflowError:
                raise EvaluationFailure(
                    f"singular inner factor overflows at {z}") from None
            d = v * mass * (-2.0 * point) / (dz * dz) if need_derivative else 0j
            return v, d
        if kind == "sum":
            v, d = 0j, 0j
            for c in self.children:
                cv, cd = c._eval_d(z, need_derivative)
                v += cv
                d += cd
            return v, d
        if kind == "product":
            vals = []
            ders = []
            for c in self.children:
                cv, cd = c._eval_d(z, need_derivative)
                vals.append(cv)
                ders.append(cd)
            v = 1.0 + 0j
            for cv in vals:
                v *= cv
            d = 0j
            if need_derivative:
                for i, di in enumerate(ders):
                    term = di
                    for j, vj in enumerate(vals):
                        if j != i:
                            term *= vj
                    d += term
            return v, d
        if kind == "scalar_mul":
            s = complex(self.payload.to_complex()
                        if isinstance(self.payload, GaussianRational)
                        else self.payload)
            cv, cd = self.children[0]._eval_d(z, need_derivative)
            return s * cv, s * cd
        # compose
        inner_v, inner_d = self.children[1]._eval_d(z, need_derivative)
        outer_v, outer_d = self.children[0]._eval_d(inner_v, need_derivative)
        return outer_v, outer_d * inner_d

    def _rational_derivative(self) -> RationalFn:
        if "rderiv" not in self._cache:
            self._cache["rderiv"] = self.payload.derivative()
        return self._cache["rderiv"]

    # -- algebraic collapse --------------------------------------------------

    def to_rational(self) -> RationalFn:
        """Collapse the tree to one rational function.

        Raises NotRational when a singular-inner leaf is present or when a
        composition would push degrees past the safety cap.
        """
        if "rational" not in self._cache:
            self._cache["rational"] = self._to_rational()
        return self._cache["rational"]

    def _to_rational(self) -> RationalFn:
        kind = self.kind
        if kind == "poly":
            return RationalFn(self.payload, poly_one(self.payload.exact))
        if kind == "rational":
            return self.payload
        if kind == "blaschke":
            return self.payload.as_rational()
        if kind == "singular_inner":
            raise NotRational(
                "tree contains a singular inner factor")
        parts = [c.to_rational() for c in self.children]
        if kind == "sum":
            out = parts[0]
            for p in parts[1:]:
                out = out + p
        elif kind == "product":
            out = parts[0]
            for p in parts[1:]:
                out = out * p
        elif kind == "scalar_mul":
            out = parts[0].scale(self.payload)
        else:  # compose
            out = parts[0].compose(parts[1])
        if max(out.num.degree, out.den.degree) > _RATIONAL_DEGREE_CAP:
            raise NotRational(
                f"collapsed degree exceeds cap {_RATIONAL_DEGREE_CAP}")
        return out

    def is_rational(self) -> bool:
        return not self.contains_singular_inner()

    # -- boundary behaviour ---------------------------------------------------

    def boundary_continuous(self) -> bool:
        """True when the function provably extends continuously to the closed
        disk: either the user asserted it, or the tree is rational with a
        pole-free closed disk."""
        if self.assume_boundary_continuous:
            return True
        if self.contains_singular_inner():
            return False
        try:
            r = self.to_rational()
        except NotRational:
            return False
        den = r.den.to_float()
        if den.degree <= 0:
            return True
        roots = np.roots(den.float_coeffs()[::-1])
        return bool(np.all(np.abs(roots) > 1.0 + 1e-9))


# ---------------------------------------------------------------------------
# factories
# ---------------------------------------------------------------------------

def poly_oracle(p, exact: bool | None = None) -> AnalyticOracle:
    if not isinstance(p, ComplexPoly):
        p = ComplexPoly(p, exact=exact)
    return AnalyticOracle("poly", payload=p)


def rational_oracle(r) -> AnalyticOracle:
    if not isinstance(r, RationalFn):
        num, den = r
        r = RationalFn(ComplexPoly(num), ComplexPoly(den))
    return AnalyticOracle("rational", payload=r)


def blaschke_oracle(b: BlaschkeProduct) -> AnalyticOracle:
    return AnalyticOracle("blaschke", payload=b)


def singular_inner_oracle(point, mass) -> AnalyticOracle:
    point = complex(point)
    mass = float(mass)
    if abs(abs(point) - 1.0) > _CIRCLE_TOL:
        raise OutsideDomain(
            f"singular inner point must lie on the unit circle, got {point}")
    if not mass > 0:
        raise OutsideDomain("singular inner mass must be positive")
    return AnalyticOracle("singular_inner", payload=(point, mass))


def sum_oracle(*terms) -> AnalyticOracle:
    return AnalyticOracle("sum", children=terms)


def product_oracle(*factors) -> AnalyticOracle:
    return AnalyticOracle("product", children=factors)


def scale_oracle(scalar, operand: AnalyticOracle) -> AnalyticOracle:
    return AnalyticOracle("scalar_mul", payload=scalar, children=(operand,))


def compose_oracle(outer: AnalyticOracle,
                   inner: AnalyticOracle) -> AnalyticOracle:
    return AnalyticOracle("compose", children=(outer, inner))


def identity_oracle(exact: bool = False) -> AnalyticOracle:
    return poly_oracle(ComplexPoly([0, 1], exact=exact))


def as_oracle(obj) -> AnalyticOracle:
    """Lift common value types to an oracle node."""
    if isinstance(obj, AnalyticOracle):
        return obj
    if isinstance(obj, BlaschkeProduct):
        return blaschke_oracle(obj)
    if isinstance(obj, RationalFn):
        return rational_oracle(obj)
    if isinstance(obj, ComplexPoly):
        return poly_oracle(obj)
    if isinstance(obj, (int, float, complex, GaussianRational)):
        return poly_oracle(ComplexPoly([obj]))
    raise TypeError(f"cannot interpret {type(obj).__name__} as an oracle")


def with_boundary_assertion(node: AnalyticOracle,
                            flag: bool = True) -> AnalyticOracle:
    """Copy of the node with the user's boundary-continuity assertion set."""
    return AnalyticOracle(node.kind, payload=node.payload,
                          children=node.children,
                          assume_boundary_continuous=flag)
