"""JSON function specifications.

A spec is a JSON object describing one oracle node::

    {"kind": "poly", "coeffs": [[0, 0], [1, 0]]}
    {"kind": "blaschke", "zeros": [[0, 0], [0.5, 0]], "unimodular": [1, 0]}
    {"kind": "sing_inner", "point": [1, 0], "mass": 1}
    {"kind": "product", "factors": [ ... ]}
    {"kind": "compose", "outer": { ... }, "inner": { ... }}
    {"kind": "scale", "scalar": [2, 0], "operand": { ... }}

Scalars may be written as a bare number, a fraction string like "1/3"
(kept exact), or an [re, im] pair of either.  ``"type"`` is accepted as
an alias for ``"kind"``.  A ``"boundary_continuous": true`` attribute on
any node records the user's assertion that the function extends
continuously to the closed disk.

Parse failures raise :class:`SpecParseError` carrying a JSON path such
as ``$.factors[1].zeros[0]``.
"""
from __future__ import annotations

import json
import math
import os
from fractions import Fraction

from .blaschke import BlaschkeProduct
from .errors import (BlaschkeGammaError, BudgetExceeded, SpecParseError)
from .oracle import (AnalyticOracle, blaschke_oracle, compose_oracle,
                     poly_oracle, product_oracle, rational_oracle,
                     scale_oracle, singular_inner_oracle, sum_oracle)
from .polycore import ComplexPoly, GaussianRational, RationalFn

_KIND_ALIASES = {
    "poly": "poly",
    "polynomial": "poly",
    "rational": "rational",
    "blaschke": "blaschke",
    "sing_inner": "sing_inner",
    "singular_inner": "sing_inner",
    "sum": "sum",
    "product": "product",
    "compose": "compose",
    "scale": "scale",
    "scalar_mul": "scale",
}


def _fail(path: str, message: str):
    raise SpecParseError(path, message)


def _node_kind(obj, path: str) -> str:
    if not isinstance(obj, dict):
        _fail(path, f"expected a JSON object, got {type(obj).__name__}")
    raw = obj.get("kind", obj.get("type"))
    if raw is None:
        _fail(path, 'missing "kind"')
    kind = _KIND_ALIASES.get(raw)
    if kind is None:
        _fail(f"{path}.kind", f"unknown kind {raw!r}")
    return kind


def _parse_real(v, path: str):
    """One real scalar: number, or a fraction string kept exact."""
    if isinstance(v, bool):
        _fail(path, "expected a number, got a boolean")
    if isinstance(v, int):
        return Fraction(v), True
    if isinstance(v, float):
        return v, False
    if isinstance(v, str):
        try:
            return Fraction(v), True
        except (ValueError, ZeroDivisionError):
            _fail(path, f"cannot read {v!r} as a fraction")
    _fail(path, f"expected a number or fraction string, got "
                f"{type(v).__name__}")


def _parse_scalar(v, path: str):
    """One complex scalar; returns (value, is_exact)."""
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            _fail(path, f"a complex value needs [re, im], got length {len(v)}")
        re, re_exact = _parse_real(v[0], f"{path}[0]")
        im, im_exact = _parse_real(v[1], f"{path}[1]")
        if re_exact and im_exact:
            return GaussianRational(re, im), True
        return complex(float(re), float(im)), False
    re, exact = _parse_real(v, path)
    if exact:
        return GaussianRational(re, Fraction(0)), True
    return complex(re, 0.0), False


def _parse_coeff_list(v, path: str, minimum: int = 1):
    if not isinstance(v, list):
        _fail(path, f"expected an array of coefficients, got "
                    f"{type(v).__name__}")
    if len(v) < minimum:
        _fail(path, f"need at least {minimum} coefficient(s)")
    values = []
    all_exact = True
    for i, item in enumerate(v):
        val, exact = _parse_scalar(item, f"{path}[{i}]")
        values.append(val)
        all_exact = all_exact and exact
    if not all_exact:
        values = [val.to_complex() if isinstance(val, GaussianRational)
                  else val for val in values]
    return ComplexPoly(values, exact=all_exact)


def _parse_poly(obj, path: str) -> ComplexPoly:
    if "coeffs" not in obj:
        _fail(f"{path}.coeffs", 'missing "coeffs"')
    return _parse_coeff_list(obj["coeffs"], f"{path}.coeffs")


def _parse_blaschke(obj, path: str) -> BlaschkeProduct:
    if "zeros" not in obj:
        _fail(f"{path}.zeros", 'missing "zeros"')
    raw = obj["zeros"]
    if not isinstance(raw, list) or not raw:
        _fail(f"{path}.zeros", "expected a non-empty array of zeros")
    zeros = []
    all_exact = True
    for i, item in enumerate(raw):
        val, exact = _parse_scalar(item, f"{path}.zeros[{i}]")
        a = val if exact else complex(val)
        mod = math.sqrt(float(a.abs2())) if exact else abs(a)
        if mod >= 1.0 - 1e-12:
            _fail(f"{path}.zeros[{i}]",
                  f"zero must satisfy |a| < 1, got modulus {mod}")
        zeros.append(val)
        all_exact = all_exact and exact
    unimodular = 1
    if "unimodular" in obj:
        unimodular, c_exact = _parse_scalar(obj["unimodular"],
                                            f"{path}.unimodular")
        all_exact = all_exact and c_exact
        cmod = (math.sqrt(float(unimodular.abs2()))
                if isinstance(unimodular, GaussianRational)
                else abs(unimodular))
        if abs(cmod - 1.0) > 1e-12:
            _fail(f"{path}.unimodular",
                  f"constant must be unimodular, got modulus {cmod}")
    if not all_exact:
        zeros = [z.to_complex() if isinstance(z, GaussianRational) else z
                 for z in zeros]
        if isinstance(unimodular, GaussianRational):
            unimodular = unimodular.to_complex()
    try:
        return BlaschkeProduct(zeros, unimodular, exact=all_exact)
    except BlaschkeGammaError as exc:
        _fail(path, str(exc))


def _parse_sing_inner(obj, path: str):
    key = next((k for k in ("point", "zeta0", "zeta") if k in obj), None)
    if key is None:
        _fail(f"{path}.point", 'missing "point"')
    val, _ = _parse_scalar(obj[key], f"{path}.{key}")
    point = val.to_complex() if isinstance(val, GaussianRational) else val
    if abs(abs(point) - 1.0) > 1e-9:
        _fail(f"{path}.{key}",
              f"point must lie on the unit circle, got modulus {abs(point)}")
    if "mass" not in obj:
        _fail(f"{path}.mass", 'missing "mass"')
    mass_val, _ = _parse_real(obj["mass"], f"{path}.mass")
    mass = float(mass_val)
    if not mass > 0:
        _fail(f"{path}.mass", f"mass must be positive, got {mass}")
    return point, mass


def _child_array(obj, path: str, names):
    for name in names:
        if name in obj:
            arr = obj[name]
            if not isinstance(arr, list) or not arr:
                _fail(f"{path}.{name}", "expected a non-empty array of nodes")
            return name, arr
    _fail(path, f'missing child array (one of {", ".join(names)})')


def parse_function_spec(obj, path: str = "$") -> AnalyticOracle:
    """Parse one JSON node (already decoded) into an oracle tree."""
    kind = _node_kind(obj, path)
    flag = bool(obj.get("boundary_continuous", False))
    try:
        if kind == "poly":
            node = poly_oracle(_parse_poly(obj, path))
        elif kind == "rational":
            if "num" not in obj:
                _fail(f"{path}.num", 'missing "num"')
            if "den" not in obj:
                _fail(f"{path}.den", 'missing "den"')
            num = _parse_coeff_list(obj["num"], f"{path}.num")
            den = _parse_coeff_list(obj["den"], f"{path}.den")
            if den.is_zero:
                _fail(f"{path}.den", "denominator is identically zero")
            node = rational_oracle(RationalFn(num, den))
        elif kind == "blaschke":
            node = blaschke_oracle(_parse_blaschke(obj, path))
        elif kind == "sing_inner":
            point, mass = _parse_sing_inner(obj, path)
            node = singular_inner_oracle(point, mass)
        elif kind == "sum":
            name, arr = _child_array(obj, path, ("terms", "children"))
            node = sum_oracle(*[parse_function_spec(c, f"{path}.{name}[{i}]")
                                for i, c in enumerate(arr)])
        elif kind == "product":
            name, arr = _child_array(obj, path, ("factors", "children"))
            node = product_oracle(
                *[parse_function_spec(c, f"{path}.{name}[{i}]")
                  for i, c in enumerate(arr)])
        elif kind == "compose":
            if "outer" in obj and "inner" in obj:
                outer = parse_function_spec(obj["outer"], f"{path}.outer")
                inner = parse_function_spec(obj["inner"], f"{path}.inner")
            elif "children" in obj:
                arr = obj["children"]
                if not isinstance(arr, list) or len(arr) != 2:
                    _fail(f"{path}.children",
                          "compose needs exactly two children [outer, inner]")
                outer = parse_function_spec(arr[0], f"{path}.children[0]")
                inner = parse_function_spec(arr[1], f"{path}.children[1]")
            else:
                _fail(path, 'compose needs "outer" and "inner"')
            node = compose_oracle(outer, inner)
        else:  # scale
            if "scalar" not in obj:
                _fail(f"{path}.scalar", 'missing "scalar"')
            key = "operand" if "operand" in obj else None
            if key is None:
                if "child" in obj:
                    key = "child"
                else:
                    _fail(f"{path}.operand", 'missing "operand"')
            scalar, _ = _parse_scalar(obj["scalar"], f"{path}.scalar")
            node = scale_oracle(
                scalar, parse_function_spec(obj[key], f"{path}.{key}"))
    except BudgetExceeded as exc:
        _fail(path, str(exc))
    if flag:
        node = AnalyticOracle(node.kind, payload=node.payload,
                              children=node.children,
                              assume_boundary_continuous=True)
    return node


def parse_generator(obj, path: str = "$"):
    """Parse a generator spec: a Blaschke product or a polynomial of
    degree >= 1."""
    kind = _node_kind(obj, path)
    if kind == "blaschke":
        return _parse_blaschke(obj, path)
    if kind == "poly":
        p = _parse_poly(obj, path)
        if p.degree < 1:
            _fail(f"{path}.coeffs", "generator must have degree >= 1")
        return p
    _fail(f"{path}.kind",
          f"generator must be a blaschke product or polynomial, got {kind!r}")


def loads_function_spec(text: str) -> AnalyticOracle:
    return parse_function_spec(_decode(text))


def loads_generator(text: str):
    return parse_generator(_decode(text))


def _decode(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError("$", f"invalid JSON: {exc}") from None


def read_spec_argument(arg: str):
    """CLI helper: the argument is inline JSON when it starts with '{',
    otherwise a path to a JSON file."""
    text = arg.strip()
    if text.startswith("{"):
        return _decode(text)
    if not os.path.exists(arg):
        raise SpecParseError("$", f"spec file not found: {arg}")
    with open(arg, "r", encoding="utf-8") as fh:
        return _decode(fh.read())
