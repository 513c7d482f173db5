"""Text, JSON and LaTeX rendering of expansions."""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import List, Union

from ._render import monomial, needs_parens
from .exceptions import ParseError
from .expansion import PartialFractionExpansion, PFDTerm
from .fields import ExtensionField, Field, RationalField
from .full_expansion import FullExpansion, RootGroup
from .polynomial import Polynomial

STYLES = ("text", "json", "latex")


def _is_rational(K: Field) -> bool:
    return isinstance(getattr(K, "inner", K), RationalField)


def _join(parts: List[str]) -> str:
    # " + "/" - " between summands; a leading minus is written "- "
    if not parts:
        return "0"
    out = ""
    for i, p in enumerate(parts):
        neg = p.startswith("-")
        body = p[1:] if neg else p
        if i == 0:
            out = ("- " if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


# -- text -------------------------------------------------------------------


def _poly_parts(p: Polynomial, var: str = "t") -> List[str]:
    K = p.field
    return [monomial(K.to_str(c), i, var) for i, c in enumerate(p.coeffs) if not K.is_zero(c)]


def _over(num: str, factor: str, power: int) -> str:
    if needs_parens(num):
        num = f"({num})"
    den = f"({factor})" if power == 1 else f"({factor})^{power}"
    return f"{num}/{den}"


def text_pfd(e: PartialFractionExpansion) -> str:
    parts = _poly_parts(e.poly_part)
    for t in e.terms:
        factor = t.factor.to_str(descending=True, pull=False)
        parts.append(_over(t.numerator.to_str(), factor, t.power))
    return _join(parts)


def _linear_group_parts(g: RootGroup) -> List[str]:
    K = g.field
    factor = Polynomial.linear(g.root, K).to_str(descending=True, pull=False)
    return [_over(K.to_str(h), factor, j) for j, h in g.terms]


def text_full(e: FullExpansion) -> str:
    lines = []
    if not e.poly_part.is_zero():
        lines.append(_join(_poly_parts(e.poly_part)))
    linear: List[str] = []
    for g in e.groups:
        if not g.terms:
            continue
        if not isinstance(g.field, ExtensionField):
            linear.extend(_linear_group_parts(g))
            continue
        a = g.generator
        inner = [_over(g.field.to_str(h), f"t-{a}", j) for j, h in g.terms]
        prime = g.prime.to_str(var=a, descending=True, pull=False)
        lines.append(f"sum over roots {a} of {prime}: {_join(inner)}")
    if linear:
        lines.append(_join(linear))
    return "\n".join(lines) if lines else "0"


# -- json -------------------------------------------------------------------


def _coeffs(p: Polynomial) -> List[str]:
    return [p.field.to_str(c) for c in p.coeffs]


def json_pfd_obj(e: PartialFractionExpansion) -> dict:
    return {
        "field": e.field.name,
        "poly_part": _coeffs(e.poly_part),
        "terms": [
            {"factor": _coeffs(t.factor), "power": t.power, "numerator": _coeffs(t.numerator)}
            for t in e.terms
        ],
    }


def _element_coeffs(g: RootGroup, h) -> List[str]:
    if isinstance(g.field, ExtensionField):
        B = g.field.base_field
        c = list(h)
        while c and B.is_zero(c[-1]):
            c.pop()
        return [B.to_str(x) for x in c]
    return [g.field.to_str(h)]


def json_full_obj(e: FullExpansion) -> dict:
    return {
        "field": e.field.name,
        "poly_part": _coeffs(e.poly_part),
        "groups": [
            {
                "prime": _coeffs(g.prime),
                "generator": g.generator,
                "terms": [{"power": j, "h": _element_coeffs(g, h)} for j, h in g.terms],
            }
            for g in e.groups
        ],
    }


def expansion_from_json(obj: Union[str, dict], field: Field) -> PartialFractionExpansion:
    """Inverse of the JSON rendering for partial fraction expansions."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if "groups" in obj:
        raise ParseError("full expansions cannot be read back; verify them with --mode full")
    if obj.get("field", field.name) != field.name:
        raise ParseError(f"expansion is over {obj['field']}, expected {field.name}")
    try:
        poly = Polynomial([field.convert(c) for c in obj["poly_part"]], field)
        terms = tuple(
            PFDTerm(
                Polynomial([field.convert(c) for c in t["factor"]], field),
                int(t["power"]),
                Polynomial([field.convert(c) for c in t["numerator"]], field),
            )
            for t in obj["terms"]
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed expansion JSON: {exc}") from exc
    return PartialFractionExpansion(poly, terms)


# -- latex ------------------------------------------------------------------


def _latex_coeff(c, K: Field) -> str:
    if _is_rational(K):
        c = Fraction(c)
        if c.denominator != 1:
            sign = "-" if c < 0 else ""
            return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return K.to_str(c)


def _latex_monomial(cs: str, k: int, var: str) -> str:
    if k == 0:
        return cs
    mono = var if k == 1 else f"{var}^{{{k}}}"
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    return cs + mono


def _latex_join(parts: List[str]) -> str:
    out = ""
    for i, p in enumerate(parts):
        if i and not p.startswith("-"):
            out += "+"
        out += p
    return out or "0"


def latex_poly(coeffs, K: Field, var: str = "t", descending: bool = True, pull: bool = True):
    """``(body, den)`` with the polynomial equal to ``body/den``."""
    pairs = [(i, c) for i, c in enumerate(coeffs) if not K.is_zero(c)]
    if descending:
        pairs.reverse()
    den = 1
    if pull and _is_rational(K) and pairs:
        den = lcm(*(Fraction(c).denominator for _, c in pairs))
        parts = [_latex_monomial(str(int(c * den)), i, var) for i, c in pairs]
    else:
        parts = [_latex_monomial(_latex_coeff(c, K), i, var) for i, c in pairs]
    return _latex_join(parts), den


def _latex_frac(body: str, den: int, factor: str, power: int) -> str:
    sign = ""
    if body.startswith("-") and not needs_parens(body):
        sign, body = "-", body[1:]
    f = f"({factor})^{{{power}}}" if power > 1 else (f"({factor})" if den != 1 else factor)
    d = (str(den) if den != 1 else "") + f
    return f"{sign}\\frac{{{body}}}{{{d}}}"


def latex_pfd(e: PartialFractionExpansion) -> str:
    K = e.field
    parts = []
    if not e.poly_part.is_zero():
        parts.append(latex_poly(e.poly_part.coeffs, K, pull=False)[0])
    for t in e.terms:
        factor = latex_poly(t.factor.coeffs, K, pull=False)[0]
        body, den = latex_poly(t.numerator.coeffs, K)
        parts.append(_latex_frac(body, den, factor, t.power))
    return _latex_join(parts)


def latex_full(e: FullExpansion) -> str:
    K = e.field
    parts = []
    if not e.poly_part.is_zero():
        parts.append(latex_poly(e.poly_part.coeffs, K, pull=False)[0])
    for g in e.groups:
        if not g.terms:
            continue
        if not isinstance(g.field, ExtensionField):
            factor = latex_poly(Polynomial.linear(g.root, K).coeffs, K, pull=False)[0]
            for j, h in g.terms:
                body, den = latex_poly([h], K)
                parts.append(_latex_frac(body, den, factor, j))
            continue
        a = g.generator
        B = g.field.base_field
        inner = []
        for j, h in g.terms:
            body, den = latex_poly(list(h), B, var=a, descending=False)
            inner.append(_latex_frac(body, den, f"t-{a}", j))
        prime = latex_poly(g.prime.coeffs, K, var=a, pull=False)[0]
        block = _latex_join(inner)
        if len(inner) > 1:
            block = f"\\left[{block}\\right]"
        parts.append(f"\\sum_{{{prime}=0}} {block}")
    return _latex_join(parts)


def format_expansion(
    result: Union[PartialFractionExpansion, FullExpansion], style: str = "text"
) -> str:
    """Deterministic rendering of an expansion in one of ``STYLES``."""
    full = isinstance(result, FullExpansion)
    if style == "text":
        return text_full(result) if full else text_pfd(result)
    if style == "json":
        obj = json_full_obj(result) if full else json_pfd_obj(result)
        return json.dumps(obj, indent=2)
    if style == "latex":
        return latex_full(result) if full else latex_pfd(result)
    raise ValueError(f"unknown style {style!r}; expected one of {', '.join(STYLES)}")


__all__ = ["STYLES", "expansion_from_json", "format_expansion", "json_pfd_obj", "json_full_obj", "latex_poly"]
