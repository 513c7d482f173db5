"""Low-level text rendering shared by fields and polynomials."""

from fractions import Fraction
from math import lcm


def join_terms(terms, spaced=False):
    """Join signed term strings: ``["1", "-2*t"]`` -> ``"1-2*t"``."""
    if not terms:
        return "0"
    plus, minus = (" + ", " - ") if spaced else ("+", "-")
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += minus + term[1:]
        else:
            out += plus + term
    return out


def needs_parens(s):
    """True if ``s`` has a top-level ``+``/``-`` after its first character."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False


def monomial(coeff_str, power, var):
    """Render ``coeff * var^power`` given the already-rendered coefficient."""
    if power == 0:
        return coeff_str
    mono = var if power == 1 else f"{var}^{power}"
    if coeff_str == "1":
        return mono
    if coeff_str == "-1":
        return "-" + mono
    if needs_parens(coeff_str) or "/" in coeff_str:
        return f"({coeff_str})*{mono}"
    return f"{coeff_str}*{mono}"


def render_poly(coeffs, field, var="t", descending=False, spaced=False, pull=True):
    """Render a coefficient list (ascending powers) as text.

    Over the rationals the coefficients are pulled over a common
    denominator, so ``[2/28, -3/28]`` renders as ``(2-3*t)/28``, unless
    ``pull`` is false.
    """
    from .fields import RationalField

    pairs = [(i, c) for i, c in enumerate(coeffs) if not field.is_zero(c)]
    if descending:
        pairs.reverse()
    if not pairs:
        return "0"
    if pull and isinstance(getattr(field, "inner", field), RationalField):
        den = lcm(*(Fraction(c).denominator for _, c in pairs))
        terms = [monomial(str(int(c * den)), i, var) for i, c in pairs]
        body = join_terms(terms, spaced)
        if den == 1:
            return body
        if len(terms) == 1 and not needs_parens(body):
            return f"{body}/{den}"
        return f"({body})/{den}"
    terms = [monomial(field.to_str(c), i, var) for i, c in pairs]
    return join_terms(terms, spaced)
