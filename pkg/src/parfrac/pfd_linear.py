"""Partial fractions when the denominator splits into linear factors.

For each root ``a`` of multiplicity ``m`` the numerators at ``a`` are the
coefficients of ``N(t+a) / E(t) mod t^m``, where ``E(t)`` is the rest of the
denominator shifted by ``a``.  Roots are handled independently.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

from .exceptions import NotCoprimeError, NotInvertibleError
from .expansion import (
    PartialFractionExpansion,
    PFDTerm,
    SplitDenominator,
    check_same_field,
    zero_expansion,
)
from .polynomial import Polynomial, expand_linear_power, product_tree, shift
from .truncated import (
    TruncatedSeries,
    pole_series,
    trunc_div,
    trunc_mul,
    trunc_product,
    truncate,
)

GROUPING = "grouping"
POLE_SERIES = "pole-series"


def frac_at_zero(N: Polynomial, E: Polynomial, m: int) -> Polynomial:
    """Numerator ``r`` with ``r/t^m`` the fractional part of ``N/(t^m E)`` at ``t^m``."""
    check_same_field(N, E)
    K = N.field
    if K.is_zero(E[0]):
        raise NotCoprimeError("E(0) = 0: factor is not coprime to t^m")
    return trunc_div(truncate(N, m), truncate(E, m), m).to_polynomial()


def _cofactor_grouping(others, a, m, K) -> TruncatedSeries:
    # E = prod (t + a - a_j)^{m_j} mod t^m.  Factors are gathered into
    # groups of total degree <= m - 1; each group is expanded exactly (it
    # stays below t^m) and then folded into E with one truncated product.
    if m == 1:
        # simple root: E is the constant prod (a - a_j)^{m_j}
        e = K.one
        for aj, mj in others:
            d = K.sub(a, aj)
            e = K.mul(e, d if mj == 1 else K.pow(d, mj))
        return TruncatedSeries._raw([e], 1, K)
    cap = m - 1
    E = TruncatedSeries._raw([K.one], m, K)
    group: List[Polynomial] = []
    size = 0

    def flush():
        nonlocal E
        if group:
            E = trunc_mul(E, truncate(product_tree(group), m))
            group.clear()

    for aj, mj in others:
        f = expand_linear_power(K.sub(aj, a), mj, truncate_at=m, field=K)
        if size + mj > cap:
            flush()
            size = 0
        group.append(f)
        size += mj
    flush()
    return E


def _inverse_cofactor_poles(others, a, m, K) -> TruncatedSeries:
    # 1/E = prod 1/(t - (a_j - a))^{m_j} mod t^m, one pole series per factor
    series = [pole_series(K.sub(aj, a), mj, m, K) for aj, mj in others]
    if not series:
        return TruncatedSeries._raw([K.one], m, K)
    return trunc_product(series, m)


def _local_numerators(N: Polynomial, den: SplitDenominator, i: int, strategy: str):
    K = den.field
    a, m = den.roots[i]
    others = [r for j, r in enumerate(den.roots) if j != i]
    Ns = truncate(shift(N, a, truncate_at=m), m)
    if strategy == GROUPING:
        r = trunc_div(Ns, _cofactor_grouping(others, a, m, K))
    elif strategy == POLE_SERIES:
        r = trunc_mul(Ns, _inverse_cofactor_poles(others, a, m, K))
    else:
        raise ValueError(f"unknown group strategy {strategy!r}")
    return r


def frac_at_point(
    N: Polynomial, den: SplitDenominator, i: int, strategy: str = GROUPING
) -> List[Tuple[int, object]]:
    """``[(power, A)]`` for the root ``den.roots[i]``, powers descending.

    Requires ``deg N < deg den``.  ``A`` is a native field value; the
    summand is ``A / (t - a_i)**power``.
    """
    check_same_field(N, den)
    if not 0 <= i < len(den.roots):
        raise IndexError(f"factor index {i} out of range")
    if N.degree >= den.degree:
        raise ValueError("frac_at_point needs a proper fraction; strip the polynomial part first")
    K = den.field
    m = den.roots[i][1]
    r = _local_numerators(N, den, i, strategy)
    inv_u = K.inv(den.unit)
    return [(m - j, K.mul(r.coeffs[j], inv_u)) for j in range(m)]


def polynomial_part(N: Polynomial, D: Polynomial) -> Polynomial:
    """Quotient of ``N/D`` via the reversed-polynomial series trick.

    With ``p = deg N - deg D``, the reversal of the quotient is
    ``rev(N)/rev(D) mod t^(p+1)``; ``rev(D)`` has constant term ``lc(D)``.
    """
    check_same_field(N, D)
    K = N.field
    if D.is_zero():
        raise NotInvertibleError("polynomial division by zero")
    if N.degree < D.degree:
        return Polynomial.zero(K)
    n, d = N.degree, D.degree
    p = n - d
    z = trunc_div(truncate(N.reverse(n), p + 1), truncate(D.reverse(d), p + 1))
    return Polynomial._raw(z.coeffs[::-1], K)


def pfd_split(
    N: Polynomial,
    den: SplitDenominator,
    parallel: bool = False,
    strategy: str = GROUPING,
) -> PartialFractionExpansion:
    """Partial fraction expansion of ``N / den`` with a split denominator.

    Terms come in root order, powers descending; zero numerators are left out.
    """
    check_same_field(N, den)
    K = den.field
    if N.is_zero():
        return zero_expansion(K)
    poly_part = Polynomial.zero(K)
    if N.degree >= den.degree:
        D = den.polynomial()
        poly_part = polynomial_part(N, D)
        N = N - poly_part * D
    # fold the unit into N once, then work with the monic denominator
    N = N.scale(K.inv(den.unit))
    monic = SplitDenominator(den.roots, None, K)

    def job(i):
        return _local_numerators(N, monic, i, strategy)

    idx = range(len(den.roots))
    if parallel and len(den.roots) > 1:
        with ThreadPoolExecutor() as pool:
            locals_ = list(pool.map(job, idx))
    else:
        locals_ = [job(i) for i in idx]
    terms = []
    for (a, m), r in zip(den.roots, locals_):
        factor = Polynomial.linear(a, K)
        for j in range(m):
            c = r.coeffs[j]
            if not K.is_zero(c):
                terms.append(PFDTerm(factor, m - j, Polynomial._raw((c,), K)))
    return PartialFractionExpansion(poly_part, tuple(terms))


__all__ = [
    "GROUPING",
    "POLE_SERIES",
    "frac_at_zero",
    "frac_at_point",
    "polynomial_part",
    "pfd_split",
]
