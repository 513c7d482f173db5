"""Partial fractions over an arbitrary field via quotient-ring arithmetic.

For pairwise coprime ``D_1 ... D_k`` the numerator of the fractional part
at ``D_i`` is the remainder of ``N * (prod_{j != i} D_j)^{-1}`` modulo
``D_i``.  Each ``D_i = p_i^{a_i}`` is then expanded in powers of ``p_i``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Sequence, Tuple

from .exceptions import NotCoprimeError
from .expansion import (
    FactoredDenominator,
    PartialFractionExpansion,
    PFDTerm,
    check_same_field,
    zero_expansion,
)
from .polynomial import Polynomial, divrem, xgcd


def rem_product(D1: Polynomial, others: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``prod(others)`` modulo ``D1``.

    Each factor is reduced first; the running product is reduced whenever
    its degree reaches ``2*deg(D1)``, so intermediate degrees stay bounded.
    """
    K = D1.field
    if D1.is_zero():
        raise ValueError("modulus must be nonzero")
    d = D1.degree
    acc = Polynomial.one(K)
    for f in others:
        check_same_field(D1, f)
        if f.degree >= d:
            f = divrem(f, D1)[1]
        acc = acc * f
        if acc.degree >= 2 * d:
            acc = divrem(acc, D1)[1]
    return divrem(acc, D1)[1]


def mod_inverse(P: Polynomial, D: Polynomial) -> Polynomial:
    """Inverse of ``P`` in ``K[t]/<D>`` (degree below ``deg D``)."""
    check_same_field(P, D)
    g, u, _ = xgcd(divrem(P, D)[1], D)
    if g.degree != 0:
        raise NotCoprimeError(
            f"factor not coprime to modulus: gcd is {g.to_str(descending=True)}"
        )
    return divrem(u, D)[1]


def _modulus_data(den: FactoredDenominator, i: int):
    D_i = den.prime_power(i)
    others = []
    for j, (p, a) in enumerate(den.factors):
        if j != i:
            others.extend([p] * a)
    return D_i, others


def frac_wrt(N: Polynomial, den: FactoredDenominator, i: int) -> Polynomial:
    """Numerator ``r_i`` of the fractional part of ``N/den`` at ``p_i^{a_i}``."""
    check_same_field(N, den)
    if N.degree >= den.degree:
        raise ValueError("frac_wrt needs a proper fraction; strip the polynomial part first")
    K = den.field
    D_i, others = _modulus_data(den, i)
    if D_i.degree < 1:
        return Polynomial.zero(K)
    cofactor = rem_product(D_i, others)
    N_red = divrem(N, D_i)[1]
    r = divrem(N_red * mod_inverse(cofactor, D_i), D_i)[1]
    return r.scale(K.inv(den.unit))


def prime_power_tail(r: Polynomial, p: Polynomial, a: int) -> List[Polynomial]:
    """``[A_1, ..., A_a]`` with ``r/p^a = sum A_j/p^j`` and ``deg A_j < deg p``."""
    check_same_field(r, p)
    if a < 1:
        raise ValueError("multiplicity must be positive")
    if p.degree < 1:
        raise ValueError("base polynomial must be non-constant")
    if r.degree >= a * p.degree:
        raise ValueError(f"deg r = {r.degree} is not below a*deg p = {a * p.degree}")
    digits = []
    for _ in range(a):
        r, A = divrem(r, p)
        digits.append(A)
    # digits[0] is the numerator over p^a
    return digits[::-1]


def split_prime_power(
    p: Polynomial, q: Polynomial, m: int, n: int, r: Polynomial, s: Polynomial
) -> Tuple[List[Polynomial], List[Polynomial]]:
    """Expand ``1/(p^m q^n)`` given ``1/(pq) = r/p + s/q``.

    Returns ``(c, d)`` with ``1/(p^m q^n) = sum_i c[i]/p^(m-i) + sum_j d[j]/q^(n-j)``
    for ``i < m``, ``j < n``.  Computed from ``A(m,n) = r A(m,n-1) + s A(m-1,n)``
    with ``A(i,0) = 1/p^i`` and ``A(0,j) = 1/q^j``; numerators are not reduced.
    """
    check_same_field(p, q, r, s)
    if m < 1 or n < 1:
        raise ValueError("exponents must be positive")
    if r * q + s * p != Polynomial.one(p.field):
        raise ValueError("r, s do not satisfy r*q + s*p = 1")
    K = p.field
    zero = Polynomial.zero(K)
    Grid = Dict[Tuple[int, int], Tuple[Dict[int, Polynomial], Dict[int, Polynomial]]]
    A: Grid = {}
    for i in range(1, m + 1):
        A[i, 0] = ({i: Polynomial.one(K)}, {})
    for j in range(1, n + 1):
        A[0, j] = ({}, {j: Polynomial.one(K)})

    def combine(x, cx, y, cy):
        out = []
        for side in (0, 1):
            acc: Dict[int, Polynomial] = {}
            for src, coef in ((x, cx), (y, cy)):
                for k, v in src[side].items():
                    acc[k] = acc.get(k, zero) + coef * v
            out.append(acc)
        return tuple(out)

    for i in range(1, m + 1):
        for j in range(1, n + 1):
            A[i, j] = combine(A[i, j - 1], r, A[i - 1, j], s)
    pnum, qnum = A[m, n]
    c = [pnum.get(m - i, zero) for i in range(m)]
    d = [qnum.get(n - j, zero) for j in range(n)]
    return c, d


def pfd_general(
    N: Polynomial, den: FactoredDenominator, parallel: bool = False
) -> PartialFractionExpansion:
    """Partial fraction expansion of ``N/den`` over any field."""
    check_same_field(N, den)
    K = den.field
    if N.is_zero():
        return zero_expansion(K)
    poly_part = Polynomial.zero(K)
    if N.degree >= den.degree:
        poly_part, N = divrem(N, den.polynomial())

    def job(i):
        return frac_wrt(N, den, i)

    idx = range(len(den.factors))
    if parallel and len(den.factors) > 1:
        with ThreadPoolExecutor() as pool:
            numerators = list(pool.map(job, idx))
    else:
        numerators = [job(i) for i in idx]
    terms = []
    for (p, a), r in zip(den.factors, numerators):
        digits = prime_power_tail(r, p, a)
        for j in range(a, 0, -1):
            A = digits[j - 1]
            if not A.is_zero():
                terms.append(PFDTerm(p, j, A))
    return PartialFractionExpansion(poly_part, tuple(terms))


def ppfraction(N: Polynomial, den: FactoredDenominator) -> PartialFractionExpansion:
    """Expansion with respect to the prime powers ``p_i^{a_i}`` (not split further).

    Each term has ``factor = p_i^{a_i}`` expanded and ``power = 1``.
    """
    check_same_field(N, den)
    K = den.field
    poly_part = Polynomial.zero(K)
    if N.degree >= den.degree:
        poly_part, N = divrem(N, den.polynomial())
    terms = []
    if not N.is_zero():
        for i in range(len(den.factors)):
            r = frac_wrt(N, den, i)
            if not r.is_zero():
                terms.append(PFDTerm(den.prime_power(i), 1, r))
    return PartialFractionExpansion(poly_part, tuple(terms))
