"""Full partial fractions over the symbolic roots of each prime factor.

For a prime ``p`` of multiplicity ``m`` and a root ``alpha`` (the generator
of ``K(alpha) = K[x]/<p(x)>``), the numerators ``h_j(alpha)`` of
``sum_j h_j(alpha)/(t - alpha)^j`` are read off
``N(t+alpha) / (u(t)^m * prod_j P_j(t+alpha)^{a_j}) mod t^m``
where ``p(t + alpha) = t*u(t)``.
"""

from __future__ import annotations

import string
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .exceptions import NotCoprimeError, ParfracError
from .expansion import FactoredDenominator, check_same_field
from .fields import ExtensionField, Field
from .polynomial import Polynomial, divrem, gcd, shift
from .pfd_quotient import frac_wrt, pfd_general
from .truncated import TruncatedSeries, trunc_div, trunc_mul, trunc_pow, truncate


@dataclass(frozen=True)
class RootGroup:
    """``sum over roots alpha of prime: sum_j h_j(alpha) / (t - alpha)^j``.

    ``field`` is ``K(alpha)`` (or ``K`` itself for a linear prime, where
    ``root`` is the actual root); ``terms`` holds ``(j, h_j)`` with ``h_j``
    a native value of ``field``, powers descending, zeros omitted.
    """

    prime: Polynomial
    generator: str
    field: Field
    root: object
    terms: Tuple[Tuple[int, object], ...]

    def h(self, power: int):
        for j, v in self.terms:
            if j == power:
                return v
        return self.field.zero


@dataclass(frozen=True)
class FullExpansion:
    poly_part: Polynomial
    groups: Tuple[RootGroup, ...]

    @property
    def field(self) -> Field:
        return self.poly_part.field


def default_generator(i: int) -> str:
    # "t" is the polynomial variable, so skip it
    letters = [c for c in string.ascii_lowercase if c != "t"]
    return letters[i] if i < len(letters) else f"a{i}"


def root_field(p: Polynomial, name: str):
    """``(L, alpha)``: the field generated by a root of ``p`` and that root."""
    K = p.field
    if p.degree == 1:
        return K, K.neg(K.div(p[0], p[1]))
    L = ExtensionField(K, p.monic(), name)
    return L, L.gen


def lift(f: Polynomial, L: Field) -> Polynomial:
    if L == f.field:
        return f
    return f.map(L.embed, L)


def full_frac_at_prime(
    N: Polynomial, den: FactoredDenominator, i: int, generator: Optional[str] = None
) -> RootGroup:
    """The root group of ``N/den`` at the prime ``den.factors[i]``."""
    check_same_field(N, den)
    if N.degree >= den.degree:
        raise ValueError("full_frac_at_prime needs a proper fraction")
    p, m = den.factors[i]
    name = generator or default_generator(i)
    L, alpha = root_field(p, name)
    ps = shift(lift(p, L), alpha)
    if not L.is_zero(ps[0]):
        raise ParfracError("alpha is not a root: p(t + alpha) has nonzero constant term")
    u = Polynomial._raw(ps.coeffs[1:], L)
    if L.is_zero(u[0]):
        raise NotCoprimeError(f"{p.to_str(descending=True)} has a repeated root")
    E = trunc_pow(truncate(u, m), m)
    for j, (q, a) in enumerate(den.factors):
        if j == i:
            continue
        qs = truncate(shift(lift(q, L), alpha, truncate_at=m), m)
        if L.is_zero(qs[0]):
            raise NotCoprimeError("factors share a root")
        E = trunc_mul(E, trunc_pow(qs, a))
    Ns = truncate(shift(lift(N, L), alpha, truncate_at=m), m)
    r = trunc_div(Ns, E)
    inv_u = L.inv(L.embed(den.unit) if L != den.field else den.unit)
    terms = tuple(
        (m - j, L.mul(r[j], inv_u)) for j in range(m) if not L.is_zero(r[j])
    )
    return RootGroup(p, name, L, alpha, terms)


def full_pfd(
    N: Polynomial,
    den: FactoredDenominator,
    generators: Optional[Sequence[str]] = None,
    parallel: bool = False,
) -> FullExpansion:
    """Polynomial part plus one root group per prime factor.

    Each factor must be squarefree (checked) and irreducible (assumed).
    """
    check_same_field(N, den)
    K = den.field
    for p, _ in den.factors:
        if gcd(p, p.derivative()).degree > 0:
            raise NotCoprimeError(f"{p.to_str(descending=True)} is not squarefree")
    poly_part = Polynomial.zero(K)
    if N.degree >= den.degree:
        poly_part, N = divrem(N, den.polynomial())
    names = list(generators) if generators else [default_generator(i) for i in range(len(den.factors))]

    def job(i):
        return full_frac_at_prime(N, den, i, names[i])

    idx = range(len(den.factors))
    if N.is_zero():
        groups = [RootGroup(p, names[i], *root_field(p, names[i]), ()) for i, (p, _) in enumerate(den.factors)]
    elif parallel and len(den.factors) > 1:
        with ThreadPoolExecutor() as pool:
            groups = list(pool.map(job, idx))
    else:
        groups = [job(i) for i in idx]
    return FullExpansion(poly_part, tuple(groups))


# ---------------------------------------------------------------------------
# verification


def verify_full(expansion: FullExpansion, N: Polynomial, den: FactoredDenominator) -> bool:
    """Exact check of every root group against the quotient-ring numerator.

    For the ppfraction numerator ``r`` at ``p^m``, the principal part of
    ``r/p^m`` at ``alpha`` is ``H(t)/t^m`` with ``H = sum_j h_j t^(m-j)``, so
    ``u^m * H = r(t+alpha) mod t^m``.
    """
    K = den.field
    poly_part = Polynomial.zero(K)
    if N.degree >= den.degree:
        poly_part, N = divrem(N, den.polynomial())
    if expansion.poly_part != poly_part or len(expansion.groups) != len(den.factors):
        return False
    for i, ((p, m), g) in enumerate(zip(den.factors, expansion.groups)):
        if g.prime != p:
            return False
        L, alpha = g.field, g.root
        r = frac_wrt(N, den, i) if not N.is_zero() else Polynomial.zero(K)
        ps = shift(lift(p, L), alpha)
        if not L.is_zero(ps[0]):
            return False
        u = Polynomial._raw(ps.coeffs[1:], L)
        H = TruncatedSeries._raw([g.h(m - j) for j in range(m)], m, L)
        lhs = trunc_mul(trunc_pow(truncate(u, m), m), H)
        rhs = truncate(shift(lift(r, L), alpha, truncate_at=m), m)
        if lhs != rhs:
            return False
    return True


def refactor_check(group: RootGroup, N: Polynomial, den: FactoredDenominator) -> bool:
    """Cross-check a quadratic-prime group by splitting the prime over ``K(alpha)``.

    There ``p = (t - alpha)(t - (s - alpha))`` with ``s`` the negated linear
    coefficient; an ordinary expansion over ``K(alpha)`` of the re-factored
    denominator must have numerators ``h_j(alpha)`` at ``t - alpha``.
    """
    p = group.prime
    if p.degree != 2 or not isinstance(group.field, ExtensionField):
        raise ValueError("refactor_check applies to quadratic primes only")
    L, alpha = group.field, group.root
    K = den.field
    if N.degree >= den.degree:
        N = divrem(N, den.polynomial())[1]
    conj = L.sub(L.embed(K.neg(p[1])), alpha)
    factors = []
    for q, a in den.factors:
        if q == p:
            factors.append((Polynomial.linear(alpha, L), a))
            factors.append((Polynomial.linear(conj, L), a))
        else:
            factors.append((lift(q, L), a))
    unit = L.embed(den.unit)
    e = pfd_general(lift(N, L), FactoredDenominator(factors, unit, L))
    at_alpha = e.numerators_at(Polynomial.linear(alpha, L))
    m = dict(den.factors)[p]
    for j in range(1, m + 1):
        A = at_alpha.get(j, Polynomial.zero(L))
        if not L.eq(A[0], group.h(j)):
            return False
    return True


def evaluate_numeric(expansion: FullExpansion, x: complex) -> complex:
    """Floating evaluation with each generator replaced by every complex root.

    Rational base field only.
    """
    total = complex(sum(float(c) * x**k for k, c in enumerate(expansion.poly_part.coeffs)))
    for g in expansion.groups:
        coeffs = [float(c) for c in reversed(g.prime.coeffs)]
        roots = np.roots(coeffs) if g.prime.degree > 1 else [-coeffs[1] / coeffs[0]]
        for alpha in roots:
            alpha = complex(alpha)
            for j, h in g.terms:
                if isinstance(g.field, ExtensionField):
                    hv = sum(float(c) * alpha**k for k, c in enumerate(h))
                else:
                    hv = float(h)
                total += hv / (x - alpha) ** j
    return total


def evaluate_rational_numeric(N: Polynomial, D: Polynomial, x: complex) -> complex:
    num = sum(float(c) * x**k for k, c in enumerate(N.coeffs))
    den = sum(float(c) * x**k for k, c in enumerate(D.coeffs))
    return num / den


__all__ = [
    "RootGroup",
    "FullExpansion",
    "full_frac_at_prime",
    "full_pfd",
    "verify_full",
    "refactor_check",
    "evaluate_numeric",
    "evaluate_rational_numeric",
    "root_field",
    "lift",
]
