"""Denominator descriptions and the partial fraction expansion result type."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Tuple

from .exceptions import FieldMismatchError, NotCoprimeError
from .fields import Field
from .polynomial import Polynomial, gcd, product_tree


class FactoredDenominator:
    """``unit * prod(p_i ** a_i)`` with monic, pairwise coprime ``p_i``.

    Non-monic factors are normalised on construction (their leading
    coefficients are folded into ``unit``) and equal factors are merged.
    Coprimality is checked pairwise; a failure names the offending pair.
    """

    def __init__(self, factors: Iterable[Tuple[Polynomial, int]], unit=None, field: Field = None):
        factors = list(factors)
        if field is None:
            if not factors:
                raise ValueError("field is required for an empty factor list")
            field = factors[0][0].field
        K = field
        u = K.one if unit is None else K.convert(unit)
        if K.is_zero(u):
            raise ValueError("denominator unit must be nonzero")
        merged: list = []
        for p, a in factors:
            if not isinstance(p, Polynomial):
                p = Polynomial(p, K)
            if p.field != K:
                raise FieldMismatchError("denominator factors over different fields")
            a = int(a)
            if a < 1:
                raise ValueError(f"multiplicity must be positive, got {a}")
            if p.is_zero():
                raise ValueError("zero factor in denominator")
            u = K.mul(u, K.pow(p.lc, a))
            if p.degree == 0:
                continue
            p = p.monic()
            for idx, (q, b) in enumerate(merged):
                if q == p:
                    merged[idx] = (q, b + a)
                    break
            else:
                merged.append((p, a))
        for i in range(len(merged)):
            for j in range(i + 1, len(merged)):
                g = gcd(merged[i][0], merged[j][0])
                if g.degree > 0:
                    raise NotCoprimeError(
                        f"factors not coprime: {merged[i][0].to_str(descending=True)} and "
                        f"{merged[j][0].to_str(descending=True)} share {g.to_str(descending=True)}"
                    )
        self.factors: Tuple[Tuple[Polynomial, int], ...] = tuple(merged)
        self.unit = u
        self.field = K

    @property
    def degree(self) -> int:
        return sum(p.degree * a for p, a in self.factors)

    def prime_power(self, i: int) -> Polynomial:
        p, a = self.factors[i]
        return p ** a

    def polynomial(self) -> Polynomial:
        """The expanded denominator, unit included."""
        K = self.field
        if not self.factors:
            return Polynomial.constant(self.unit, K)
        return product_tree([self.prime_power(i) for i in range(len(self.factors))]).scale(self.unit)

    def is_split(self) -> bool:
        return all(p.degree == 1 for p, _ in self.factors)

    def as_split(self) -> Optional["SplitDenominator"]:
        """The same denominator as a list of roots, or None if a factor is not linear."""
        if not self.is_split():
            return None
        K = self.field
        return SplitDenominator([(K.neg(p[0]), a) for p, a in self.factors], self.unit, K)

    def __eq__(self, other):
        return (
            isinstance(other, FactoredDenominator)
            and self.field == other.field
            and self.factors == other.factors
            and self.field.eq(self.unit, other.unit)
        )

    def __repr__(self):
        fs = "*".join(f"({p.to_str(descending=True)})^{a}" for p, a in self.factors)
        return f"FactoredDenominator({self.field.to_str(self.unit)} * {fs or '1'})"


class SplitDenominator:
    """``unit * prod((t - a_i) ** m_i)`` with pairwise distinct roots ``a_i``."""

    def __init__(self, roots: Iterable[Tuple[object, int]], unit=None, field: Field = None):
        if field is None:
            raise ValueError("field is required")
        K = field
        self.field = K
        self.roots = tuple((K.convert(a), int(m)) for a, m in roots)
        for _, m in self.roots:
            if m < 1:
                raise ValueError(f"multiplicity must be positive, got {m}")
        self.unit = K.one if unit is None else K.convert(unit)
        if K.is_zero(self.unit):
            raise ValueError("denominator unit must be nonzero")
        seen = {}
        for i, (a, _) in enumerate(self.roots):
            key = K.sort_key(a)
            if key in seen:
                raise NotCoprimeError(
                    f"factors not coprime: root {K.to_str(a)} repeated at positions {seen[key]} and {i}"
                )
            seen[key] = i

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def to_factored(self) -> FactoredDenominator:
        K = self.field
        return FactoredDenominator(
            [(Polynomial.linear(a, K), m) for a, m in self.roots], self.unit, K
        )

    def polynomial(self) -> Polynomial:
        return self.to_factored().polynomial()


@dataclass(frozen=True)
class PFDTerm:
    """One summand ``numerator / factor**power``."""

    factor: Polynomial
    power: int
    numerator: Polynomial


@dataclass(frozen=True)
class PartialFractionExpansion:
    """``poly_part + sum(term.numerator / term.factor**term.power)``.

    Zero numerators are omitted.  ``terms`` follow denominator factor order,
    powers descending within a factor; use :meth:`canonical` before
    comparing expansions produced by different routes.
    """

    poly_part: Polynomial
    terms: Tuple[PFDTerm, ...] = dc_field(default=())

    @property
    def field(self) -> Field:
        return self.poly_part.field

    def canonical(self) -> "PartialFractionExpansion":
        terms = sorted(self.terms, key=lambda t: (t.factor.sort_key(), -t.power))
        return PartialFractionExpansion(self.poly_part, tuple(terms))

    def equivalent(self, other: "PartialFractionExpansion") -> bool:
        return self.canonical() == other.canonical()

    def numerators_at(self, factor: Polynomial) -> dict:
        """``{power: numerator}`` for one denominator factor."""
        return {t.power: t.numerator for t in self.terms if t.factor == factor}

    def validate(self):
        """Check properness of every term and distinctness of powers per factor."""
        seen = set()
        for t in self.terms:
            if t.numerator.degree >= t.factor.degree:
                raise ValueError(f"improper term numerator {t.numerator} over {t.factor}")
            key = (t.factor, t.power)
            if key in seen:
                raise ValueError(f"repeated power {t.power} for factor {t.factor}")
            seen.add(key)
        return self

    def shift(self, b) -> "PartialFractionExpansion":
        """Apply ``t -> t + b`` termwise (monic factors stay monic)."""
        from .polynomial import shift

        terms = []
        for t in self.terms:
            f = shift(t.factor, b)
            terms.append(PFDTerm(f, t.power, shift(t.numerator, b)))
        return PartialFractionExpansion(shift(self.poly_part, b), tuple(terms))


def zero_expansion(field: Field) -> PartialFractionExpansion:
    return PartialFractionExpansion(Polynomial.zero(field), ())


def check_same_field(*items):
    first = items[0].field
    for x in items[1:]:
        if x.field != first:
            raise FieldMismatchError(f"operands over {first!r} and {x.field!r}")
