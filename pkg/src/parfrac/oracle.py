"""Reference implementations: the classical linear-system method and recombination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .exceptions import ParfracError
from .expansion import (
    FactoredDenominator,
    PartialFractionExpansion,
    PFDTerm,
    check_same_field,
    zero_expansion,
)
from .fields import Field
from .polynomial import Polynomial, divrem


class SingularSystemError(ParfracError, ArithmeticError):
    """The coefficient-matching system has no unique solution."""


@dataclass
class DenseLinearSystem:
    """Square system ``matrix @ x = rhs`` over a field, rows as lists."""

    matrix: List[list]
    rhs: list
    field: Field

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix) or len(self.rhs) != n:
            raise ValueError("system must be square")

    def solve(self) -> list:
        """Gaussian elimination taking the first nonzero entry as pivot."""
        K = self.field
        n = len(self.matrix)
        rows = [list(r) + [b] for r, b in zip(self.matrix, self.rhs)]
        is_zero, sub_scaled, div = K.is_zero, K.sub_scaled, K.div
        for col in range(n):
            piv = next((r for r in range(col, n) if not is_zero(rows[r][col])), None)
            if piv is None:
                raise SingularSystemError(f"no pivot in column {col}")
            rows[col], rows[piv] = rows[piv], rows[col]
            prow = rows[col]
            inv = K.inv(prow[col])
            tail = prow[col + 1 :]
            for r in range(col + 1, n):
                row = rows[r]
                if is_zero(row[col]):
                    continue
                f = K.mul(row[col], inv)
                row[col + 1 :] = sub_scaled(row[col + 1 :], tail, f)
                row[col] = K.zero
        x = [K.zero] * n
        for col in range(n - 1, -1, -1):
            row = rows[col]
            acc = row[n]
            for k in range(col + 1, n):
                if not is_zero(row[k]):
                    acc = K.sub(acc, K.mul(row[k], x[k]))
            x[col] = div(acc, row[col])
        return x


def build_system(N: Polynomial, den: FactoredDenominator) -> DenseLinearSystem:
    """Coefficient matching for ``N = sum_{i,j} A_ij * D / p_i^j``.

    Column ``(i, j, k)`` holds the coefficients of ``t^k * D / p_i^j`` with
    ``D`` the monic denominator; the unit is divided into ``N``.
    """
    K = den.field
    M = den.degree
    D = FactoredDenominator(den.factors, None, K).polynomial()
    columns = []
    for i, (p, a) in enumerate(den.factors):
        cof = D
        quotients = {}
        for j in range(1, a + 1):
            cof, rem = divrem(cof, p)
            if not rem.is_zero():
                raise ArithmeticError("denominator factor does not divide the expansion")
            quotients[j] = cof
        for j in range(a, 0, -1):
            base = quotients[j].padded(M)
            for k in range(p.degree):
                columns.append([K.zero] * k + base[: M - k])
    matrix = [[col[r] for col in columns] for r in range(M)]
    rhs = N.scale(K.inv(den.unit)).padded(M)
    return DenseLinearSystem(matrix, rhs, K)


def classical_pfd(N: Polynomial, den: FactoredDenominator) -> PartialFractionExpansion:
    """Partial fractions by solving the full coefficient-matching system."""
    check_same_field(N, den)
    K = den.field
    if N.degree >= den.degree:
        raise ValueError("classical_pfd needs a proper fraction")
    if N.is_zero():
        return zero_expansion(K)
    x = build_system(N, den).solve()
    terms = []
    pos = 0
    for p, a in den.factors:
        d = p.degree
        for j in range(a, 0, -1):
            A = Polynomial._raw(x[pos : pos + d], K)
            pos += d
            if not A.is_zero():
                terms.append(PFDTerm(p, j, A))
    return PartialFractionExpansion(Polynomial.zero(K), tuple(terms))


def recombine(e: PartialFractionExpansion, den: FactoredDenominator):
    """``(N, D)`` with ``D = den.polynomial()`` and ``N/D`` equal to the expansion.

    Every term's ``factor**power`` must divide ``D``.
    """
    K = den.field
    D = den.polynomial()
    N = e.poly_part * D if not e.poly_part.is_zero() else Polynomial.zero(K)
    for t in e.terms:
        check_same_field(t.numerator, den)
        cof, rem = divrem(D, t.factor ** t.power)
        if not rem.is_zero():
            raise ValueError(f"term denominator {t.factor}^{t.power} does not divide D")
        N = N + t.numerator * cof
    return N, D


def verify_expansion(e: PartialFractionExpansion, N: Polynomial, den: FactoredDenominator) -> bool:
    """True iff ``e`` is proper termwise and recombines exactly to ``N/den``."""
    try:
        e.validate()
        Nr, _ = recombine(e, den)
    except (ValueError, ArithmeticError):
        return False
    return Nr == N
