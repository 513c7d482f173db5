"""Arithmetic in K[t]/<t^m>: truncation, truncated products and quotients."""

from __future__ import annotations

from typing import Sequence

from .exceptions import FieldMismatchError, NotInvertibleError
from .fields import QQ, Field
from .polynomial import Polynomial, mul_coeffs


class TruncatedSeries:
    """The first ``m`` coefficients of a power series.

    The order ``m`` is part of the value: ``coeffs`` always has length
    exactly ``m``, trailing zeros included.
    """

    __slots__ = ("coeffs", "m", "field")

    def __init__(self, coeffs: Sequence, m: int, field: Field = QQ):
        if m < 1:
            raise ValueError("truncation order must be positive")
        c = [field.convert(x) for x in list(coeffs)[:m]]
        c.extend([field.zero] * (m - len(c)))
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "field", field)

    @classmethod
    def _raw(cls, coeffs, m, field):
        s = object.__new__(cls)
        c = list(coeffs[:m])
        c.extend([field.zero] * (m - len(c)))
        object.__setattr__(s, "coeffs", tuple(c))
        object.__setattr__(s, "m", m)
        object.__setattr__(s, "field", field)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def to_polynomial(self) -> Polynomial:
        return Polynomial._raw(self.coeffs, self.field)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries; use truncate() to convert")
        if other.field != self.field:
            raise FieldMismatchError("series over different fields")

    def __add__(self, other):
        self._check(other)
        m = min(self.m, other.m)
        add = self.field.add
        return TruncatedSeries._raw(
            [add(x, y) for x, y in zip(self.coeffs[:m], other.coeffs[:m])], m, self.field
        )

    def __sub__(self, other):
        self._check(other)
        m = min(self.m, other.m)
        sub = self.field.sub
        return TruncatedSeries._raw(
            [sub(x, y) for x, y in zip(self.coeffs[:m], other.coeffs[:m])], m, self.field
        )

    def __mul__(self, other):
        return trunc_mul(self, other)

    def __truediv__(self, other):
        return trunc_div(self, other)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return self.m

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.m, self.field, self.coeffs) == (other.m, other.field, other.coeffs)

    def __hash__(self):
        return hash((self.m, self.field, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({self.to_polynomial()} + O(t^{self.m}))"


def truncate(p: Polynomial, m: int) -> TruncatedSeries:
    """Drop every term ``t^n`` with ``n >= m``."""
    return TruncatedSeries._raw(p.coeffs, m, p.field)


def _order(P, Q, m):
    P._check(Q)
    if m is None:
        m = min(P.m, Q.m)
    elif m > min(P.m, Q.m):
        raise ValueError(f"order {m} exceeds the operands' orders {P.m}, {Q.m}")
    return m


def trunc_mul(P: TruncatedSeries, Q: TruncatedSeries, m: int = None) -> TruncatedSeries:
    """``P*Q mod t^m`` (``m`` defaults to the smaller operand order)."""
    m = _order(P, Q, m)
    K = P.field
    return TruncatedSeries._raw(mul_coeffs(P.coeffs[:m], Q.coeffs[:m], K)[:m], m, K)


def _mul_low(a, b, n, K):
    return mul_coeffs(a[:n], b[:n], K)[:n]


def _div_dc(p, q, m, inv_q0, K):
    # p, q are lists of length >= m; returns the first m coefficients of p/q.
    if m == 1:
        return [K.mul(p[0], inv_q0)]
    h = (m + 1) // 2
    l = m - h
    z1 = _div_dc(p, q, h, inv_q0, K)
    q1z1 = mul_coeffs(q[:h], z1, K)
    eq = K.eq
    for i in range(h):
        if not eq(p[i], q1z1[i]):
            raise ArithmeticError("truncated division: low half failed to cancel")
    sub, zero = K.sub, K.zero
    rhs = [sub(p[h + i], q1z1[h + i] if h + i < len(q1z1) else zero) for i in range(l)]
    q2z1 = _mul_low(q[h:m], z1, l, K)
    for i, c in enumerate(q2z1):
        rhs[i] = sub(rhs[i], c)
    return z1 + _div_dc(rhs, q, l, inv_q0, K)


def trunc_div(P: TruncatedSeries, Q: TruncatedSeries, m: int = None) -> TruncatedSeries:
    """``P/Q mod t^m`` by divide and conquer; requires ``Q(0) != 0``.

    With ``Z = Z1 + t^h Z2`` (``h = ceil(m/2)``), ``Z1 = P/Q mod t^h`` and
    ``Z2 = ((P1 - Q1 Z1)/t^h + P2 - Q2 Z1) / Q1 mod t^(m-h)``.
    """
    m = _order(P, Q, m)
    K = P.field
    if K.is_zero(Q.coeffs[0]):
        raise NotInvertibleError("non-invertible series: constant term is zero")
    z = _div_dc(list(P.coeffs[:m]), list(Q.coeffs[:m]), m, K.inv(Q.coeffs[0]), K)
    return TruncatedSeries._raw(z, m, K)


def trunc_div_naive(P: TruncatedSeries, Q: TruncatedSeries, m: int = None) -> TruncatedSeries:
    """Term-by-term long division (quadratic reference for :func:`trunc_div`)."""
    m = _order(P, Q, m)
    K = P.field
    q = Q.coeffs
    if K.is_zero(q[0]):
        raise NotInvertibleError("non-invertible series: constant term is zero")
    inv0 = K.inv(q[0])
    z = []
    for k in range(m):
        acc = P.coeffs[k]
        for j in range(1, k + 1):
            acc = K.sub(acc, K.mul(q[j], z[k - j]))
        z.append(K.mul(acc, inv0))
    return TruncatedSeries._raw(z, m, K)


def trunc_pow(P: TruncatedSeries, n: int) -> TruncatedSeries:
    """``P^n mod t^m`` by repeated squaring."""
    K = P.field
    result = TruncatedSeries._raw([K.one], P.m, K)
    base = P
    while n:
        if n & 1:
            result = trunc_mul(result, base)
        n >>= 1
        if n:
            base = trunc_mul(base, base)
    return result


def trunc_product(series: Sequence[TruncatedSeries], m: int) -> TruncatedSeries:
    """Balanced product of truncated series, truncating after every product."""
    if not series:
        raise ValueError("empty product")
    K = series[0].field
    level = [list(s.coeffs[:m]) for s in series]
    while len(level) > 1:
        nxt = [_mul_low(level[i], level[i + 1], m, K) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return TruncatedSeries._raw(level[0], m, K)


def pole_series(a, k: int, m: int, field: Field = QQ) -> TruncatedSeries:
    """First ``m`` coefficients of ``1/(t - a)^k`` expanded at ``t = 0``.

    The coefficient of ``t^j`` is ``(-1)^k C(k-1+j, j) / a^(k+j)``.
    """
    K = field
    a = K.convert(a)
    if K.is_zero(a):
        raise NotInvertibleError("pole at the origin has no power series expansion")
    if k < 1:
        raise ValueError("pole order must be positive")
    inv_a = K.inv(a)
    c = K.pow(inv_a, k)
    if k % 2:
        c = K.neg(c)
    out = []
    binom = 1
    for j in range(m):
        out.append(c if binom == 1 else K.mul_int(c, binom))
        binom = binom * (k + j) // (j + 1)
        c = K.mul(c, inv_a)
    return TruncatedSeries._raw(out, m, K)


__all__ = [
    "TruncatedSeries",
    "truncate",
    "trunc_mul",
    "trunc_div",
    "trunc_div_naive",
    "trunc_pow",
    "trunc_product",
    "pole_series",
]
