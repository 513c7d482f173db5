"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

from typing import Iterable, Sequence

from ._render import render_poly
from .exceptions import FieldMismatchError, NotInvertibleError
from .fields import QQ, Field, FieldElement

NEG_INF = float("-inf")

#: Degree at or below which :func:`mul` with ``strategy="auto"`` (and the
#: Karatsuba recursion) falls back to schoolbook multiplication.
KARATSUBA_THRESHOLD = 32


def _trim(c: list, K: Field) -> list:
    is_zero = K.is_zero
    n = len(c)
    while n and is_zero(c[n - 1]):
        n -= 1
    del c[n:]
    return c


class Polynomial:
    """Immutable dense polynomial ``c0 + c1*t + ...`` over a field.

    ``coeffs`` is a tuple of native field values in ascending order, with
    no trailing zeros; the zero polynomial has ``coeffs == ()`` and degree
    ``-inf``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable = (), field: Field = QQ):
        convert = field.convert
        c = _trim([convert(x) for x in coeffs], field)
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "field", field)

    @classmethod
    def _raw(cls, coeffs, field: Field) -> "Polynomial":
        # coeffs are already native values of ``field``
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(_trim(list(coeffs), field)))
        object.__setattr__(p, "field", field)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, field: Field = QQ) -> "Polynomial":
        return cls._raw((), field)

    @classmethod
    def one(cls, field: Field = QQ) -> "Polynomial":
        return cls._raw((field.one,), field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> "Polynomial":
        return cls._raw((field.convert(c),), field)

    @classmethod
    def monomial(cls, k: int, c=1, field: Field = QQ) -> "Polynomial":
        return cls._raw([field.zero] * k + [field.convert(c)], field)

    @classmethod
    def linear(cls, a, field: Field = QQ) -> "Polynomial":
        """The monic linear polynomial ``t - a``."""
        return cls._raw((field.neg(field.convert(a)), field.one), field)

    # -- basic queries -----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        """Leading coefficient (native value); zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.field.eq(self.coeffs[-1], self.field.one)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.field.zero

    def element(self, i: int) -> FieldElement:
        return FieldElement(self.field, self[i])

    def padded(self, n: int) -> list:
        """First ``n`` coefficients, zero-padded."""
        c = list(self.coeffs[:n])
        c.extend([self.field.zero] * (n - len(c)))
        return c

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.field != self.field:
            raise FieldMismatchError(
                f"polynomials over {self.field!r} and {other.field!r}"
            )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial._raw((self.field.convert(other),), self.field)

    def __add__(self, other):
        other = self._coerce(other)
        K = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        add = K.add
        for i, y in enumerate(b):
            c[i] = add(c[i], y)
        return Polynomial._raw(c, K)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Polynomial._raw([neg(x) for x in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        K = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        zero, sub = K.zero, K.sub
        c = [
            sub(a[i] if i < len(a) else zero, b[i] if i < len(b) else zero)
            for i in range(n)
        ]
        return Polynomial._raw(c, K)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        return self.scale(self.field.convert(other))

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        """Multiply by a native field value."""
        K = self.field
        if K.is_zero(c):
            return Polynomial.zero(K)
        m = K.mul
        return Polynomial._raw([m(x, c) for x in self.coeffs], K)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = Polynomial.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return divrem(self, self._coerce(other))[0]

    def __mod__(self, other):
        return divrem(self, self._coerce(other))[1]

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> "Polynomial":
        mi = self.field.mul_int
        return Polynomial._raw(
            [mi(c, i) for i, c in enumerate(self.coeffs) if i], self.field
        )

    def __call__(self, x):
        """Evaluate at ``x`` (native value, FieldElement, int or Fraction) by Horner."""
        K = self.field
        x = K.convert(x)
        add, m = K.add, K.mul
        acc = K.zero
        for c in reversed(self.coeffs):
            acc = add(m(acc, x), c)
        return acc

    evaluate = __call__

    def shift(self, b, truncate_at=None) -> "Polynomial":
        return shift(self, b, truncate_at)

    def reverse(self, n=None) -> "Polynomial":
        """``t^n p(1/t)`` with ``n`` defaulting to the degree."""
        if n is None:
            n = max(len(self.coeffs) - 1, 0)
        c = self.padded(n + 1)
        return Polynomial._raw(c[::-1], self.field)

    def truncate(self, m: int) -> "Polynomial":
        return Polynomial._raw(self.coeffs[:m], self.field)

    def map(self, fn, field: Field) -> "Polynomial":
        """Apply ``fn`` to each coefficient, producing a polynomial over ``field``."""
        return Polynomial._raw([fn(c) for c in self.coeffs], field)

    # -- comparison / rendering --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        key = self.field.sort_key
        return (len(self.coeffs), tuple(key(c) for c in reversed(self.coeffs)))

    def to_str(
        self, var: str = "t", descending: bool = False, spaced: bool = False, pull: bool = True
    ) -> str:
        return render_poly(list(self.coeffs), self.field, var, descending, spaced, pull)

    def __str__(self):
        # canonical form: ascending powers, zero terms omitted
        K = self.field
        terms = []
        from ._render import join_terms, monomial

        for i, c in enumerate(self.coeffs):
            if not K.is_zero(c):
                terms.append(monomial(K.to_str(c), i, "t"))
        return join_terms(terms, spaced=True)

    def __repr__(self):
        return f"Polynomial({self}, {self.field!r})"


# ---------------------------------------------------------------------------
# multiplication


def _karatsuba(a: list, b: list, K: Field, threshold: int, force: bool = False) -> list:
    n, m = len(a), len(b)
    if n < m:
        a, b, n, m = b, a, m, n
    if m == 0:
        return []
    if m <= threshold + 1 and not (force and m > 1):
        return K.convolve(a, b)
    h = (n + 1) // 2
    a1, a2 = a[:h], a[h:]
    add, sub = K.add, K.sub
    res = [K.zero] * (n + m - 1)
    if m <= h:
        # b fits in the low half: two half-size products, no Karatsuba saving
        for off, part in ((0, a1), (h, a2)):
            for i, c in enumerate(_karatsuba(part, b, K, threshold), off):
                res[i] = add(res[i], c)
        return res
    b1, b2 = b[:h], b[h:]
    low = _karatsuba(a1, b1, K, threshold)
    high = _karatsuba(a2, b2, K, threshold)
    mid = _karatsuba(_padd(a1, a2, add), _padd(b1, b2, add), K, threshold)
    for i, c in enumerate(low):
        mid[i] = sub(mid[i], c)
        res[i] = add(res[i], c)
    for i, c in enumerate(high):
        mid[i] = sub(mid[i], c)
        res[i + 2 * h] = add(res[i + 2 * h], c)
    for i, c in enumerate(mid, h):
        if i < len(res):
            res[i] = add(res[i], c)
    return res


def _padd(x: list, y: list, add) -> list:
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] = add(out[i], c)
    return out


def mul_coeffs(a: Sequence, b: Sequence, K: Field, strategy: str = "auto") -> list:
    """Product of two coefficient lists (no trimming)."""
    if strategy == "auto":
        return _karatsuba(list(a), list(b), K, KARATSUBA_THRESHOLD)
    if strategy == "schoolbook":
        return K.convolve(list(a), list(b))
    if strategy == "karatsuba":
        return _karatsuba(list(a), list(b), K, KARATSUBA_THRESHOLD, force=True)
    raise ValueError(f"unknown multiplication strategy {strategy!r}")


def mul(p: Polynomial, q: Polynomial, strategy: str = "auto") -> Polynomial:
    """Exact product.

    ``"schoolbook"`` is the quadratic convolution.  ``"karatsuba"`` always
    splits at the top level; its subproducts, like ``"auto"``, switch to
    schoolbook once the smaller operand has degree <= KARATSUBA_THRESHOLD.
    """
    p._check(q)
    return Polynomial._raw(mul_coeffs(p.coeffs, q.coeffs, p.field, strategy), p.field)


# ---------------------------------------------------------------------------
# division and gcd


def divrem(N: Polynomial, D: Polynomial):
    """Quotient and remainder, ``N = D*q + r`` with ``deg r < deg D``."""
    N._check(D)
    K = N.field
    if D.is_zero():
        raise NotInvertibleError("polynomial division by zero")
    dn, dd = len(N.coeffs) - 1, len(D.coeffs) - 1
    if dn < dd:
        return Polynomial.zero(K), N
    r = list(N.coeffs)
    d = D.coeffs
    monic = K.eq(D.lc, K.one)
    inv_lc = K.one if monic else K.inv(D.lc)
    q = [K.zero] * (dn - dd + 1)
    dlow = list(d[:-1])
    is_zero = K.is_zero
    sub_scaled = K.sub_scaled
    for k in range(dn - dd, -1, -1):
        top = r[k + dd]
        if is_zero(top):
            continue
        c = top if monic else K.mul(top, inv_lc)
        q[k] = c
        r[k : k + dd] = sub_scaled(r[k : k + dd], dlow, c)
    return Polynomial._raw(q, K), Polynomial._raw(r[:dd], K)


def xgcd(A: Polynomial, B: Polynomial):
    """Extended Euclid: ``(g, u, v)`` with ``u*A + v*B = g`` and ``g`` monic."""
    A._check(B)
    K = A.field
    if A.is_zero() and B.is_zero():
        raise ValueError("xgcd of two zero polynomials")
    r0, r1 = A, B
    s0, s1 = Polynomial.one(K), Polynomial.zero(K)
    t0, t1 = Polynomial.zero(K), Polynomial.one(K)
    while not r1.is_zero():
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = K.inv(r0.lc)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def gcd(A: Polynomial, B: Polynomial) -> Polynomial:
    """Monic gcd (zero if both are zero)."""
    A._check(B)
    while not B.is_zero():
        A, B = B, divrem(A, B)[1]
    return A.monic()


# ---------------------------------------------------------------------------
# shifts, powers and products


def _binomials(n: int, count: int):
    """C(n, 0), C(n, 1), ..., C(n, count-1) as exact integers."""
    out = []
    c = 1
    for j in range(min(count, n + 1)):
        out.append(c)
        c = c * (n - j) // (j + 1)
    return out


def shift(p: Polynomial, b, truncate_at=None) -> Polynomial:
    """``p(t + b)``, optionally keeping only the terms below ``t^truncate_at``.

    Each nonzero term ``c_k t^k`` is expanded by the binomial theorem, so
    the cost is ``O(L * nonzero terms)`` with ``L`` the output length.
    """
    K = p.field
    b = K.convert(b)
    n = len(p.coeffs)
    if n == 0:
        return p
    L = n if truncate_at is None else max(0, min(n, truncate_at))
    if K.is_zero(b):
        return Polynomial._raw(p.coeffs[:L], K)
    add, m, mi, is_zero = K.add, K.mul, K.mul_int, K.is_zero
    powers = [K.one]
    for _ in range(n - 1):
        powers.append(m(powers[-1], b))
    res = [K.zero] * L
    for k, c in enumerate(p.coeffs):
        if is_zero(c):
            continue
        for j, binom in enumerate(_binomials(k, L)):
            term = m(c, powers[k - j])
            if binom != 1:
                term = mi(term, binom)
            res[j] = add(res[j], term)
    return Polynomial._raw(res, K)


def expand_linear_power(a, m: int, truncate_at=None, field: Field = QQ) -> Polynomial:
    """``(t - a)^m``, optionally truncated below ``t^truncate_at``.

    Coefficients ``C(m, i) (-a)^(m-i)`` are generated upward from ``i = 0``:
    one multiplication by ``1/(-a)`` and one by an exact integer binomial
    per term.
    """
    if m < 1:
        raise ValueError("exponent must be positive")
    K = field
    a = K.convert(a)
    L = m + 1 if truncate_at is None else max(0, min(m + 1, truncate_at))
    if K.is_zero(a):
        c = [K.zero] * m + [K.one]
        return Polynomial._raw(c[:L], K)
    na = K.neg(a)
    pw = K.pow(na, m)
    inv = K.inv(na) if L > 1 else None
    out = []
    for i, binom in enumerate(_binomials(m, L)):
        out.append(pw if binom == 1 else K.mul_int(pw, binom))
        if i + 1 < L:
            pw = K.mul(pw, inv)
    return Polynomial._raw(out, K)


def product_tree(factors: Sequence[Polynomial], strategy: str = "auto") -> Polynomial:
    """Balanced pairwise product of a nonempty list of polynomials."""
    factors = list(factors)
    if not factors:
        raise ValueError("product_tree needs at least one factor")
    K = factors[0].field
    for f in factors:
        factors[0]._check(f)
    level = [list(f.coeffs) for f in factors]
    while len(level) > 1:
        nxt = [
            mul_coeffs(level[i], level[i + 1], K, strategy)
            for i in range(0, len(level) - 1, 2)
        ]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return Polynomial._raw(level[0], K)


def fold_product(factors: Sequence[Polynomial]) -> Polynomial:
    """Left-to-right product (reference for :func:`product_tree`)."""
    it = iter(factors)
    acc = next(it)
    for f in it:
        acc = acc * f
    return acc
