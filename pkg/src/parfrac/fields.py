"""Exact coefficient fields.

A field object owns the arithmetic; its elements are plain Python values in
the field's native representation:

* :data:`QQ` -- :class:`fractions.Fraction` (always in lowest terms).
* :class:`PrimeField` -- ``int`` residues in ``[0, p)``.
* :class:`ExtensionField` -- tuples of base-field values, the coefficients
  (ascending) of a polynomial in the generator reduced modulo the minimal
  polynomial.

Algorithms call ``K.add``, ``K.mul`` ... directly on native values.  The
:class:`FieldElement` wrapper adds operator syntax and mixed-field checks
for interactive use.
"""

from __future__ import annotations

import random as _random
from fractions import Fraction

from ._render import render_poly
from .exceptions import (
    FieldMismatchError,
    NotInvertibleError,
    ParseError,
    ReducibleModulusError,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int, rounds: int = 8) -> bool:
    """Miller-Rabin test; deterministic below 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= 3317044064679887385961981:
        rng = _random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(rounds)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Interface shared by all coefficient fields."""

    zero: object
    one: object

    # -- arithmetic on native values ------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def mul_int(self, a, n: int):
        """Multiply ``a`` by the integer ``n``."""
        return self.mul(a, self.from_int(n))

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return a == b

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def convolve(self, a, b):
        """Schoolbook product of two coefficient lists (ascending powers)."""
        if not a or not b:
            return []
        add, mul, is_zero = self.add, self.mul, self.is_zero
        res = [self.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if is_zero(x):
                continue
            for j, y in enumerate(b):
                res[i + j] = add(res[i + j], mul(x, y))
        return res

    def sub_scaled(self, xs, ys, f):
        """Return ``[x - f*y for x, y in zip(xs, ys)]``."""
        sub, mul = self.sub, self.mul
        return [sub(x, mul(f, y)) for x, y in zip(xs, ys)]

    # -- conversion -------------------------------------------------------
    def from_int(self, n: int):
        raise NotImplementedError

    def convert(self, x):
        """Coerce ``x`` (int, Fraction, str, FieldElement or native) into the field."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def from_str(self, s: str):
        return self.convert(s)

    def sort_key(self, a):
        return a

    def random(self, rng: _random.Random, bound: int = 10):
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    def __call__(self, x=0) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"element of {x.field} used as {self}")
            return x
        return FieldElement(self, self.convert(x))

    def _unwrap(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"element of {x.field} used as {self}")
            return x.value
        return None


class RationalField(Field):
    """The rationals, elements are :class:`~fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, n):
        return a * n

    def inv(self, a):
        if not a:
            raise NotInvertibleError("division by zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise NotInvertibleError("division by zero")
        return a / b

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        return Fraction(n)

    def convert(self, x):
        v = self._unwrap(x)
        if v is not None:
            return v
        if isinstance(x, bool):
            raise TypeError("bool is not a rational coefficient")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            try:
                return Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"not a rational number: {x!r}") from exc
        raise TypeError(f"cannot convert {type(x).__name__} to a rational")

    def to_str(self, a):
        return str(a)

    def random(self, rng, bound=10):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    @property
    def characteristic(self):
        return 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    @property
    def name(self):
        return "rational"


QQ = RationalField()


class PrimeField(Field):
    """The prime field F_p, elements are ints in ``[0, p)``."""

    zero = 0
    one = 1

    def __init__(self, modulus: int):
        modulus = int(modulus)
        if not is_probable_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        self.modulus = modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def mul_int(self, a, n):
        return a * n % self.modulus

    def inv(self, a):
        if a == 0:
            raise NotInvertibleError("division by zero")
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        if b == 0:
            raise NotInvertibleError("division by zero")
        return a * pow(b, -1, self.modulus) % self.modulus

    def is_zero(self, a):
        return a == 0

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        return pow(a, n, self.modulus)

    def convolve(self, a, b):
        if not a or not b:
            return []
        p = self.modulus
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b, i):
                    res[j] += x * y
        return [c % p for c in res]

    def sub_scaled(self, xs, ys, f):
        p = self.modulus
        return [(x - f * y) % p for x, y in zip(xs, ys)]

    def from_int(self, n):
        return n % self.modulus

    def convert(self, x):
        v = self._unwrap(x)
        if v is not None:
            return v
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return x % self.modulus
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.modulus, x.denominator % self.modulus)
        if isinstance(x, str):
            try:
                return self.convert(Fraction(x.strip()))
            except ValueError as exc:
                raise ParseError(f"not a residue: {x!r}") from exc
        raise TypeError(f"cannot convert {type(x).__name__} to F_{self.modulus}")

    def to_str(self, a):
        return str(a)

    def random(self, rng, bound=None):
        return rng.randrange(self.modulus)

    @property
    def characteristic(self):
        return self.modulus

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"

    @property
    def name(self):
        return f"fp:{self.modulus}"


class ExtensionField(Field):
    """Simple extension ``base[x]/<minpoly(x)>`` with one named generator.

    ``minpoly`` must be monic of degree >= 2 over ``base``.  Irreducibility
    is the caller's responsibility; only squarefreeness is checked.
    """

    def __init__(self, base: Field, minpoly, name: str = "a"):
        from .polynomial import Polynomial, gcd

        if isinstance(base, ExtensionField):
            raise ValueError("towers of extensions are not supported")
        if not isinstance(minpoly, Polynomial):
            minpoly = Polynomial(minpoly, base)
        if minpoly.field != base:
            raise FieldMismatchError("minimal polynomial is over a different field")
        if minpoly.degree < 2:
            raise ValueError("minimal polynomial must have degree >= 2")
        if not base.eq(minpoly.lc, base.one):
            raise ValueError("minimal polynomial must be monic")
        if gcd(minpoly, minpoly.derivative()).degree > 0:
            raise ReducibleModulusError("minimal polynomial is not squarefree")
        self.base_field = base
        self.minpoly = minpoly
        self.generator_name = name
        self.degree = minpoly.degree
        self._tail = [base.neg(c) for c in minpoly.coeffs[:-1]]
        self.zero = (base.zero,) * self.degree
        self.one = (base.one,) + (base.zero,) * (self.degree - 1)

    @property
    def gen(self):
        """The generator (a root of the minimal polynomial)."""
        K = self.base_field
        return (K.zero, K.one) + (K.zero,) * (self.degree - 2)

    def reduce(self, coeffs):
        """Reduce an arbitrary-length coefficient list modulo the minimal polynomial."""
        K, d = self.base_field, self.degree
        c = list(coeffs)
        tail = self._tail
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if K.is_zero(top):
                continue
            for i, m in enumerate(tail):
                c[k - d + i] = K.add(c[k - d + i], K.mul(top, m))
        c = c[:d]
        c.extend([K.zero] * (d - len(c)))
        return tuple(c)

    def embed(self, c):
        """Embed a base-field value."""
        return (c,) + (self.base_field.zero,) * (self.degree - 1)

    def add(self, a, b):
        add = self.base_field.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.base_field.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        neg = self.base_field.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        return self.reduce(self.base_field.convolve(list(a), list(b)))

    def mul_int(self, a, n):
        mi = self.base_field.mul_int
        return tuple(mi(x, n) for x in a)

    def inv(self, a):
        from .polynomial import Polynomial, xgcd

        K = self.base_field
        if self.is_zero(a):
            raise NotInvertibleError("division by zero")
        g, u, _ = xgcd(Polynomial._raw(list(a), K), self.minpoly)
        if g.degree != 0:
            raise ReducibleModulusError(
                "reducible modulus: element shares a factor with the minimal polynomial"
            )
        return self.reduce(u.coeffs)

    def is_zero(self, a):
        is_zero = self.base_field.is_zero
        return all(is_zero(x) for x in a)

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return self.embed(self.base_field.from_int(n))

    def convert(self, x):
        from .polynomial import Polynomial

        v = self._unwrap(x)
        if v is not None:
            return v
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return self.embed(self.base_field.convert(x))
        if isinstance(x, FieldElement) and x.field == self.base_field:
            return self.embed(x.value)
        if isinstance(x, Polynomial):
            if x.field != self.base_field:
                raise FieldMismatchError("polynomial over a different field")
            return self.reduce(x.coeffs)
        if isinstance(x, (tuple, list)):
            return self.reduce([self.base_field.convert(c) for c in x])
        if isinstance(x, str):
            from .parsing import parse_polynomial

            return self.reduce(
                parse_polynomial(x, self.base_field, var=self.generator_name).coeffs
            )
        raise TypeError(f"cannot convert {type(x).__name__} to {self!r}")

    def to_str(self, a):
        return render_poly(list(a), self.base_field, var=self.generator_name)

    def sort_key(self, a):
        return tuple(self.base_field.sort_key(c) for c in a)

    def random(self, rng, bound=10):
        return tuple(self.base_field.random(rng, bound) for _ in range(self.degree))

    @property
    def characteristic(self):
        return self.base_field.characteristic

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base_field == self.base_field
            and other.minpoly == self.minpoly
            and other.generator_name == self.generator_name
        )

    def __hash__(self):
        return hash(("ext", self.base_field, self.minpoly.coeffs, self.generator_name))

    def __repr__(self):
        return f"{self.base_field!r}[{self.generator_name}]/<{self.minpoly.to_str(self.generator_name)}>"

    @property
    def name(self):
        return f"{self.base_field.name}[{self.minpoly.to_str(self.generator_name, descending=True)}]"


class CountingField(Field):
    """Proxy that counts multiplications (including divisions and inversions).

    Instances compare equal only to themselves, so everything fed to an
    instrumented run must be built over the same proxy.
    """

    def __init__(self, inner: Field):
        self.inner = inner
        self.zero = inner.zero
        self.one = inner.one
        self.muls = 0
        self.invs = 0

    def reset(self):
        self.muls = 0
        self.invs = 0

    def add(self, a, b):
        return self.inner.add(a, b)

    def sub(self, a, b):
        return self.inner.sub(a, b)

    def neg(self, a):
        return self.inner.neg(a)

    def mul(self, a, b):
        self.muls += 1
        return self.inner.mul(a, b)

    def mul_int(self, a, n):
        self.muls += 1
        return self.inner.mul_int(a, n)

    def inv(self, a):
        self.invs += 1
        return self.inner.inv(a)

    def div(self, a, b):
        self.muls += 1
        self.invs += 1
        return self.inner.div(a, b)

    def is_zero(self, a):
        return self.inner.is_zero(a)

    def eq(self, a, b):
        return self.inner.eq(a, b)

    def pow(self, a, n):
        self.muls += max(n.bit_length(), 1) * 2 if n else 0
        return self.inner.pow(a, n)

    def convolve(self, a, b):
        self.muls += sum(1 for x in a if not self.inner.is_zero(x)) * len(b)
        return self.inner.convolve(a, b)

    def sub_scaled(self, xs, ys, f):
        self.muls += min(len(xs), len(ys))
        return self.inner.sub_scaled(xs, ys, f)

    def from_int(self, n):
        return self.inner.from_int(n)

    def convert(self, x):
        if isinstance(x, FieldElement) and x.field is self:
            return x.value
        if isinstance(x, FieldElement) and x.field == self.inner:
            return x.value
        return self.inner.convert(x)

    def to_str(self, a):
        return self.inner.to_str(a)

    def sort_key(self, a):
        return self.inner.sort_key(a)

    def random(self, rng, bound=10):
        return self.inner.random(rng, bound)

    @property
    def characteristic(self):
        return self.inner.characteristic

    @property
    def name(self):
        return self.inner.name

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"Counting({self.inner!r})"


def field_from_name(name: str) -> Field:
    """Parse ``"rational"`` or ``"fp:<prime>"``."""
    name = name.strip().lower()
    if name in ("rational", "q", "qq"):
        return QQ
    if name.startswith("fp:"):
        try:
            modulus = int(name[3:])
        except ValueError as exc:
            raise ValueError(f"bad prime in field spec {name!r}") from exc
        return PrimeField(modulus)
    raise ValueError(f"unknown field {name!r}; expected 'rational' or 'fp:<prime>'")


class FieldElement:
    """An immutable field value bound to its field, with operator support."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field!r} and {other.field!r}"
                )
            return other.value
        return self.field.convert(other)

    def _new(self, value):
        return FieldElement(self.field, value)

    def __add__(self, other):
        return self._new(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._new(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._new(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._new(self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return self._new(self.field.div(self._other(other), self.value))

    def __neg__(self):
        return self._new(self.field.neg(self.value))

    def __pow__(self, n: int):
        return self._new(self.field.pow(self.value, n))

    def inv(self):
        return self._new(self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        try:
            return self.field.eq(self.value, self._other(other))
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.to_str(self.value)

    def __repr__(self):
        return f"FieldElement({self.field!r}, {self})"
