"""Expression parsing for rational functions in the variable ``t``.

Grammar (whitespace insignificant)::

    sum     := ["+"|"-"] product (("+"|"-") product)*
    product := unary (("*"|"/") unary)*
    unary   := "-" unary | power
    power   := atom [("^"|"**") exponent]
    atom    := number | VAR | "(" sum ")"
    number  := digits ["." digits]

Division produces a fraction; the divisor's factors are kept exactly as
written (``(t+1)^2`` stays ``(t+1, 2)``) so no factorization is ever needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .exceptions import ParseError
from .expansion import FactoredDenominator, PartialFractionExpansion, PFDTerm
from .fields import Field
from .polynomial import Polynomial, divrem

MODES = ("pfd", "full", "ppfrac")

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    pos: int


def tokenize(src: str) -> List[Token]:
    out = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), start))
        pos = m.end()
    out.append(Token("end", "", n))
    return out


# -- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Var:
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int
    pos: int


Node = Union[Num, Var, Neg, BinOp, Pow]


class _Parser:
    def __init__(self, src: str, var: str):
        self.src = src
        self.var = var
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.take()

    def parse(self) -> Node:
        node = self.sum()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def sum(self) -> Node:
        if self.tok.text in ("+", "-"):
            t = self.take()
            node = self.product()
            if t.text == "-":
                node = Neg(node, t.pos)
        else:
            node = self.product()
        while self.tok.text in ("+", "-"):
            t = self.take()
            node = BinOp(t.text, node, self.product(), t.pos)
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.tok.text in ("*", "/"):
            t = self.take()
            node = BinOp(t.text, node, self.unary(), t.pos)
        return node

    def unary(self) -> Node:
        if self.tok.text == "-":
            t = self.take()
            return Neg(self.unary(), t.pos)
        if self.tok.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.tok.text in ("^", "**"):
            t = self.take()
            return Pow(base, self.exponent(), t.pos)
        return base

    def exponent(self) -> int:
        t = self.tok
        if t.text == "(":
            self.take()
            e = self.exponent()
            self.expect(")")
            return e
        if t.text == "-":
            raise ParseError("exponent must be a nonnegative integer", t.pos)
        if t.kind != "num":
            raise ParseError("exponent must be an integer literal", t.pos)
        self.take()
        if not t.text.isdigit():
            raise ParseError(f"non-integer exponent {t.text!r}", t.pos)
        return int(t.text)

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.take()
            return Num(Fraction(t.text), t.pos)
        if t.kind == "name":
            if t.text != self.var:
                raise ParseError(f"unknown symbol {t.text!r} (the variable is {self.var!r})", t.pos)
            self.take()
            return Var(t.pos)
        if t.text == "(":
            self.take()
            node = self.sum()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.pos)


def parse_ast(src: str, var: str = "t") -> Node:
    return _Parser(src, var).parse()


# -- evaluation -------------------------------------------------------------


@dataclass
class _Frac:
    # num * prod(n_i^e_i) / prod(d_j^f_j), factors kept as written
    num: List[Tuple[Polynomial, int, int]]
    den: List[Tuple[Polynomial, int, int]]

    def expand_num(self, K: Field) -> Polynomial:
        out = Polynomial.one(K)
        for p, e, _ in self.num:
            out = out * p ** e
        return out


def _as_poly(f: _Frac, K: Field) -> Optional[Polynomial]:
    # None unless every denominator factor is a constant
    out = f.expand_num(K)
    for p, e, _ in f.den:
        if p.degree > 0:
            return None
        out = out.scale(K.inv(K.pow(p[0], e)))
    return out


def _evaluate(node: Node, K: Field) -> _Frac:
    if isinstance(node, Num):
        return _Frac([(Polynomial.constant(K.convert(node.value), K), 1, node.pos)], [])
    if isinstance(node, Var):
        return _Frac([(Polynomial.monomial(1, 1, K), 1, node.pos)], [])
    if isinstance(node, Neg):
        f = _evaluate(node.arg, K)
        f.num.append((Polynomial.constant(K.neg(K.one), K), 1, node.pos))
        return f
    if isinstance(node, Pow):
        f = _evaluate(node.base, K)
        if node.exp == 0:
            return _Frac([(Polynomial.one(K), 1, node.pos)], [])
        return _Frac(
            [(p, e * node.exp, q) for p, e, q in f.num],
            [(p, e * node.exp, q) for p, e, q in f.den],
        )
    a, b = _evaluate(node.left, K), _evaluate(node.right, K)
    if node.op in ("+", "-"):
        x, y = _as_poly(a, K), _as_poly(b, K)
        if x is None or y is None:
            raise ParseError("fractions may only appear at the top level; combine them first", node.pos)
        s = x + y if node.op == "+" else x - y
        return _Frac([(s, 1, node.pos)], [])
    if node.op == "*":
        return _Frac(a.num + b.num, a.den + b.den)
    # division: the divisor's numerator factors become denominator factors
    for p, _, pos in b.num:
        if p.is_zero():
            raise ParseError("zero denominator factor", pos)
    return _Frac(a.num + b.den, a.den + b.num)


def parse_polynomial(src: str, field: Field, var: str = "t") -> Polynomial:
    """Parse a polynomial; division is allowed only by nonzero constants."""
    f = _evaluate(parse_ast(src, var), field)
    out = _as_poly(f, field)
    if out is None:
        pos = next(q for p, _, q in f.den if p.degree > 0)
        raise ParseError("division by a non-constant in a polynomial", pos)
    return out


@dataclass(frozen=True)
class InputSpec:
    numerator: Polynomial
    denominator: FactoredDenominator
    field: Field
    mode: str = "pfd"


def parse_expression(src: str, field: Field, mode: str = "pfd") -> InputSpec:
    """Parse ``N / (f_1^e_1 * ...)`` keeping the denominator factored as written."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    f = _evaluate(parse_ast(src, "t"), field)
    factors = [(p, e) for p, e, _ in f.den]
    N = f.expand_num(field)
    return InputSpec(N, FactoredDenominator(factors, None, field), field, mode)


def _split_sum(node: Node) -> List[Tuple[int, Node]]:
    # flatten top-level +/- into signed summands
    if isinstance(node, BinOp) and node.op in ("+", "-"):
        right = _split_sum(node.right)
        if node.op == "-":
            right = [(-s, n) for s, n in right]
        return _split_sum(node.left) + right
    if isinstance(node, Neg):
        return [(-s, n) for s, n in _split_sum(node.arg)]
    return [(1, node)]


def parse_expansion_text(src: str, field: Field) -> PartialFractionExpansion:
    """Parse the text rendering of a partial fraction expansion.

    Each summand is either polynomial or ``numerator / factor^power`` with a
    single non-constant factor; factors are normalised to be monic.
    """
    K = field
    poly = Polynomial.zero(K)
    terms = {}
    order = []
    for sign, node in _split_sum(parse_ast(src, "t")):
        f = _evaluate(node, K)
        num = f.expand_num(K)
        if sign < 0:
            num = -num
        factor: Optional[Tuple[Polynomial, int]] = None
        for p, e, pos in f.den:
            if p.degree > 0:
                if factor is not None:
                    raise ParseError("a summand may have only one denominator factor", pos)
                factor = (p, e)
            else:
                num = num.scale(K.inv(K.pow(p[0], e)))
        if factor is None:
            poly = poly + num
            continue
        p, e = factor
        lc = p.lc
        p = p.monic()
        num = num.scale(K.inv(K.pow(lc, e)))
        q, num = divrem(num, p)
        if not q.is_zero():
            raise ParseError(f"improper numerator over {p.to_str(descending=True)}", 0)
        key = (p, e)
        if key not in terms:
            order.append(key)
            terms[key] = num
        else:
            terms[key] = terms[key] + num
    out = tuple(PFDTerm(p, e, terms[p, e]) for p, e in order if not terms[p, e].is_zero())
    return PartialFractionExpansion(poly, out)


__all__ = [
    "InputSpec",
    "ParseError",
    "parse_ast",
    "parse_expression",
    "parse_expansion_text",
    "parse_polynomial",
    "tokenize",
]
