"""Element expressions: a small surface syntax for elements of T(V).

    sum     := ['+'|'-'] product (('+'|'-') product)*
    product := power (['*'] power)*            juxtaposition multiplies
    power   := atom ['^' ['-'] INT]
    atom    := x<k> | z | INT ['/' INT] | '(' sum ')'
             | '[' sum ',' sum ']' '_' (L|R|c|-|minus)
             | '<' y<k> ... ',' sum '>'

``z`` is the chosen primitive N-th root of unity of the braiding.  Negative
powers are allowed on scalars only.  The printed form of an element (see
``FreeElement.to_string``) is itself valid input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .bichar import BraidingSpec
from .free_algebra import FreeElement, bracket, canonical_kind, pair
from .scalars import Cyclotomic


class ExprError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:(?P<x>x(?P<xi>\d+))|(?P<y>y(?P<yi>\d+))|(?P<z>z)|(?P<int>\d+)"
    r"|(?P<kind>_(?:minus|L|R|c|-))|(?P<op>[-+*/^()\[\],<>]))"
)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list:
    toks = []
    i = 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            raise ExprError(f"unexpected character {src[i]!r}", i)
        for name in ("x", "y", "z", "int", "kind", "op"):
            if m.group(name) is not None:
                toks.append(Tok(name, m.group(name), m.start(name)))
                break
        i = m.end()
    toks.append(Tok("end", "", len(src)))
    return toks


# -- syntax tree ----------------------------------------------------------------


@dataclass(frozen=True)
class Letter:
    index: int


@dataclass(frozen=True)
class Zeta:
    pass


@dataclass(frozen=True)
class Rational:
    value: Fraction


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node)


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Bracket:
    kind: str
    left: object
    right: object


@dataclass(frozen=True)
class Pairing:
    ys: tuple
    arg: object


_STARTS_FACTOR = {"x", "z", "int"}
_OPEN = {"(", "[", "<"}


class _Parser:
    def __init__(self, src: str, n: int | None):
        self.toks = tokenize(src)
        self.k = 0
        self.n = n

    @property
    def tok(self) -> Tok:
        return self.toks[self.k]

    def take(self) -> Tok:
        t = self.tok
        self.k += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.tok
        if t.kind != "op" or t.text != text:
            found = t.text or "end of input"
            raise ExprError(f"expected {text!r}, found {found!r}", t.pos)
        return self.take()

    def is_op(self, *texts) -> bool:
        return self.tok.kind == "op" and self.tok.text in texts

    def index(self, t: Tok, digits: str) -> int:
        i = int(digits)
        if i < 1 or (self.n is not None and i > self.n):
            bound = f"1..{self.n}" if self.n is not None else ">= 1"
            raise ExprError(f"letter index {i} out of range {bound}", t.pos)
        return i

    def parse(self):
        node = self.sum()
        if self.tok.kind != "end":
            raise ExprError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def sum(self):
        terms = []
        sign = 1
        if self.is_op("+", "-"):
            sign = -1 if self.take().text == "-" else 1
        terms.append((sign, self.product()))
        while self.is_op("+", "-"):
            sign = -1 if self.take().text == "-" else 1
            terms.append((sign, self.product()))
        return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else Sum(tuple(terms))

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in _STARTS_FACTOR or (t.kind == "op" and t.text in _OPEN)

    def product(self):
        factors = [self.power()]
        while True:
            if self.is_op("*"):
                self.take()
                factors.append(self.power())
            elif self._starts_factor():
                factors.append(self.power())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def power(self):
        base = self.atom()
        if self.is_op("^"):
            self.take()
            neg = False
            if self.is_op("-"):
                self.take()
                neg = True
            t = self.tok
            if t.kind != "int":
                raise ExprError("expected an integer exponent", t.pos)
            self.take()
            e = int(t.text)
            return Power(base, -e if neg else e)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "x":
            self.take()
            return Letter(self.index(t, t.text[1:]))
        if t.kind == "z":
            self.take()
            return Zeta()
        if t.kind == "int":
            self.take()
            value = Fraction(int(t.text))
            if self.is_op("/"):
                self.take()
                d = self.tok
                if d.kind != "int":
                    raise ExprError("expected a denominator", d.pos)
                self.take()
                if int(d.text) == 0:
                    raise ExprError("zero denominator", d.pos)
                value /= int(d.text)
            return Rational(value)
        if self.is_op("("):
            self.take()
            node = self.sum()
            self.expect(")")
            return node
        if self.is_op("["):
            self.take()
            left = self.sum()
            self.expect(",")
            right = self.sum()
            self.expect("]")
            k = self.tok
            if k.kind != "kind":
                raise ExprError("expected a bracket subscript _L, _R, _c or _-", k.pos)
            self.take()
            return Bracket(canonical_kind(k.text[1:]), left, right)
        if self.is_op("<"):
            self.take()
            ys = []
            while self.tok.kind == "y":
                y = self.take()
                ys.append(self.index(y, y.text[1:]))
            if not ys:
                raise ExprError("expected y<k> letters", self.tok.pos)
            self.expect(",")
            arg = self.sum()
            self.expect(">")
            return Pairing(tuple(ys), arg)
        found = t.text or "end of input"
        raise ExprError(f"unexpected {found!r}", t.pos)


def parse_expr(src: str, n: int | None = None):
    """Syntax tree of ``src``; letter indices are checked against ``n`` when given."""
    return _Parser(src, n).parse()


def _scalar_of(u: FreeElement):
    if not u:
        return Cyclotomic(0)
    if set(u.words()) == {()}:
        return u.coeff(())
    return None


def evaluate(node, spec: BraidingSpec) -> FreeElement:
    if isinstance(node, Letter):
        return FreeElement.letter(node.index)
    if isinstance(node, Zeta):
        return FreeElement.scalar(spec.zeta(1))
    if isinstance(node, Rational):
        return FreeElement.scalar(Cyclotomic(node.value))
    if isinstance(node, Sum):
        out = FreeElement.zero()
        for sign, t in node.terms:
            v = evaluate(t, spec)
            out = out + v if sign > 0 else out - v
        return out
    if isinstance(node, Product):
        out = evaluate(node.factors[0], spec)
        for f in node.factors[1:]:
            out = out * evaluate(f, spec)
        return out
    if isinstance(node, Power):
        base = evaluate(node.base, spec)
        if node.exponent >= 0:
            return base ** node.exponent
        c = _scalar_of(base)
        if c is None:
            raise ValueError("negative powers are only defined for scalars")
        if not c:
            raise ZeroDivisionError("negative power of zero")
        return FreeElement.scalar(c ** node.exponent)
    if isinstance(node, Bracket):
        return bracket(spec, node.kind, evaluate(node.left, spec), evaluate(node.right, spec))
    if isinstance(node, Pairing):
        return pair(spec, list(node.ys), evaluate(node.arg, spec))
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(src: str, spec: BraidingSpec) -> FreeElement:
    """Parse and evaluate ``src`` in T(V) for the given braiding."""
    return evaluate(parse_expr(src, spec.n), spec)
