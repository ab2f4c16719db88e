"""Elements of the free algebra T(V) and the bracket operations on them.

Words are tuples of 1-based letter indices.  A FreeElement is an immutable
sparse map word -> nonzero Cyclotomic.  Twisted products and brackets need
p_{u,v}, which only makes sense for homogeneous arguments, so every binary
operation splits its inputs into Z^n-homogeneous parts first.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .bichar import BraidingSpec
from .scalars import Cyclotomic, format_scalar

Word = tuple

BRACKET_KINDS = {
    "L": "L",
    "R": "R",
    "c": "braided",
    "braided": "braided",
    "minus": "minus",
    "-": "minus",
}

_ONE = Cyclotomic(1)


def canonical_kind(kind: str) -> str:
    try:
        return BRACKET_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown bracket kind {kind!r}; expected one of L, R, c, minus") from None


def content(w: Word) -> tuple:
    """Sorted letter multiset; two words share a Z^n degree iff contents agree."""
    return tuple(sorted(w))


def word_degree(n: int, w: Iterable[int]) -> tuple:
    d = [0] * n
    for a in w:
        d[a - 1] += 1
    return tuple(d)


class FreeElement:
    """Finite linear combination of words with Cyclotomic coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Cyclotomic):
                    c = Cyclotomic(c)
                if c:
                    clean[tuple(w)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "FreeElement":
        # terms already clean; skips validation in hot loops
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def word(cls, w: Sequence[int], coeff=1) -> "FreeElement":
        return cls({tuple(w): coeff})

    @classmethod
    def letter(cls, i: int) -> "FreeElement":
        return cls._raw({(i,): _ONE})

    @classmethod
    def scalar(cls, c) -> "FreeElement":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls._raw({})

    # -- access ----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coeff(self, w: Sequence[int]) -> Cyclotomic:
        return self._terms.get(tuple(w), Cyclotomic(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    def components(self) -> dict:
        """Homogeneous parts keyed by content (sorted letter tuple)."""
        parts = defaultdict(dict)
        for w, c in self._terms.items():
            parts[content(w)][w] = c
        return {k: FreeElement._raw(v) for k, v in parts.items()}

    def is_homogeneous(self) -> bool:
        return len({content(w) for w in self._terms}) <= 1

    def content(self) -> tuple:
        keys = {content(w) for w in self._terms}
        if len(keys) != 1:
            raise ValueError("element is not homogeneous")
        return keys.pop()

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FreeElement):
            other = FreeElement.scalar(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FreeElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return FreeElement._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            other = FreeElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "FreeElement":
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic(c)
        if not c:
            return FreeElement.zero()
        return FreeElement._raw({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return concat_mul(self, other)
        if isinstance(other, (int, Cyclotomic)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Cyclotomic)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, m: int):
        if not isinstance(m, int) or m < 0:
            return NotImplemented
        out = FreeElement.scalar(1)
        for _ in range(m):
            out = concat_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, FreeElement):
            return self._terms == other._terms
        if isinstance(other, (int, Cyclotomic)):
            return self == FreeElement.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self):
        """Terms ordered by length, then lexicographically."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    def to_string(self, conductor: int | None = None) -> str:
        return format_element(self, conductor)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"FreeElement({format_element(self)!r})"


def format_word(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        parts.append(f"x{w[i]}" if run == 1 else f"x{w[i]}^{run}")
        i = j
    return " ".join(parts)


def format_element(u: FreeElement, conductor: int | None = None) -> str:
    """Render ``u`` in the expression grammar, e.g. ``(1 + z^2) x1 x2 - 1/2 z^3 x2 x1``.

    With ``conductor`` given, coefficients are written in Q(zeta_N) so that
    ``z`` means zeta_N throughout.
    """
    if not u._terms:
        return "0"
    pieces = []
    for w, c in u.sorted_terms():
        if conductor is not None and c.conductor != conductor:
            c = c.in_field(conductor)
        nz = [k for k, a in enumerate(c._c) if a]
        negative = False
        if len(nz) == 1:
            if c._c[nz[0]] < 0:
                negative = True
                c = -c
            coeff = format_scalar(c)
            if coeff == "1" and w:
                body = format_word(w)
            elif w:
                body = f"{coeff} {format_word(w)}"
            else:
                body = coeff
        else:
            coeff = f"({format_scalar(c)})"
            body = f"{coeff} {format_word(w)}" if w else coeff
        pieces.append((negative, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- products ---------------------------------------------------------------


def concat_mul(u: FreeElement, v: FreeElement) -> FreeElement:
    out: dict = {}
    for a, ca in u._terms.items():
        for b, cb in v._terms.items():
            w = a + b
            c = ca * cb
            s = out.get(w)
            out[w] = c if s is None else s + c
    return FreeElement._raw({w: c for w, c in out.items() if c})


def _pair_exponent(spec: BraidingSpec, ca: tuple, cb: tuple) -> int:
    """Exponent of zeta in p_{u,v} for words of contents ca, cb."""
    ex = spec.exponents
    return sum(ex[a - 1][b - 1] for a in ca for b in cb) % spec.conductor


def bichar_words(spec: BraidingSpec, u: Iterable[int], v: Iterable[int]) -> Cyclotomic:
    """p_{u,v} for words (or contents) u, v."""
    return spec.zeta(_pair_exponent(spec, tuple(u), tuple(v)))


def _twisted(spec, u, v, swap: bool) -> FreeElement:
    total = FreeElement.zero()
    for ku, cu in u.components().items():
        for kv, cv in v.components().items():
            e = _pair_exponent(spec, kv, ku) if swap else _pair_exponent(spec, ku, kv)
            total = total + concat_mul(cu, cv).scale(spec.zeta(e))
    return total


def circ_L(spec: BraidingSpec, u: FreeElement, v: FreeElement) -> FreeElement:
    """u o_L v = p_{v,u} uv on homogeneous parts."""
    return _twisted(spec, u, v, swap=True)


def circ_R(spec: BraidingSpec, u: FreeElement, v: FreeElement) -> FreeElement:
    """u o_R v = p_{u,v} uv on homogeneous parts."""
    return _twisted(spec, u, v, swap=False)


def _bracket_homogeneous(spec, kind, ku, cu, kv, cv) -> FreeElement:
    uv = concat_mul(cu, cv)
    vu = concat_mul(cv, cu)
    if kind == "minus":
        return uv - vu
    p_uv = spec.zeta(_pair_exponent(spec, ku, kv))
    p_vu = spec.zeta(_pair_exponent(spec, kv, ku))
    if kind == "L":
        return uv.scale(p_vu) - vu.scale(p_uv)
    if kind == "R":
        return uv.scale(p_uv) - vu.scale(p_vu)
    # braided: vu - p_{v,u} uv
    return vu - uv.scale(p_vu)


def bracket(spec: BraidingSpec, kind: str, u: FreeElement, v: FreeElement) -> FreeElement:
    """[u, v] of the given kind, extended bilinearly over homogeneous parts.

    L: p_{v,u} uv - p_{u,v} vu      R: p_{u,v} uv - p_{v,u} vu
    minus: uv - vu                  braided (c): vu - p_{v,u} uv
    """
    kind = canonical_kind(kind)
    total = FreeElement.zero()
    uc = u.components()
    vc = v.components()
    for ku, cu in uc.items():
        for kv, cv in vc.items():
            total = total + _bracket_homogeneous(spec, kind, ku, cu, kv, cv)
    return total


def braided_commutator(spec: BraidingSpec, u: FreeElement, v: FreeElement) -> FreeElement:
    """uv - p_{u,v} vu, the commutator used to build super-letters."""
    total = FreeElement.zero()
    for ku, cu in u.components().items():
        for kv, cv in v.components().items():
            p_uv = spec.zeta(_pair_exponent(spec, ku, kv))
            total = total + concat_mul(cu, cv) - concat_mul(cv, cu).scale(p_uv)
    return total


def ad_power(spec: BraidingSpec, kind: str, side: str, u: FreeElement, v: FreeElement, m: int) -> FreeElement:
    """l_u^m[v] = [u, l_u^{m-1}[v]] (side 'left') or r_u^m[v] = [r_u^{m-1}[v], u] ('right')."""
    if m < 0:
        raise ValueError("ad_power needs m >= 0")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    out = v
    for _ in range(m):
        out = bracket(spec, kind, u, out) if side == "left" else bracket(spec, kind, out, u)
    return out


def nested_bracket(spec: BraidingSpec, kind: str, us: Sequence[FreeElement]) -> FreeElement:
    """[u_1, [u_2, ..., [u_{m-1}, u_m]...]]."""
    if not us:
        raise ValueError("nested_bracket needs at least one argument")
    out = us[-1]
    for u in reversed(us[:-1]):
        out = bracket(spec, kind, u, out)
    return out


# -- dual letters -----------------------------------------------------------


def skew_derivation(spec: BraidingSpec, i: int, u: FreeElement) -> FreeElement:
    """The operator d_i with d_i(x_k w) = delta_ik w + p_ik^{-1} x_k d_i(w)."""
    row = spec.exponents[i - 1]
    N = spec.conductor
    out: dict = {}
    for w, c in u._terms.items():
        e = 0
        for t, a in enumerate(w):
            if a == i:
                r = w[:t] + w[t + 1:]
                term = c * spec.zeta(-e % N) if e else c
                s = out.get(r)
                out[r] = term if s is None else s + term
            e += row[a - 1]
    return FreeElement._raw({w: c for w, c in out.items() if c})


def pair(spec: BraidingSpec, y_word: Sequence[int], u: FreeElement) -> FreeElement:
    """<y_{a1} ... y_{ak}, u>; the rightmost dual letter acts first."""
    out = u
    for a in reversed(tuple(y_word)):
        out = skew_derivation(spec, a, out)
    return out


def letters(n: int) -> list:
    return [FreeElement.letter(i) for i in range(1, n + 1)]


def monomial(w: Sequence[int], coeff=1) -> FreeElement:
    return FreeElement.word(tuple(w), coeff)
