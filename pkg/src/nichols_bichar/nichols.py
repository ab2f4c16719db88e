"""The Nichols algebra B(V) of a diagonal braiding.

Two independent routes decide whether an element vanishes in B(V):

* the quantum symmetrizer, assembled literally from inverse braidings acting
  on neighbouring tensor legs (``apply_symmetrizer`` / ``is_zero_in_nichols``);
* the skew derivations: a homogeneous element of degree >= 2 is zero iff every
  d_i of it is zero (``derivation_zero_test``).

Bases and coordinates come from a block computation per Z^n degree.  Since
S_m = (id (x) S_{m-1}) S_{1,m-1} and S_{1,m-1}(w) = sum_i x_i (x) d_i(w), the
map w -> (d_i w mod the ideal)_i has the same kernel as S_m.  Each word is
embedded through the already computed coordinates of its derivatives; a sweep
in decreasing word order then yields the standard words and the coordinates
of every word of the block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from sympy.utilities.iterables import multiset_permutations

from .bichar import BraidingSpec
from .free_algebra import FreeElement, content, skew_derivation
from .linalg import Echelon, axpy, rank_of
from .scalars import Cyclotomic

_ONE = Cyclotomic(1)


# -- braiding on tensor legs ------------------------------------------------


class LegOperator:
    """A linear operator on V^{(x)m} acting word by word."""

    def __init__(self, m: int, action, name: str = ""):
        self.m = m
        self._action = action
        self.name = name

    def on_word(self, w: tuple) -> FreeElement:
        if len(w) != self.m:
            raise ValueError(f"{self.name} acts on words of length {self.m}")
        return self._action(w)

    def apply(self, u: FreeElement) -> FreeElement:
        out: dict = {}
        for w, c in u.items():
            for r, d in self.on_word(w).items():
                s = out.get(r)
                t = c * d
                out[r] = t if s is None else s + t
        return FreeElement({r: c for r, c in out.items() if c})

    def matrix(self, words: Sequence[tuple]) -> dict:
        """Sparse columns {word: {image word: coefficient}} on the given words."""
        return {w: self.on_word(w).terms for w in words}

    def compose(self, other: "LegOperator") -> "LegOperator":
        """self after other."""
        return LegOperator(self.m, lambda w: self.apply(other.on_word(w)), f"{self.name}*{other.name}")


def braiding_on_factors(spec: BraidingSpec, m: int, j: int) -> LegOperator:
    """C on legs (j, j+1) of V^{(x)m}: x_a (x) x_b -> q_ab x_b (x) x_a."""
    if not 1 <= j < m:
        raise ValueError("need 1 <= j < m")

    def act(w):
        a, b = w[j - 1], w[j]
        return FreeElement({w[: j - 1] + (b, a) + w[j + 1:]: spec.p(a, b)})

    return LegOperator(m, act, f"C{j}{j + 1}")


def inverse_braiding_on_factors(spec: BraidingSpec, m: int, j: int) -> LegOperator:
    """C^{-1} on legs (j, j+1): x_a (x) x_b -> q_ba^{-1} x_b (x) x_a."""
    if not 1 <= j < m:
        raise ValueError("need 1 <= j < m")

    def act(w):
        a, b = w[j - 1], w[j]
        return FreeElement({w[: j - 1] + (b, a) + w[j + 1:]: spec.p(b, a).inverse()})

    return LegOperator(m, act, f"C{j}{j + 1}^-1")


def _s1j_on_tail(spec: BraidingSpec, j: int) -> LegOperator:
    """S_{1,j} = id + C12^-1 + C12^-1 C23^-1 + ... on j+1 legs."""
    k = j + 1
    inv = [inverse_braiding_on_factors(spec, k, t) for t in range(1, k)]
    ident = LegOperator(k, lambda w: FreeElement._raw({w: _ONE}), "id")
    terms = [ident]
    chain = None
    for op in inv:
        chain = op if chain is None else chain.compose(op)
        terms.append(chain)

    def act(w):
        total = FreeElement.zero()
        for t in terms:
            total = total + t.on_word(w)
        return total

    return LegOperator(k, act, f"S1,{j}")


def _embed_tail(op: LegOperator, m: int) -> LegOperator:
    """id^{(x) m-k} (x) op."""
    k = op.m
    cut = m - k

    def act(w):
        head = w[:cut]
        return FreeElement._raw({head + r: c for r, c in op.on_word(w[cut:]).items()})

    return LegOperator(m, act, f"id^{cut}(x){op.name}")


@lru_cache(maxsize=64)
def _symmetrizer_factors(spec: BraidingSpec, m: int) -> tuple:
    # S_m = T_1 T_2 ... T_{m-1} with T_j = id^{(x) m-j-1} (x) S_{1,j};
    # as an operator product T_{m-1} acts first
    return tuple(_embed_tail(_s1j_on_tail(spec, j), m) for j in range(1, m))


def apply_symmetrizer(spec: BraidingSpec, u: FreeElement) -> FreeElement:
    """S_m applied to each degree-m component of u."""
    out = FreeElement.zero()
    by_len: dict = {}
    for w, c in u.items():
        by_len.setdefault(len(w), {})[w] = c
    for m, terms in by_len.items():
        part = FreeElement(terms)
        if m >= 2:
            spec.check_degree(m)
            for op in reversed(_symmetrizer_factors(spec, m)):
                part = op.apply(part)
        out = out + part
    return out


@dataclass(frozen=True)
class SymmetrizerMatrix:
    degree: int
    words: tuple
    columns: dict  # word -> {image word: coefficient}

    def rank(self) -> int:
        index = {w: k for k, w in enumerate(self.words)}
        return rank_of({index[r]: c for r, c in col.items()} for col in self.columns.values())


def words_of_content(c: Sequence[int]) -> list:
    """All words with the given letter multiset, in decreasing order."""
    if not c:
        return [()]
    ws = [tuple(p) for p in multiset_permutations(sorted(c))]
    ws.reverse()
    return ws


def build_symmetrizer(spec: BraidingSpec, m: int, block: Sequence[int] | None = None) -> SymmetrizerMatrix:
    """Matrix of S_m on all n^m words, or on the words of one Z^n degree."""
    spec.check_degree(m)
    if block is not None:
        if len(block) != m:
            raise ValueError("block content must have m letters")
        words = words_of_content(block)
    else:
        words = []
        for c in combinations_with_replacement(range(1, spec.n + 1), m):
            words.extend(words_of_content(c))
        words.sort(reverse=True)
    if m <= 1:
        cols = {w: {w: _ONE} for w in words}
    else:
        factors = _symmetrizer_factors(spec, m)
        cols = {}
        for w in words:
            part = FreeElement._raw({w: _ONE})
            for op in reversed(factors):
                part = op.apply(part)
            cols[w] = part.terms
    return SymmetrizerMatrix(m, tuple(words), cols)


def is_zero_in_nichols(spec: BraidingSpec, u: FreeElement) -> bool:
    """Kernel membership for the symmetrizers, component by component."""
    return apply_symmetrizer(spec, u).is_zero()


# -- derivation oracle ------------------------------------------------------


def derivation_zero_test(spec: BraidingSpec, u: FreeElement) -> bool:
    """Zero test in B(V) through iterated skew derivations only."""
    memo = _derivation_memo(spec)
    return all(_dzero(spec, comp, memo) for comp in u.components().values())


@lru_cache(maxsize=32)
def _derivation_memo(spec: BraidingSpec) -> dict:
    return {}


def _dzero(spec: BraidingSpec, u: FreeElement, memo: dict) -> bool:
    if u.is_zero():
        return True
    degs = u.degrees()
    if len(degs) == 1 and min(degs) <= 1:
        return False
    hit = memo.get(u)
    if hit is not None:
        return hit
    letters = {a for w in u.words() for a in w}
    result = all(_dzero(spec, skew_derivation(spec, i, u), memo) for i in sorted(letters))
    memo[u] = result
    return result


# -- block computation of bases and coordinates -----------------------------


@dataclass
class Block:
    content: tuple
    basis: list  # standard words, decreasing
    coords: dict  # word -> {basis index: coefficient}

    @property
    def dim(self) -> int:
        return len(self.basis)


class NicholsAlgebra:
    """Cached per-degree data of B(V) for one braiding."""

    def __init__(self, spec: BraidingSpec):
        self.spec = spec
        self.n = spec.n
        self._blocks: dict = {(): Block((), [()], {(): {0: _ONE}})}
        self._degree_dim: dict = {0: 1}

    def block(self, c: Sequence[int]) -> Block:
        c = tuple(sorted(c))
        blk = self._blocks.get(c)
        if blk is None:
            blk = self._build(c)
            self._blocks[c] = blk
        return blk

    def _build(self, c: tuple) -> Block:
        spec = self.spec
        distinct = sorted(set(c))
        subs = {}
        offsets = {}
        width = 0
        for a in distinct:
            rest = list(c)
            rest.remove(a)
            sub = self.block(tuple(rest))
            subs[a] = sub
            offsets[a] = width
            width += sub.dim
        words = words_of_content(c)
        if width == 0:
            return Block(c, [], {w: {} for w in words})
        ex = spec.exponents
        N = spec.conductor
        ech = Echelon(track=True)
        basis: list = []
        coords: dict = {}
        pending = []
        for w in words:
            vec: dict = {}
            prefix = [0] * (self.n + 1)  # running exponent sums per letter
            for t, a in enumerate(w):
                e = prefix[a] % N
                sub_vec = subs[a].coords[w[:t] + w[t + 1:]]
                if sub_vec:
                    coef = spec.zeta(-e) if e else _ONE
                    off = offsets[a]
                    axpy(vec, coef, {off + k: v for k, v in sub_vec.items()})
                for b in distinct:
                    prefix[b] += ex[b - 1][a - 1]
            if ech.add(vec, label=len(basis)):
                coords[w] = {len(basis): _ONE}
                basis.append(w)
            else:
                pending.append((w, vec))
        for w, vec in pending:
            coords[w] = ech.express(vec)
        return Block(c, basis, coords)

    def degree_dim(self, d: int) -> int:
        if d not in self._degree_dim:
            if d > 0 and self.degree_dim(d - 1) == 0:
                self._degree_dim[d] = 0
            else:
                self._degree_dim[d] = sum(
                    self.block(c).dim for c in combinations_with_replacement(range(1, self.n + 1), d)
                )
        return self._degree_dim[d]

    def block_dim(self, c: Sequence[int]) -> int:
        d = len(c)
        if d > 0 and self.degree_dim(d - 1) == 0:
            return 0
        return self.block(c).dim

    # -- elements --------------------------------------------------------
    def coordinates(self, u: FreeElement) -> dict:
        """{content: sparse coordinate vector} over the standard words, zero parts dropped."""
        out = {}
        for c, part in u.components().items():
            d = len(c)
            if d > 0 and self._vanishing_from(d):
                continue
            blk = self.block(c)
            vec: dict = {}
            for w, coef in part.items():
                axpy(vec, coef, blk.coords[w])
            if vec:
                out[c] = vec
        return out

    def _vanishing_from(self, d: int) -> bool:
        # B is generated in degree one, so a zero degree kills all higher ones;
        # only consult degrees that are already known
        return any(k < d and v == 0 for k, v in self._degree_dim.items())

    def lift(self, c: tuple, vec: dict) -> FreeElement:
        blk = self.block(c)
        return FreeElement({blk.basis[k]: v for k, v in vec.items()})

    def normal_form(self, u: FreeElement) -> FreeElement:
        """The image of u written in standard words."""
        out = FreeElement.zero()
        for c, vec in self.coordinates(u).items():
            out = out + self.lift(c, vec)
        return out

    def is_zero(self, u: FreeElement) -> bool:
        return not self.coordinates(u)

    def equal(self, u: FreeElement, v: FreeElement) -> bool:
        return self.is_zero(u - v)


@lru_cache(maxsize=64)
def _algebra(n: int, conductor: int, exponents: tuple) -> NicholsAlgebra:
    return NicholsAlgebra(BraidingSpec(n, conductor, exponents, cap=10**6))


def nichols_algebra(spec: BraidingSpec) -> NicholsAlgebra:
    """Shared cache of block data; degree caps are enforced by the callers."""
    return _algebra(spec.n, spec.conductor, spec.exponents)


def _check_element_cap(spec: BraidingSpec, u: FreeElement) -> None:
    degs = u.degrees()
    if degs:
        spec.check_degree(max(degs))


# -- public operations ------------------------------------------------------


def nichols_dims(spec: BraidingSpec, D: int) -> list:
    """[dim B_0, dim B_1, ..., dim B_D]."""
    if D < 0:
        raise ValueError("D must be nonnegative")
    spec.check_degree(D)
    alg = nichols_algebra(spec)
    return [alg.degree_dim(d) for d in range(D + 1)]


@dataclass(frozen=True)
class DegreeBasis:
    degree: int
    basis_words: tuple
    spec: BraidingSpec

    def coordinates(self, w: Sequence[int]) -> dict:
        """Coordinates of a degree-m word over ``basis_words``."""
        w = tuple(w)
        if len(w) != self.degree:
            raise ValueError("word has the wrong degree")
        alg = nichols_algebra(self.spec)
        blk = alg.block(content(w))
        index = {b: k for k, b in enumerate(self.basis_words)}
        return {index[blk.basis[k]]: v for k, v in blk.coords[w].items()}


def degree_basis(spec: BraidingSpec, m: int) -> DegreeBasis:
    spec.check_degree(m)
    alg = nichols_algebra(spec)
    words = []
    if m == 0 or alg.degree_dim(m) > 0:
        for c in combinations_with_replacement(range(1, spec.n + 1), m):
            words.extend(alg.block(c).basis)
    words.sort(reverse=True)
    return DegreeBasis(m, tuple(words), spec)


def coordinates(spec: BraidingSpec, u: FreeElement, m: int | None = None) -> dict:
    """Coordinates of the image of u, keyed by standard word."""
    _check_element_cap(spec, u)
    if m is not None and any(len(w) != m for w in u.words()):
        raise ValueError(f"element is not homogeneous of degree {m}")
    alg = nichols_algebra(spec)
    out = {}
    for c, vec in alg.coordinates(u).items():
        blk = alg.block(c)
        for k, v in vec.items():
            out[blk.basis[k]] = v
    return out


def normal_form(spec: BraidingSpec, u: FreeElement) -> FreeElement:
    _check_element_cap(spec, u)
    return nichols_algebra(spec).normal_form(u)


def is_zero(spec: BraidingSpec, u: FreeElement) -> bool:
    """Zero test through the block coordinates (the fast route)."""
    _check_element_cap(spec, u)
    return nichols_algebra(spec).is_zero(u)
