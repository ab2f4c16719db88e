"""Lyndon words, Shirshov factorization, standard words and root degrees.

Word order everywhere is plain lexicographic on letter indices with
x_1 < x_2 < ... and a proper prefix smaller than the word; Python tuple
comparison implements exactly this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bichar import BraidingSpec
from .free_algebra import FreeElement, bracket, braided_commutator, word_degree
from .nichols import degree_basis

Word = tuple


def is_lyndon(w) -> bool:
    """Strictly smaller than each of its proper rotations."""
    w = tuple(w)
    if not w:
        return False
    return all(w < w[k:] + w[:k] for k in range(1, len(w)))


def shirshov_decomposition(w) -> tuple:
    """(v, u) with w = vu, both Lyndon and v as short as possible."""
    w = tuple(w)
    if len(w) < 2 or not is_lyndon(w):
        raise ValueError(f"Shirshov decomposition needs a Lyndon word of length >= 2, got {w}")
    for k in range(1, len(w)):
        if is_lyndon(w[:k]) and is_lyndon(w[k:]):
            return w[:k], w[k:]
    raise AssertionError("a Lyndon word always has a standard factorization")  # pragma: no cover


def lyndon_factorization(w) -> list:
    """Non-increasing factorization into Lyndon words (Duval's algorithm)."""
    w = tuple(w)
    out = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


def superletter(spec: BraidingSpec, w) -> FreeElement:
    """[w] built from the Shirshov factorization with uv - p_{u,v} vu."""
    return _superletter(spec, tuple(w))


@lru_cache(maxsize=4096)
def _superletter(spec, w):
    if len(w) == 1:
        return FreeElement.letter(w[0])
    v, u = shirshov_decomposition(w)
    return braided_commutator(spec, _superletter(spec, v), _superletter(spec, u))


def bracketed_lyndon(spec: BraidingSpec, kind: str, w) -> FreeElement:
    """[w]_kind: the kind-bracket of the Shirshov factors, recursively."""
    w = tuple(w)
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    if len(w) == 1:
        return FreeElement.letter(w[0])
    v, u = shirshov_decomposition(w)
    return bracket(spec, kind, bracketed_lyndon(spec, kind, v), bracketed_lyndon(spec, kind, u))


def lyndon_words(n: int, m: int) -> list:
    """All Lyndon words of length m over n letters, increasing (Duval's generator)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == m:
            out.append(tuple(a + 1 for a in w))
        k = len(w)
        while len(w) < m:
            w.append(w[len(w) - k])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def standard_words(spec: BraidingSpec, m: int) -> list:
    return list(degree_basis(spec, m).basis_words)


def hard_superletters(spec: BraidingSpec, D: int) -> list:
    """Lyndon standard words of degree 1..D, by degree then increasing."""
    spec.check_degree(D)
    out = []
    for m in range(1, D + 1):
        out.extend(sorted(w for w in standard_words(spec, m) if is_lyndon(w)))
    return out


@dataclass
class RootSystemReport:
    positive_roots: list
    complete_up_to: int
    saturated: bool
    multiplicities: dict = field(default_factory=dict)
    words: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "positive_roots": [list(r) for r in self.positive_roots],
            "multiplicities": {",".join(map(str, r)): k for r, k in sorted(self.multiplicities.items())},
            "complete_up_to": self.complete_up_to,
            "saturated": self.saturated,
        }


def root_system(spec: BraidingSpec, D: int) -> RootSystemReport:
    """Degrees of hard super-letters up to D.

    ``saturated`` only says that no new root appeared in the top ceil(D/2)
    degrees; it is evidence, never a proof of finiteness.
    """
    words = hard_superletters(spec, D)
    mult: dict = {}
    by_root: dict = {}
    for w in words:
        r = word_degree(spec.n, w)
        mult[r] = mult.get(r, 0) + 1
        by_root.setdefault(r, []).append(w)
    roots = sorted(mult, key=lambda r: (sum(r), tuple(-x for x in r)))
    top = D - (D + 1) // 2
    saturated = not any(sum(r) > top for r in roots)
    return RootSystemReport(roots, D, saturated, mult, by_root)
