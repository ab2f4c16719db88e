"""Graded closures of V inside B(V) under one bracket operation.

Slices are kept per Z^n degree as echelon bases of coordinate vectors over
the standard words of that block.

For the L, R and minus brackets the operation is a Lie bracket, so the
generated algebra is spanned by right-nested brackets [x_i, [x_j, ...]] and
slice d equals the span of [x_i, s] over s in slice d-1.  A single zero slice
then forces every later slice to vanish.  The braided operation satisfies no
Jacobi identity; its closure is built from all ordered pairs of earlier
slices, and is complete once the degrees t+1..2t are empty, t being the last
nonempty degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bichar import BraidingSpec
from .free_algebra import FreeElement, bracket, canonical_kind
from .linalg import Echelon, same_span
from .nichols import nichols_algebra

LIE_KINDS = ("L", "R", "minus")


@dataclass
class GradedSubspace:
    fingerprint: str
    kind: str
    cap: int
    slices: dict = field(default_factory=dict)  # content -> Echelon
    stabilized: bool = False
    stabilized_at: int | None = None
    nichols_exhausted: bool = False
    spec: BraidingSpec | None = None

    def slice_contents(self, d: int) -> list:
        return sorted(c for c in self.slices if len(c) == d and self.slices[c].rank)

    def degree_dim(self, d: int) -> int:
        return sum(e.rank for c, e in self.slices.items() if len(c) == d)

    def basis(self, d: int) -> list:
        """Basis elements of slice d as FreeElements in standard words."""
        alg = nichols_algebra(self.spec)
        out = []
        for c in self.slice_contents(d):
            for row in self.slices[c].rows:
                out.append(alg.lift(c, row))
        return out


def _add(gs: GradedSubspace, alg, u: FreeElement) -> None:
    for c, vec in alg.coordinates(u).items():
        ech = gs.slices.get(c)
        if ech is None:
            ech = gs.slices[c] = Echelon()
        ech.add(vec)


def _elements(gs: GradedSubspace, alg, d: int) -> list:
    out = []
    for c in gs.slice_contents(d):
        for row in gs.slices[c].rows:
            out.append(alg.lift(c, row))
    return out


def generate(spec: BraidingSpec, kind: str, D: int, method: str = "auto") -> GradedSubspace:
    """Closure of V under ``kind`` in degrees 1..D.

    ``method='pairs'`` forces pair enumeration for every kind; it serves to
    cross-check the nested shortcut used for Lie brackets.
    """
    kind = canonical_kind(kind)
    spec.check_degree(D)
    alg = nichols_algebra(spec)
    gs = GradedSubspace(spec.fingerprint, kind, D, spec=spec)
    letters = [FreeElement.letter(i) for i in range(1, spec.n + 1)]
    for x in letters:
        _add(gs, alg, x)
    nested = kind in LIE_KINDS and method == "auto"
    last_nonzero = 1
    for d in range(2, D + 1):
        if alg.degree_dim(d) == 0:
            gs.nichols_exhausted = True
            gs.stabilized, gs.stabilized_at = True, d - 1
            break
        if nested:
            for s in _elements(gs, alg, d - 1):
                for x in letters:
                    _add(gs, alg, bracket(spec, kind, x, s))
        else:
            for a in range(1, d):
                left = _elements(gs, alg, a)
                right = _elements(gs, alg, d - a)
                for u in left:
                    for v in right:
                        _add(gs, alg, bracket(spec, kind, u, v))
        if gs.degree_dim(d):
            last_nonzero = d
        elif nested:
            gs.stabilized, gs.stabilized_at = True, d - 1
            break
        elif d >= 2 * last_nonzero:
            gs.stabilized, gs.stabilized_at = True, last_nonzero
            break
    if not gs.nichols_exhausted and D + 1 <= spec.cap and alg.degree_dim(D + 1) == 0:
        gs.nichols_exhausted = True
    return gs


def dims(gs: GradedSubspace) -> tuple:
    """(dims of slices 1..cap, total)."""
    per = [gs.degree_dim(d) for d in range(1, gs.cap + 1)]
    return per, sum(per)


def contains(gs: GradedSubspace, u: FreeElement) -> bool:
    """Membership of the image of u, degree by degree."""
    alg = nichols_algebra(gs.spec)
    for c, vec in alg.coordinates(u).items():
        if not c or len(c) > gs.cap:
            return False
        ech = gs.slices.get(c)
        if ech is None or not ech.contains(vec):
            return False
    return True


def span_of(spec: BraidingSpec, elements) -> dict:
    """content -> Echelon for the span of the images of ``elements``."""
    alg = nichols_algebra(spec)
    out: dict = {}
    for u in elements:
        for c, vec in alg.coordinates(u).items():
            out.setdefault(c, Echelon()).add(vec)
    return out


def slices_equal(a: dict, b: dict, d: int | None = None) -> bool:
    keys = {c for c in a if d is None or len(c) == d} | {c for c in b if d is None or len(c) == d}
    for c in keys:
        ra = a[c].rows if c in a else []
        rb = b[c].rows if c in b else []
        if not same_span(ra, rb):
            return False
    return True


def equality_probe(spec: BraidingSpec, kind1: str, kind2: str, D: int) -> dict:
    """Degree-by-degree comparison of two closures (evidence only)."""
    g1 = generate(spec, kind1, D)
    g2 = generate(spec, kind2, D)
    per = []
    first = None
    for d in range(1, D + 1):
        eq = slices_equal(g1.slices, g2.slices, d)
        per.append({"degree": d, "equal": eq, "dims": [g1.degree_dim(d), g2.degree_dim(d)]})
        if not eq and first is None:
            first = d
    return {
        "kinds": [canonical_kind(kind1), canonical_kind(kind2)],
        "max_degree": D,
        "per_degree": per,
        "first_disagreement": first,
        "agree_to_cap": first is None,
    }
