"""Incremental Gaussian elimination over cyclotomic fields.

Vectors are sparse dicts {column: Cyclotomic}.  Rows are stored with a unit
pivot and are inserted in the order they arrive, each already reduced against
all earlier rows; reducing a new vector by the rows in insertion order
therefore clears every pivot.
"""

from __future__ import annotations

from .scalars import Cyclotomic

_ONE = Cyclotomic(1)


def axpy(y: dict, a: Cyclotomic, x: dict) -> None:
    """y += a*x in place, dropping zeros."""
    for k, v in x.items():
        s = y.get(k)
        t = a * v
        s = t if s is None else s + t
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Row echelon basis of a growing subspace.

    With ``track=True`` each row remembers how it was built from the labelled
    input vectors, so ``express`` can write any member of the span in terms of
    the accepted inputs.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots: list = []
        self.rows: list = []
        self.combos: list = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict):
        v = dict(v)
        combo = {} if self.track else None
        for idx, (p, row) in enumerate(zip(self.pivots, self.rows)):
            c = v.get(p)
            if c is not None:
                axpy(v, -c, row)
                if combo is not None:
                    axpy(combo, c, self.combos[idx])
        return v, combo

    def contains(self, v: dict) -> bool:
        return not self._reduce(v)[0]

    def express(self, v: dict) -> dict | None:
        """Coefficients on accepted labels, or None if v is outside the span."""
        res, combo = self._reduce(v)
        if res:
            return None
        return combo

    def add(self, v: dict, label=None) -> bool:
        """Insert v; returns True iff it enlarged the span."""
        res, combo = self._reduce(v)
        if not res:
            return False
        p = min(res)
        inv = res[p].inverse()
        row = {k: c * inv for k, c in res.items()}
        self.pivots.append(p)
        self.rows.append(row)
        if self.track:
            # row = (v - sum c_r row_r) / pivot, and v is the new label
            new_combo = {k: -c * inv for k, c in combo.items()}
            new_combo[label] = new_combo.get(label, Cyclotomic(0)) + inv
            self.combos.append({k: c for k, c in new_combo.items() if c})
        return True


def rank_of(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def same_span(a, b) -> bool:
    """Whether two finite lists of sparse vectors span the same subspace."""
    ea, eb = Echelon(), Echelon()
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(r) for r in eb.rows)
