"""Diagonal braidings given by exponent matrices over a root of unity.

A spec stores integers k_ij with p_ij = zeta_N^k_ij.  Degrees are integer
vectors of length n; letters x_i have degree e_i and dual letters y_i have
degree -e_i, so one evaluator covers both.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .scalars import Cyclotomic, root_of_unity

DEFAULT_CAP = 8


class CapExceeded(ValueError):
    """Raised when a computation would go past the configured degree cap."""


@dataclass(frozen=True)
class BraidingSpec:
    n: int
    conductor: int
    exponents: tuple
    cap: int = DEFAULT_CAP
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank n must be at least 1")
        if self.conductor < 1:
            raise ValueError("conductor must be at least 1")
        rows = tuple(tuple(int(k) for k in row) for row in self.exponents)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"exponent matrix must be {self.n}x{self.n}")
        # reduce mod N so equal braidings compare equal
        rows = tuple(tuple(k % self.conductor for k in r) for r in rows)
        object.__setattr__(self, "exponents", rows)
        if self.cap < 1:
            raise ValueError("degree cap must be positive")

    @classmethod
    def from_matrix(cls, conductor: int, exponents: Sequence[Sequence[int]], cap: int = DEFAULT_CAP):
        return cls(len(exponents), conductor, tuple(map(tuple, exponents)), cap)

    def k(self, i: int, j: int) -> int:
        return self.exponents[i - 1][j - 1]

    def p(self, i: int, j: int) -> Cyclotomic:
        """p_ij for 1-based letter indices."""
        return self.zeta(self.exponents[i - 1][j - 1])

    def zeta(self, e: int) -> Cyclotomic:
        return _cached_root(self.conductor, e % self.conductor)

    def with_cap(self, cap: int) -> "BraidingSpec":
        return BraidingSpec(self.n, self.conductor, self.exponents, cap, self.labels)

    def check_degree(self, d: int) -> None:
        if d > self.cap:
            raise CapExceeded(
                f"degree {d} exceeds the degree cap {self.cap}; raise the cap explicitly to go further"
            )

    @property
    def fingerprint(self) -> str:
        doc = json.dumps(
            {"n": self.n, "conductor": self.conductor, "exponents": self.exponents},
            sort_keys=True,
        )
        return hashlib.sha256(doc.encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        out = {"n": self.n, "conductor": self.conductor, "exponents": [list(r) for r in self.exponents]}
        if self.cap != DEFAULT_CAP:
            out["cap"] = self.cap
        return out

    # exponent of zeta in p_{d,e}
    def bichar_exponent(self, d: Sequence[int], e: Sequence[int]) -> int:
        total = 0
        for i, di in enumerate(d):
            if di:
                row = self.exponents[i]
                for j, ej in enumerate(e):
                    if ej:
                        total += di * ej * row[j]
        return total % self.conductor


@lru_cache(maxsize=None)
def _cached_root(N: int, e: int) -> Cyclotomic:
    return root_of_unity(N, e)


def unit_vector(n: int, i: int) -> tuple:
    """Degree e_i (1-based)."""
    v = [0] * n
    v[i - 1] = 1
    return tuple(v)


def bichar_eval(spec: BraidingSpec, d: Sequence[int], e: Sequence[int]) -> Cyclotomic:
    """p_{d,e} = prod p_ij^(d_i e_j); biadditive by construction."""
    if len(d) != spec.n or len(e) != spec.n:
        raise ValueError("degree vectors must have length n")
    return spec.zeta(spec.bichar_exponent(d, e))


def is_symmetric(spec: BraidingSpec) -> bool:
    n = spec.n
    return all(spec.k(i, j) == spec.k(j, i) for i in range(1, n + 1) for j in range(1, n + 1))


def _edge(spec: BraidingSpec, i: int, j: int) -> bool:
    return (spec.k(i, j) + spec.k(j, i)) % spec.conductor != 0


def is_connected(spec: BraidingSpec) -> bool:
    """Connectivity of the graph joining i and j when p_ij p_ji != 1."""
    n = spec.n
    seen = {1}
    stack = [1]
    while stack:
        i = stack.pop()
        for j in range(1, n + 1):
            if j not in seen and j != i and _edge(spec, i, j):
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def is_quantum_linear_space(spec: BraidingSpec) -> bool:
    n = spec.n
    return not any(_edge(spec, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
