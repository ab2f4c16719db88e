"""Floating-point reference computations, independent of the exact package code.

Scalars become complex numbers, the braiding acts on dense numpy vectors, and
B(V)_m is modelled as the image of the quantum symmetrizer built from the
positive braiding c (the package uses c^{-1}; both give the same ranks since
the two braidings are Galois conjugate).
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from itertools import product

import numpy as np

TOL = 1e-7


def cnum(a) -> complex:
    """Complex value of a Cyclotomic under zeta_N -> exp(2 pi i / N)."""
    N = a.conductor
    return sum(float(c) * cmath.exp(2j * cmath.pi * k / N) for k, c in enumerate(a.coeffs))


def qmat(N: int, K) -> np.ndarray:
    return np.array([[cmath.exp(2j * cmath.pi * k / N) for k in row] for row in K])


def words(n: int, m: int) -> list:
    return list(product(range(n), repeat=m))


def _index(n: int, w) -> int:
    i = 0
    for a in w:
        i = i * n + a
    return i


def braiding_on(q: np.ndarray, m: int, k: int) -> np.ndarray:
    """c acting on tensor legs k, k+1 (0-based) of V^{(x)m}."""
    n = q.shape[0]
    M = np.zeros((n**m, n**m), dtype=complex)
    for w in words(n, m):
        a, b = w[k], w[k + 1]
        v = w[:k] + (b, a) + w[k + 2:]
        M[_index(n, v), _index(n, w)] = q[a, b]
    return M


def symmetrizer(q: np.ndarray, m: int) -> np.ndarray:
    """S_m = (S_{m-1} (x) id)(1 + c_{m-1} + c_{m-1}c_{m-2} + ...)."""
    n = q.shape[0]
    if m <= 1:
        return np.eye(n**m, dtype=complex)
    prev = np.kron(symmetrizer(q, m - 1), np.eye(n))
    acc = np.eye(n**m, dtype=complex)
    chain = np.eye(n**m, dtype=complex)
    for k in range(m - 2, -1, -1):
        chain = chain @ braiding_on(q, m, k)
        acc = acc + chain
    return prev @ acc


def rank(M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int((s > TOL * max(1.0, s[0])).sum())


def nichols_dims(N: int, K, D: int) -> list:
    q = qmat(N, K)
    return [rank(symmetrizer(q, m)) for m in range(D + 1)]


# elements of T(V): dict word -> complex, words 0-based


def _p(q, u, v) -> complex:
    r = 1
    for a in u:
        for b in v:
            r *= q[a, b]
    return r


def _homog_letters(u: dict) -> tuple:
    w = next(iter(u))
    return tuple(sorted(w))


def _mul(u: dict, v: dict) -> dict:
    out: dict = {}
    for a, x in u.items():
        for b, y in v.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return out


def _lin(*pairs) -> dict:
    out: dict = {}
    for c, u in pairs:
        for w, x in u.items():
            out[w] = out.get(w, 0) + c * x
    return out


def bracket(q, kind: str, u: dict, v: dict) -> dict:
    """Bracket of homogeneous elements (every word of u has the same letters)."""
    if not u or not v:
        return {}
    lu, lv = _homog_letters(u), _homog_letters(v)
    puv, pvu = _p(q, lu, lv), _p(q, lv, lu)
    uv, vu = _mul(u, v), _mul(v, u)
    if kind == "L":
        return _lin((pvu, uv), (-puv, vu))
    if kind == "R":
        return _lin((puv, uv), (-pvu, vu))
    if kind == "minus":
        return _lin((1, uv), (-1, vu))
    if kind == "braided":
        return _lin((1, uv), (-puv, vu))
    raise ValueError(kind)


def _vector(n: int, m: int, u: dict) -> np.ndarray:
    x = np.zeros(n**m, dtype=complex)
    for w, c in u.items():
        x[_index(n, w)] += c
    return x


def closure_dims(N: int, K, kind: str, D: int) -> list:
    """Per-degree dims 1..D of the closure of V under ``kind`` inside B(V).

    Brackets of all pairs of earlier slices, restricted to homogeneous pieces.
    """
    q = qmat(N, K)
    n = q.shape[0]
    S = {m: symmetrizer(q, m) for m in range(1, D + 1)}
    reps = {1: [{(a,): 1.0} for a in range(n)]}
    out = [n]
    for d in range(2, D + 1):
        cand = []
        for a in range(1, d):
            for u in reps[a]:
                for v in reps[d - a]:
                    w = bracket(q, kind, u, v)
                    if w:
                        cand.append(w)
        # keep one homogeneous piece per letter multiset
        chosen, images = [], []
        groups: dict = {}
        for w in cand:
            for word, c in w.items():
                groups.setdefault(tuple(sorted(word)), {})
        for key in groups:
            rows = []
            for w in cand:
                piece = {word: c for word, c in w.items() if tuple(sorted(word)) == key and abs(c) > 1e-12}
                if not piece:
                    continue
                img = S[d] @ _vector(n, d, piece)
                trial = np.array(rows + [img])
                if rank(trial) > len(rows):
                    rows.append(img)
                    chosen.append(piece)
            images.extend(rows)
        reps[d] = chosen
        out.append(len(chosen))
    return out


def element_is_zero(N: int, K, u) -> bool:
    """Zero test in B(V) for a package FreeElement, by the numeric symmetrizer."""
    q = qmat(N, K)
    n = q.shape[0]
    by_len: dict = {}
    for w, c in u.items():
        by_len.setdefault(len(w), {})[tuple(a - 1 for a in w)] = cnum(c)
    for m, piece in by_len.items():
        if m == 0:
            if any(abs(c) > TOL for c in piece.values()):
                return False
            continue
        img = symmetrizer(q, m) @ _vector(n, m, piece)
        if np.abs(img).max() > TOL * max(1.0, np.abs(_vector(n, m, piece)).max()):
            return False
    return True


@lru_cache(maxsize=None)
def gauss_poly(m: int, k: int) -> tuple:
    """Integer coefficients of the Gaussian binomial in q, by exact polynomial division."""
    import sympy

    q = sympy.Symbol("q")
    if k < 0 or k > m:
        return (0,)

    def fac(j):
        r = sympy.Integer(1)
        for i in range(1, j + 1):
            r *= sum(q**t for t in range(i))
        return sympy.expand(r)

    num, den = sympy.Poly(fac(m), q), sympy.Poly(fac(k) * fac(m - k), q)
    quo, rem = sympy.div(num, den)
    assert rem.is_zero
    return tuple(int(c) for c in reversed(quo.all_coeffs()))


def poly_at(coeffs, a):
    """Evaluate an integer polynomial at a Cyclotomic (or any ring element)."""
    acc = 0 * a
    p = a ** 0
    for c in coeffs:
        acc = acc + p * c
        p = p * a
    return acc
