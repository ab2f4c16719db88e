"""Exact arithmetic in cyclotomic fields Q(zeta_N) and quantum integers.

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N),
reduced modulo the N-th cyclotomic polynomial, as integer numerators over a
common positive denominator.  The representation is canonical, so equality is
a tuple comparison whenever the conductors agree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import cyclotomic_poly, symbols
from sympy.functions.combinatorial.numbers import mobius, totient

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "cyc_add",
    "cyc_mul",
    "cyc_inv",
    "cyc_pow",
    "mult_order",
    "is_primitive_root",
    "quantum_integer",
    "quantum_factorial",
    "gauss_binom",
]


class _FieldData:
    """Per-conductor tables: x^e mod Phi_N for 0 <= e < N, normalized traces."""

    __slots__ = ("N", "phi", "table", "trace", "units")

    def __init__(self, N: int):
        self.N = N
        x = symbols("x")
        # all_coeffs is highest degree first; Phi_N is monic
        coeffs = [int(c) for c in cyclotomic_poly(N, x, polys=True).all_coeffs()]
        phi = len(coeffs) - 1
        self.phi = phi
        low = coeffs[::-1][:phi]  # Phi_N = x^phi + sum low[k] x^k
        table = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(max(N, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for k in range(phi):
                    cur[k] -= top * low[k]
        self.table = table
        # normalized trace of z^e only depends on the order N/gcd(e,N) of z^e
        self.trace = []
        for e in range(phi):
            M = N // math.gcd(e, N)
            self.trace.append(Fraction(int(mobius(M)), int(totient(M))))
        self.units = [k for k in range(1, N + 1) if math.gcd(k, N) == 1]

    def fold(self, acc):
        """Reduce a length-N exponent-indexed vector into the power basis."""
        phi = self.phi
        out = list(acc[:phi])
        table = self.table
        for e in range(phi, len(acc)):
            a = acc[e]
            if a:
                row = table[e]
                for k in range(phi):
                    if row[k]:
                        out[k] += a * row[k]
        return out


@lru_cache(maxsize=None)
def _field(N: int) -> _FieldData:
    if N < 1:
        raise ValueError(f"conductor must be positive, got {N}")
    return _FieldData(N)


def _normalize(N: int, coeffs, den: int) -> "Cyclotomic":
    if den < 0:
        coeffs = [-c for c in coeffs]
        den = -den
    g = math.gcd(den, *coeffs)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        den //= g
    obj = object.__new__(Cyclotomic)
    obj._n = N
    obj._c = tuple(coeffs)
    obj._d = den
    return obj


class Cyclotomic:
    """An element of Q(zeta_N).

    ``Cyclotomic(3)`` and ``Cyclotomic(Fraction(1, 2), conductor=8)`` build
    rationals; use :func:`root_of_unity` for ``zeta_N^k``.  Values are
    immutable and hashable; ints and Fractions coerce automatically.
    """

    __slots__ = ("_n", "_c", "_d")

    def __init__(self, value=0, conductor: int = 1):
        F = _field(conductor)
        if isinstance(value, Cyclotomic):
            other = value._lift(conductor) if conductor % value._n == 0 else None
            if other is None:
                raise ValueError("cannot place value in a smaller field")
            self._n, self._c, self._d = other._n, other._c, other._d
            return
        q = Fraction(value)
        coeffs = [0] * F.phi
        coeffs[0] = q.numerator
        self._n = conductor
        self._c = tuple(coeffs)
        self._d = q.denominator

    # -- structure -------------------------------------------------------
    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple:
        """Power-basis coordinates as Fractions (length phi(N))."""
        return tuple(Fraction(c, self._d) for c in self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    def __bool__(self):
        return any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._c[0], self._d)

    def in_field(self, L: int) -> "Cyclotomic":
        """The same value written in Q(zeta_L); L must be a multiple of the conductor."""
        if L % self._n:
            raise ValueError(f"Q(zeta_{self._n}) does not embed in Q(zeta_{L})")
        return self._lift(L)

    def _lift(self, L: int) -> "Cyclotomic":
        N = self._n
        if L == N:
            return self
        step = L // N
        F = _field(L)
        if self.is_rational():
            coeffs = [0] * F.phi
            coeffs[0] = self._c[0]
            return _normalize(L, coeffs, self._d)
        acc = [0] * L
        for e, c in enumerate(self._c):
            if c:
                acc[(e * step) % L] += c
        return _normalize(L, F.fold(acc), self._d)

    @staticmethod
    def _coerce(value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Rational)):
            return Cyclotomic(value)
        return NotImplemented

    def _common(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented, NotImplemented
        if self._n == other._n:
            return self, other
        if other.is_rational() and other._n == 1:
            return self, other._lift(self._n)
        if self.is_rational() and self._n == 1:
            return self._lift(other._n), other
        L = self._n * other._n // math.gcd(self._n, other._n)
        return self._lift(L), other._lift(L)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        if a._d == b._d:
            return _normalize(a._n, [x + y for x, y in zip(a._c, b._c)], a._d)
        return _normalize(
            a._n, [x * b._d + y * a._d for x, y in zip(a._c, b._c)], a._d * b._d
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(Cyclotomic)
        obj._n, obj._c, obj._d = self._n, tuple(-c for c in self._c), self._d
        return obj

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        N = a._n
        if b.is_rational():
            return _normalize(N, [c * b._c[0] for c in a._c], a._d * b._d)
        if a.is_rational():
            return _normalize(N, [c * a._c[0] for c in b._c], a._d * b._d)
        F = _field(N)
        acc = [0] * (2 * F.phi)
        bc = [(j, y) for j, y in enumerate(b._c) if y]
        for i, x in enumerate(a._c):
            if x:
                for j, y in bc:
                    acc[i + j] += x * y
        if len(acc) > N:
            # z^N = 1 keeps exponents inside the table range
            wrapped = [0] * N
            for e, v in enumerate(acc):
                if v:
                    wrapped[e % N] += v
            acc = wrapped
        return _normalize(N, F.fold(acc), a._d * b._d)

    __rmul__ = __mul__

    def conjugate_by(self, k: int) -> "Cyclotomic":
        """Galois automorphism z -> z^k (k coprime to the conductor)."""
        N = self._n
        F = _field(N)
        acc = [0] * N
        for e, c in enumerate(self._c):
            if c:
                acc[(e * k) % N] += c
        return _normalize(N, F.fold(acc), self._d)

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in scalar field")
        if self.is_rational():
            return _normalize(self._n, [self._d] + [0] * (len(self._c) - 1), self._c[0])
        N = self._n
        integral = _normalize(N, list(self._c), 1)
        # product of the non-trivial conjugates; integral * prod is the norm
        prod = Cyclotomic(1, N)
        for k in _field(N).units:
            if k % N != 1 % N:
                prod = prod * integral.conjugate_by(k)
        norm = integral * prod
        assert norm.is_rational(), "norm must be rational"
        return _normalize(N, [c * self._d for c in prod._c], norm._c[0] * prod._d)

    def __truediv__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = Cyclotomic(1, self._n)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return a._c == b._c and a._d == b._d

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._c[0], self._d))
        F = _field(self._n)
        t = sum((c * F.trace[e] for e, c in enumerate(self._c) if c), Fraction(0))
        return hash(("cyc", t / self._d))

    # -- display ---------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Cyclotomic({format_scalar(self)!s}, conductor={self._n})"


def format_scalar(a: Cyclotomic, var: str = "z") -> str:
    """Render ``a`` as a sum of rational multiples of powers of ``var``."""
    parts = []
    for e, c in enumerate(a._c):
        if not c:
            continue
        q = Fraction(c, a._d)
        mag = abs(q)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag} {power}"
        parts.append(("-" if q < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- spec-level operations ----------------------------------------------


def root_of_unity(N: int, k: int = 1) -> Cyclotomic:
    """zeta_N^k in canonical form."""
    F = _field(N)
    acc = [0] * N
    acc[k % N] = 1
    return _normalize(N, F.fold(acc), 1)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return Cyclotomic._coerce(a) + b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return Cyclotomic._coerce(a) * b


def cyc_inv(a: Cyclotomic) -> Cyclotomic:
    return Cyclotomic._coerce(a).inverse()


def cyc_pow(a: Cyclotomic, k: int) -> Cyclotomic:
    return Cyclotomic._coerce(a) ** k


def mult_order(a) -> int | None:
    """Multiplicative order of ``a``, or None if ``a`` is not a root of unity.

    Every root of unity in Q(zeta_N) has order dividing lcm(2, N), so only
    those divisors are searched.
    """
    a = Cyclotomic._coerce(a)
    if a.is_zero():
        raise ZeroDivisionError("multiplicative order of zero is undefined")
    L = a.conductor * 2 // math.gcd(2, a.conductor)
    one = Cyclotomic(1)
    if a ** L != one:
        return None
    for d in sorted(k for k in range(1, L + 1) if L % k == 0):
        if a ** d == one:
            return d
    return None  # pragma: no cover


def is_primitive_root(a, m: int) -> bool:
    a = Cyclotomic._coerce(a)
    if a.is_zero():
        return False
    return mult_order(a) == m


def quantum_integer(m: int, a) -> Cyclotomic:
    """(m)_a = 1 + a + ... + a^(m-1); (0)_a = 0."""
    if m < 0:
        raise ValueError("quantum integers are defined for m >= 0")
    a = Cyclotomic._coerce(a)
    total = Cyclotomic(0, a.conductor)
    power = Cyclotomic(1, a.conductor)
    for _ in range(m):
        total = total + power
        power = power * a
    return total


def quantum_factorial(m: int, a) -> Cyclotomic:
    a = Cyclotomic._coerce(a)
    result = Cyclotomic(1, a.conductor)
    for k in range(1, m + 1):
        result = result * quantum_integer(k, a)
    return result


@lru_cache(maxsize=4096)
def _gauss_row(m: int, a: Cyclotomic) -> tuple:
    """Row m of the a-Pascal triangle via a^{k-1}C(m+1,k) = a^{k-1}C(m,k) + a^m C(m,k-1)."""
    if m == 0:
        return (Cyclotomic(1, a.conductor),)
    prev = _gauss_row(m - 1, a)
    # rearranged recurrence: C(m,k) = C(m-1,k) + a^(m-k) C(m-1,k-1)
    row = []
    for k in range(m + 1):
        left = prev[k] if k < m else Cyclotomic(0, a.conductor)
        right = prev[k - 1] * a ** (m - k) if k >= 1 else Cyclotomic(0, a.conductor)
        row.append(left + right)
    return tuple(row)


def gauss_binom(m: int, k: int, a) -> Cyclotomic:
    """Gaussian binomial (m choose k)_a, zero outside 0 <= k <= m.

    Built from the Pascal recurrence so it stays defined when quantum
    factorials vanish at roots of unity.
    """
    a = Cyclotomic._coerce(a)
    if m < 0 or k < 0 or k > m:
        return Cyclotomic(0, a.conductor)
    return _gauss_row(m, a)[k]
