"""Continued fractions of rationals, convergents and exact square-root comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Fraction",
    "CFExpansion",
    "cf_expand",
    "convergent",
    "semiconvergent",
    "isqrt",
    "iroot",
    "cmp_with_sqrt_scaled",
    "sqrt_gt",
]


@dataclass(frozen=True)
class CFExpansion:
    """Partial quotients ``[a_0; a_1, ..., a_j]`` with the convergent table.

    ``convergents[i]`` is ``(p_i, q_i)``.  The accessors :meth:`p` and
    :meth:`q` also accept ``i = -1`` and ``i = -2`` and return the usual
    seeds ``p_{-1}/q_{-1} = 1/0`` and ``p_{-2}/q_{-2} = 0/1``.
    """

    quotients: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]

    @classmethod
    def from_quotients(cls, quotients: Sequence[int]) -> "CFExpansion":
        qs = [int(a) for a in quotients]
        if not qs:
            raise ValueError("empty quotient list")
        if any(a < 1 for a in qs[1:]):
            raise ValueError("partial quotients after a_0 must be positive")
        # fold a trailing 1 so the expansion is canonical
        if len(qs) > 1 and qs[-1] == 1:
            qs.pop()
            qs[-1] += 1
        convs = []
        p1, q1, p2, q2 = 1, 0, 0, 1
        for a in qs:
            p, q = a * p1 + p2, a * q1 + q2
            convs.append((p, q))
            p2, q2, p1, q1 = p1, q1, p, q
        return cls(tuple(qs), tuple(convs))

    def __len__(self) -> int:
        return len(self.quotients)

    @property
    def last(self) -> int:
        return len(self.quotients) - 1

    def a(self, i: int) -> int:
        return self.quotients[self._index(i)]

    def p(self, i: int) -> int:
        if i == -1:
            return 1
        if i == -2:
            return 0
        return self.convergents[self._index(i)][0]

    def q(self, i: int) -> int:
        if i == -1:
            return 0
        if i == -2:
            return 1
        return self.convergents[self._index(i)][1]

    def value(self) -> Fraction:
        p, q = self.convergents[-1]
        return Fraction(p, q)

    def _index(self, i: int) -> int:
        if not 0 <= i < len(self.quotients):
            raise IndexError(f"convergent index {i} out of range 0..{self.last}")
        return i


def cf_expand(x: Fraction | int) -> CFExpansion:
    """Expand a rational number by the Euclidean algorithm.

    >>> cf_expand(Fraction(1, 2)).quotients
    (0, 2)
    """
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    qs = []
    while den:
        a, rem = divmod(num, den)
        qs.append(a)
        num, den = den, rem
    return CFExpansion.from_quotients(qs)


def convergent(cf: CFExpansion, i: int) -> Fraction:
    if i < 0:
        raise IndexError(f"convergent index {i} out of range 0..{cf.last}")
    p, q = cf.convergents[cf._index(i)]
    return Fraction(p, q)


def semiconvergent(cf: CFExpansion, m: int, r: int, s: int, sign: int = 1) -> Fraction:
    """Return ``(r p_{m+1} + sign s p_m) / (r q_{m+1} + sign s q_m)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if r < 0 or s < 0 or (r == 0 and s == 0):
        raise ValueError("coefficients must be nonnegative and not both zero")
    if m < -1:
        raise IndexError("m must be >= -1")
    num = r * cf.p(m + 1) + sign * s * cf.p(m)
    den = r * cf.q(m + 1) + sign * s * cf.q(m)
    if den <= 0:
        raise ValueError(f"nonpositive denominator {den}")
    return Fraction(num, den)


def isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def iroot(x: Fraction | int, k: int) -> int:
    """Largest integer ``t >= 0`` with ``t**k <= x`` for rational ``x >= 0``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("root of a negative number")
    n = x.numerator // x.denominator
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    if k == 4:
        return math.isqrt(math.isqrt(n))
    if n == 0:
        return 0
    t = 1 << (n.bit_length() // k + 1)
    while True:
        u = ((k - 1) * t + n // t ** (k - 1)) // k
        if u >= t:
            break
        t = u
    return t


def cmp_with_sqrt_scaled(lhs: Fraction | int, coeff: Fraction | int, n: int) -> int:
    """Compare ``lhs`` with ``coeff * sqrt(n)``; returns -1, 0 or 1.

    Both sides must be positive, so comparing squares preserves order.
    """
    lhs, coeff = Fraction(lhs), Fraction(coeff)
    if lhs <= 0 or coeff <= 0 or n <= 0:
        raise ValueError("cmp_with_sqrt_scaled needs positive arguments")
    diff = lhs * lhs - coeff * coeff * n
    return (diff > 0) - (diff < 0)


def sqrt_gt(x: Fraction | int, n: int) -> bool:
    """``x > sqrt(n)`` for any rational ``x``."""
    x = Fraction(x)
    return x > 0 and x * x > n
