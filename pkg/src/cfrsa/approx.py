"""Solutions of ``|alpha - a/b| < c/b^2`` in terms of convergents of ``alpha``.

Every coprime solution has the shape::

    a/b = (r p_{m+1} +- s p_m) / (r q_{m+1} +- s q_m),   r s < 2c

with ``m >= -1``.  :func:`enumerate_solutions` walks those shapes directly;
:func:`brute_force_solutions` scans every denominator and serves as the
independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cf import CFExpansion, cf_expand

__all__ = [
    "ApproxSolution",
    "ApproxQuery",
    "NotASolution",
    "is_solution",
    "enumerate_solutions",
    "brute_force_solutions",
    "classify_solution",
    "worley_form_check",
    "WORLEY_FORMS",
]


class NotASolution(ValueError):
    """Raised when a pair does not satisfy the approximation inequality."""


@dataclass(frozen=True)
class ApproxSolution:
    a: int
    b: int
    m: int
    r: int
    s: int
    sign: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.a, self.b)


@dataclass(frozen=True)
class ApproxQuery:
    alpha: Fraction
    c: Fraction
    b_max: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c <= 0:
            raise ValueError("c must be positive")
        if self.b_max < 1:
            raise ValueError("b_max must be at least 1")


def is_solution(alpha: Fraction, a: int, b: int, c: Fraction) -> bool:
    """Strict test ``|alpha - a/b| < c/b^2`` in exact arithmetic."""
    alpha, c = Fraction(alpha), Fraction(c)
    # |b*P - a*Q| * b * c_den < c_num * Q
    P, Q = alpha.numerator, alpha.denominator
    return abs(b * P - a * Q) * b * c.denominator < c.numerator * Q


def _coefficient_pairs(c: Fraction):
    """(s, r) pairs with r s < 2c, coprime, in ascending s then r."""
    yield 0, 1
    two_c = 2 * c
    s = 1
    while s == 1 or s < two_c:
        r = 0 if s == 1 else 1
        while r * s < two_c:
            if math.gcd(r, s) == 1:
                yield s, r
            r += 1
        s += 1


def enumerate_solutions(q: ApproxQuery) -> list[ApproxSolution]:
    """All coprime ``(a, b)`` with ``1 <= b <= b_max`` solving the inequality.

    Candidates are generated level by level (``m = -1, 0, ..., j - 1`` for
    ``alpha = p_j/q_j``), plus sign before minus, then by ``s``.  Each pair is
    reported once, with the witness of smallest ``r s`` (earliest generated
    among equals), so convergents always carry ``(r, s) = (1, 0)`` or
    ``(0, 1)``.  Results are sorted by ``(b, a)``.
    """
    cf = cf_expand(q.alpha)
    pairs = list(_coefficient_pairs(q.c))
    seen: dict[tuple[int, int], ApproxSolution] = {}
    for m in range(-1, cf.last):
        p1, q1, p0, q0 = cf.p(m + 1), cf.q(m + 1), cf.p(m), cf.q(m)
        for sign in (1, -1):
            for s, r in pairs:
                if sign < 0 and s == 0:
                    continue
                b = r * q1 + sign * s * q0
                if b < 1 or b > q.b_max:
                    continue
                a = r * p1 + sign * s * p0
                prev = seen.get((a, b))
                if prev is not None and prev.r * prev.s <= r * s:
                    continue
                if prev is None and not is_solution(q.alpha, a, b, q.c):
                    continue
                seen[a, b] = ApproxSolution(a, b, m, r, s, sign)
    return sorted(seen.values(), key=lambda sol: (sol.b, sol.a))


def brute_force_solutions(q: ApproxQuery) -> list[tuple[int, int]]:
    """Scan every ``b <= b_max`` and the few integers ``a`` near ``b * alpha``."""
    P, Q = q.alpha.numerator, q.alpha.denominator
    cn, cd = q.c.numerator, q.c.denominator
    out = []
    for b in range(1, q.b_max + 1):
        # |b P - a Q| < cn Q / (cd b): a lies strictly between (b P cd b -+ cn Q) / (Q cd b)
        den = Q * cd * b
        centre = b * P * cd * b
        lo = (centre - cn * Q) // den
        hi = -((-(centre + cn * Q)) // den)
        for a in range(lo, hi + 1):
            if abs(b * P - a * Q) * b * cd < cn * Q and math.gcd(a, b) == 1:
                out.append((a, b))
    out.sort(key=lambda ab: (ab[1], ab[0]))
    return out


def _solve(cf: CFExpansion, m: int, a: int, b: int) -> tuple[int, int]:
    """Coefficients of ``(a, b) = r (p_{m+1}, q_{m+1}) + s (p_m, q_m)``."""
    det = cf.p(m + 1) * cf.q(m) - cf.p(m) * cf.q(m + 1)  # (-1)^m
    r = (a * cf.q(m) - b * cf.p(m)) * det
    s = (b * cf.p(m + 1) - a * cf.q(m + 1)) * det
    return r, s


def classify_solution(alpha: Fraction, a: int, b: int, c: Fraction) -> ApproxSolution:
    """Witness ``(m, r, s, sign)`` for a solution, following the existence proof.

    For ``alpha < a/b`` take ``m`` the largest odd index with
    ``a/b <= p_m/q_m`` (``m = -1`` when ``a/b`` lies beyond ``p_1/q_1``);
    for ``alpha > a/b`` the largest even one with ``p_m/q_m <= a/b``.  Solve
    for ``r, s`` against ``p_{m+1}, p_m``.  When ``r s >= 2c`` switch to the
    minus shape one level up, ``(s p_{m+2} - t p_{m+1})`` with
    ``t = s a_{m+2} - r``.  A fraction below ``floor(alpha)`` is the minus
    shape at ``m = -1``.
    """
    alpha, c = Fraction(alpha), Fraction(c)
    if b < 1 or math.gcd(a, b) != 1:
        raise NotASolution(f"({a}, {b}) is not a reduced fraction")
    if not is_solution(alpha, a, b, c):
        raise NotASolution(f"{a}/{b} does not satisfy |alpha - a/b| < c/b^2")
    cf = cf_expand(alpha)
    x = Fraction(a, b)
    j = cf.last
    if x == alpha:
        return ApproxSolution(a, b, j - 1, 1, 0, 1)
    if x < cf.p(0):
        # below floor(alpha): a/b = (b p_0 - s) / b
        return ApproxSolution(a, b, -1, b, b * cf.p(0) - a, -1)

    above = x > alpha
    parity = 1 if above else 0
    m = -1 if above else 0
    for i in range(parity, j + 1, 2):
        conv = Fraction(cf.p(i), cf.q(i))
        if (above and x <= conv) or (not above and conv <= x):
            m = i
        else:
            break
    r, s = _solve(cf, m, a, b)
    assert r >= 0 and s > 0, (m, r, s)
    if r * s < 2 * c or m + 2 > j:
        return ApproxSolution(a, b, m, r, s, 1)
    t = s * cf.a(m + 2) - r
    if t <= 0 or s * t >= 2 * c:
        raise AssertionError(f"no witness with product < 2c for {a}/{b}")
    return ApproxSolution(a, b, m + 1, s, t, -1)


# (r, s, sign) -> tag; sign is irrelevant when r s == 0
WORLEY_FORMS = {
    (1, 0, 1): "p_m/q_m",
    (0, 1, 1): "p_m/q_m",
    (1, 1, 1): "(p_{m+1}+p_m)/(q_{m+1}+q_m)",
    (1, 1, -1): "(p_{m+1}-p_m)/(q_{m+1}-q_m)",
    (2, 1, 1): "(2p_{m+1}+p_m)/(2q_{m+1}+q_m)",
    (2, 1, -1): "(2p_{m+1}-p_m)/(2q_{m+1}-q_m)",
    (3, 1, 1): "(3p_{m+1}+p_m)/(3q_{m+1}+q_m)",
    (1, 2, 1): "(p_{m+1}+2p_m)/(q_{m+1}+2q_m)",
    (1, 2, -1): "(p_{m+1}-2p_m)/(q_{m+1}-2q_m)",
    (1, 3, -1): "(p_{m+1}-3p_m)/(q_{m+1}-3q_m)",
}


def worley_form_check(sol: ApproxSolution) -> str:
    """Name the ``c = 2`` shape a witness belongs to; raise if it has none."""
    key = (sol.r, sol.s, 1 if sol.r * sol.s == 0 else sol.sign)
    try:
        return WORLEY_FORMS[key]
    except KeyError:
        raise ValueError(f"witness (r={sol.r}, s={sol.s}, sign={sol.sign:+d}) is not a Worley form") from None
