"""Continued-fraction attacks on RSA with a small secret exponent.

Four searches share the candidate tests in this module:

* :func:`wiener_attack` walks the convergents of ``e/n``;
* :func:`wiener_f_attack` enumerates solutions of ``|e/f - a/b| < 2/b^2``
  with ``f = n - floor(2 sqrt n) + 1``;
* :func:`vvt_attack` does the Verheul--van Tilborg exhaustive search over
  ``k/d = (r p_{m+1} + s p_m) / (r q_{m+1} + s q_m)``;
* :func:`variant_attack` searches the three small-product families
  ``rs+``, ``st-`` and ``r's'`` in ascending product order.

Nothing here touches floating point: bounds written as ``X < g * D`` with
``D = d / n^(1/4)`` are checked through fourth powers, where ``D^4`` is
rational.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .approx import ApproxQuery, enumerate_solutions
from .cf import CFExpansion, cf_expand, iroot, isqrt

__all__ = [
    "Regime",
    "BALANCED",
    "WIDE",
    "REGIMES",
    "RsaPublicKey",
    "AttackConfig",
    "Witness",
    "AttackOutcome",
    "SearchBounds",
    "ShortExpansion",
    "phi_test",
    "modpow_test",
    "factor_with_exponent",
    "in_window",
    "select_m",
    "locate_m_shortcut",
    "search_bounds",
    "wiener_attack",
    "wiener_f_attack",
    "vvt_attack",
    "variant_attack",
]


@dataclass(frozen=True)
class Regime:
    """Constants tied to the prime balance ``p < q < ratio * p``.

    ``upper`` bounds ``(k/d - e/n) * n sqrt(n) / e``; the rest are the
    coefficients derived from it for the variant search.
    """

    name: str
    ratio: int
    upper: Fraction
    rt_coeff: Fraction
    half_excess: Fraction
    rprime_sprime: Fraction
    log_term: Fraction

    @property
    def shortcut(self) -> Fraction:
        return 2 * self.upper

    @property
    def product_bound(self) -> Fraction:
        # rs, st < 2 * upper * D^2
        return 2 * self.upper


BALANCED = Regime(
    "balanced", 2,
    upper=Fraction(2122, 1000),
    rt_coeff=Fraction(2061, 1000),
    half_excess=Fraction(61, 1000),
    rprime_sprime=Fraction(3885, 10000),
    log_term=Fraction(5248, 1000),
)
# same derivations with 3.183 in place of 2.122
WIDE = Regime(
    "wide", 8,
    upper=Fraction(3183, 1000),
    rt_coeff=Fraction(2524, 1000),
    half_excess=Fraction(5915, 10000),
    rprime_sprime=Fraction(5649, 1000),
    log_term=Fraction(12732, 1000),
)
REGIMES = {"balanced": BALANCED, "wide": WIDE}

# Wiener's bound d < n^(1/4) / 3 and the c = 2 extension d < 4.04 n^(1/4)
WIENER_D = Fraction(1, 3)
WIENER_F_D = Fraction(404, 100)
WIENER_F_GAP = Fraction(1221, 10000)


class ShortExpansion(LookupError):
    """The expansion of ``e/n`` ends before the convergent an attack needs."""


@dataclass(frozen=True)
class RsaPublicKey:
    n: int
    e: int

    def __post_init__(self):
        if self.n % 2 == 0 or self.n < 3:
            raise ValueError("modulus must be odd")
        if not 1 < self.e < self.n:
            raise ValueError("public exponent must satisfy 1 < e < n")


@dataclass(frozen=True)
class AttackConfig:
    regime: str = "balanced"
    d_bound: Optional[int] = None
    D_bound: Optional[Fraction] = None
    test_mode: str = "both"
    modpow_witness: int = 2

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.d_bound is not None and self.D_bound is not None:
            raise ValueError("set at most one of d_bound and D_bound")
        if self.D_bound is not None:
            object.__setattr__(self, "D_bound", Fraction(self.D_bound))
            if self.D_bound <= 0:
                raise ValueError("D_bound must be positive")
        if self.d_bound is not None and self.d_bound < 2:
            raise ValueError("d_bound must be at least 2")
        if self.test_mode not in ("phi", "modpow", "both"):
            raise ValueError(f"unknown test mode {self.test_mode!r}")

    @property
    def constants(self) -> Regime:
        return REGIMES[self.regime]

    def D4(self, n: int) -> Fraction:
        """``D_bound^4`` as an exact rational (``d_bound^4 / n`` when given as d)."""
        if self.D_bound is not None:
            return self.D_bound**4
        if self.d_bound is not None:
            return Fraction(self.d_bound**4, n)
        raise ValueError("this attack needs d_bound or D_bound")

    def admits(self, d: int, n: int) -> bool:
        """``d`` strictly below the configured bound (always true without one)."""
        if self.d_bound is not None:
            return d < self.d_bound
        if self.D_bound is not None:
            return d**4 < self.D_bound**4 * n
        return True


@dataclass(frozen=True)
class Witness:
    m: int
    family: str
    coefficients: dict = field(default_factory=dict)


@dataclass(frozen=True)
class AttackOutcome:
    d: int
    k: int
    p: int
    q: int
    phi: int
    steps: int
    method: str
    witness: Witness
    family_steps: dict = field(default_factory=dict)
    notes: tuple = ()

    def __post_init__(self):
        assert self.p * self.q > 0 and self.p < self.q
        assert self.phi == (self.p - 1) * (self.q - 1)
        assert self.steps >= 1


# ---------------------------------------------------------------------------
# candidate tests


def phi_test(pub: RsaPublicKey, a: int, b: int) -> Optional[tuple[int, int, int]]:
    """Treat ``a/b`` as ``k/d``: recover ``phi = (b e - 1) / a`` and factor ``n``.

    Returns ``(p, q, d)`` with ``p < q`` or ``None``.
    """
    if a < 1 or b < 1:
        return None
    num = b * pub.e - 1
    if num % a:
        return None
    phi = num // a
    half_sum2 = pub.n - phi + 1  # p + q
    if half_sum2 <= 0 or half_sum2 % 2:
        return None
    half_sum = half_sum2 // 2
    sq = half_sum * half_sum - pub.n
    if sq <= 0:
        return None
    half_diff = isqrt(sq)
    if half_diff * half_diff != sq:
        return None
    p, q = half_sum - half_diff, half_sum + half_diff
    if p <= 1 or p * q != pub.n:
        return None
    return p, q, b


def modpow_test(pub: RsaPublicKey, b: int, M: int = 2) -> bool:
    """True iff ``(M^e)^b == M (mod n)``."""
    return pow(M, pub.e * b, pub.n) == M % pub.n


def factor_with_exponent(n: int, e: int, d: int) -> Optional[tuple[int, int]]:
    """Split ``n`` given any ``d`` with ``e d == 1`` modulo the group exponent."""
    kk = e * d - 1
    if kk <= 0:
        return None
    t = (kk & -kk).bit_length() - 1
    u = kk >> t
    for g in range(2, 200):
        x = pow(g, u, n)
        if x in (1, n - 1):
            continue
        for _ in range(t):
            y = x * x % n
            if y == 1:
                f = math.gcd(x - 1, n)
                if 1 < f < n:
                    p, q = sorted((f, n // f))
                    return p, q
                break
            if y == n - 1:
                break
            x = y
    return None


def _run_test(pub: RsaPublicKey, cfg: AttackConfig, k: int, d: int) -> Optional[tuple[int, int]]:
    """Apply the configured test to ``k/d``; returns ``(p, q)`` on success."""
    if cfg.test_mode != "phi" and not modpow_test(pub, d, cfg.modpow_witness):
        return None
    if cfg.test_mode != "modpow":
        hit = phi_test(pub, k, d)
        return None if hit is None else hit[:2]
    return factor_with_exponent(pub.n, pub.e, d)


def _outcome(pub, cfg, k, d, pq, steps, method, witness, **extra) -> Optional[AttackOutcome]:
    p, q = pq
    phi = (p - 1) * (q - 1)
    if (pub.e * d - 1) % phi:
        return None
    k_true = (pub.e * d - 1) // phi
    return AttackOutcome(d=d, k=k_true, p=p, q=q, phi=phi, steps=steps,
                         method=method, witness=witness, **extra)


# ---------------------------------------------------------------------------
# exact comparisons against sqrt(n)


def _sqrt_bracket(n: int, bits: int = 64) -> tuple[Fraction, Fraction]:
    lo = isqrt(n << (2 * bits))
    return Fraction(lo, 1 << bits), Fraction(lo + 1, 1 << bits)


def _excess_gt(num: int, q: int, pub: RsaPublicKey, coeff: Fraction) -> bool:
    """``num / (n q) > coeff * e / (n sqrt n)`` for a positive ``num``.

    ``num`` is ``n p - e q`` (or its negative) for a fraction ``p/q``.
    """
    if num <= 0:
        return False
    lhs = num * coeff.denominator
    rhs = coeff.numerator * pub.e * q
    return lhs * lhs * pub.n > rhs * rhs


def in_window(pub: RsaPublicKey, k: int, d: int, regime: Regime = BALANCED) -> bool:
    """``2 e/(n sqrt n) < k/d - e/n < upper * e/(n sqrt n)``, exactly."""
    num = pub.n * k - pub.e * d
    if num <= 0 or d <= 0:
        return False
    lhs = num * num * pub.n
    C = regime.upper
    return lhs > (2 * pub.e * d) ** 2 and lhs * C.denominator**2 < (C.numerator * pub.e * d) ** 2


def select_m(cf: CFExpansion, pub: RsaPublicKey, regime: Regime = BALANCED) -> int:
    """Largest odd ``m`` with ``p_m/q_m - e/n > upper * e/(n sqrt n)``.

    ``m = -1`` (``p_{-1}/q_{-1}`` is infinite) when no odd convergent qualifies.
    """
    m = -1
    for i in range(1, cf.last + 1, 2):
        if _excess_gt(pub.n * cf.p(i) - pub.e * cf.q(i), cf.q(i), pub, regime.upper):
            m = i
        else:
            break
    return m


def locate_m_shortcut(pub: RsaPublicKey, cfg: AttackConfig = AttackConfig()) -> int:
    """Smallest odd ``m >= 1`` with ``q_m q_{m+1} > n sqrt(n) / (4.244 e)``.

    Under ``p < q < 2p`` and ``d < n^(1/4)/3`` the convergent ``p_m/q_m`` is
    ``k/d``.
    """
    cf = cf_expand(Fraction(pub.e, pub.n))
    kappa = cfg.constants.shortcut
    for m in range(1, cf.last, 2):
        # kappa e q_m q_{m+1} > n sqrt(n)  <=>  (kappa e q_m q_{m+1})^2 > n^3
        lhs = kappa.numerator * pub.e * cf.q(m) * cf.q(m + 1)
        if lhs * lhs > pub.n**3 * kappa.denominator**2:
            return m
    raise ShortExpansion("no odd m with q_m q_(m+1) above the threshold")


# ---------------------------------------------------------------------------
# Wiener and the c = 2 extension


def wiener_attack(pub: RsaPublicKey, cfg: AttackConfig = AttackConfig()) -> Optional[AttackOutcome]:
    """Test the convergents ``k/d`` of ``e/n`` in order."""
    cf = cf_expand(Fraction(pub.e, pub.n))
    steps = 0
    for i, (k, d) in enumerate(cf.convergents):
        if not cfg.admits(d, pub.n):
            break
        steps += 1
        pq = _run_test(pub, cfg, k, d)
        if pq:
            out = _outcome(pub, cfg, k, d, pq, steps, "wiener",
                           Witness(i, "convergent", {"index": i}))
            if out:
                return out
    return None


def _max_d_below(coeff: Fraction, n: int) -> int:
    """Largest ``d`` with ``d < coeff * n^(1/4)``."""
    x = coeff**4 * n
    t = iroot(x, 4)
    return t - 1 if t**4 == x else t


def wiener_f_attack(pub: RsaPublicKey, cfg: AttackConfig = AttackConfig()) -> Optional[AttackOutcome]:
    """Test solutions ``a/b > e/f`` of ``|e/f - a/b| < 2/b^2`` by increasing ``b``."""
    f = pub.n - isqrt(4 * pub.n) + 1
    alpha = Fraction(pub.e, f)
    if cfg.d_bound is not None:
        b_max = cfg.d_bound - 1
    elif cfg.D_bound is not None:
        b_max = _max_d_below(cfg.D_bound, pub.n)
    else:
        b_max = _max_d_below(WIENER_F_D, pub.n)
    steps = 0
    for sol in enumerate_solutions(ApproxQuery(alpha, Fraction(2), max(b_max, 1))):
        if sol.a < 1 or Fraction(sol.a, sol.b) <= alpha:
            continue
        steps += 1
        pq = _run_test(pub, cfg, sol.a, sol.b)
        if pq:
            fam = "rs+" if sol.sign > 0 else "rs-"
            out = _outcome(pub, cfg, sol.a, sol.b, pq, steps, "wiener_f",
                           Witness(sol.m, fam, {"r": sol.r, "s": sol.s}))
            if out:
                return out
    return None


# ---------------------------------------------------------------------------
# search bounds shared by the Verheul--van Tilborg search and the variant


def _max_coeff(gamma4: Fraction, D4: Fraction) -> int:
    """Largest integer ``x`` with ``x^4 <= gamma4 * D^4``."""
    return iroot(gamma4 * D4, 4)


def _max_product(coeff: Fraction, D4: Fraction) -> int:
    """Largest integer ``P`` with ``P < coeff * D^2``."""
    x = coeff * coeff * D4
    t = iroot(x, 2)
    return t - 1 if t * t == x else t


@dataclass(frozen=True)
class SearchBounds:
    """Everything the two exhaustive searches derive from ``e/n`` and ``D``.

    ``case_far`` is true when ``e/n - p_{m+1}/q_{m+1}`` exceeds
    ``upper * e/(n sqrt n)``.  Bounds that need a partial quotient past the
    end of the expansion are ``None``.
    """

    m: int
    case_far: bool
    a1: Optional[int]
    a2: Optional[int]
    a3: Optional[int]
    vvt_r_max: Optional[int]
    vvt_s_max: Optional[int]
    s0: Optional[int]
    s1: Optional[int]
    rt_max: Optional[int]
    product_max: int
    rprime_max: Optional[int]
    sprime_max: Optional[int]
    D4: Fraction
    upper: Fraction

    def vvt_step_coeff(self) -> Optional[Fraction]:
        """``g`` in the step bound ``g * D^2`` for the applicable case."""
        if self.vvt_r_max is None:
            return None
        if self.case_far:
            return self.upper * (self.a3 + 2) * (self.a2 + 1)
        return self.upper * (self.a2 + 2) * (self.a1 + 1)

    def below_D2(self, count: int, coeff: Fraction) -> bool:
        """``count <= coeff * D^2``."""
        return count * count <= coeff * coeff * self.D4


def search_bounds(pub: RsaPublicKey, cfg: AttackConfig, cf: Optional[CFExpansion] = None) -> SearchBounds:
    cf = cf or cf_expand(Fraction(pub.e, pub.n))
    reg = cfg.constants
    C = reg.upper
    D4 = cfg.D4(pub.n)
    m = select_m(cf, pub, reg)

    def a_at(i):
        return cf.a(i) if 0 <= i <= cf.last else None

    a1, a2, a3 = a_at(m + 1), a_at(m + 2), a_at(m + 3)
    case_far = m + 1 <= cf.last and _excess_gt(
        pub.e * cf.q(m + 1) - pub.n * cf.p(m + 1), cf.q(m + 1), pub, C)

    vvt_r = vvt_s = s1 = None
    if case_far and a2 is not None and a3 is not None:
        # r < sqrt(C(a3+2)) (a2+1) D,  s < 2 sqrt(C(a3+2)) D
        g2 = C * (a3 + 2)
        vvt_r = _max_coeff(g2 * g2 * (a2 + 1) ** 4, D4)
        vvt_s = s1 = _max_coeff(g2 * g2 * 16, D4)
    elif not case_far and a1 is not None and a2 is not None:
        # r < sqrt(C(a2+2)) D,  s < sqrt(C(a2+2)) (a1+1) D
        g2 = C * (a2 + 2)
        vvt_r = _max_coeff(g2 * g2, D4)
        vvt_s = s1 = _max_coeff(g2 * g2 * (a1 + 1) ** 4, D4)

    s0 = rt_max = None
    if a2 is not None:
        # s0 = floor(2.061 D / sqrt(a2)),  r, t < 2.061 sqrt(a2) D
        s0 = _max_coeff(reg.rt_coeff**4 / (a2 * a2), D4)
        rt_max = _max_coeff(reg.rt_coeff**4 * a2 * a2, D4)

    rp = sp = None
    if a3 is not None:
        # r' < h sqrt(C(a3+2)) / a3 * D,  s' < sqrt(C(a3+2)) D
        g2 = C * (a3 + 2)
        rp = _max_coeff(reg.half_excess**4 * g2 * g2 / a3**4, D4)
        sp = _max_coeff(g2 * g2, D4)

    return SearchBounds(
        m=m, case_far=case_far, a1=a1, a2=a2, a3=a3,
        vvt_r_max=vvt_r, vvt_s_max=vvt_s, s0=s0, s1=s1, rt_max=rt_max,
        product_max=_max_product(reg.product_bound, D4),
        rprime_max=rp, sprime_max=sp, D4=D4, upper=C,
    )


# ---------------------------------------------------------------------------
# window-restricted families


class _Family:
    """Fractions ``(x pu + y pv) / (x qu + y qv)`` for a fixed outer ``y``.

    For each ``y`` the inner ``x`` keeping ``k/d`` inside the window of
    :func:`in_window` is a ratio interval ``y * lo < x < y * hi``; it is
    computed once with a rational bracket of ``sqrt(n)`` and widened by one
    on each side, so every candidate still gets the exact window check.
    """

    def __init__(self, tag, pub, regime, u, v, names, y_max, x_min=0, x_max=None,
                 product_max=None, x_lt_ay=None, half=None):
        self.tag = tag
        self.pub = pub
        self.regime = regime
        self.u, self.v = u, v
        self.names = names
        self.x_min = x_min
        self.x_max = x_max
        self.y_max = y_max
        self.product_max = product_max
        self.x_lt_ay = x_lt_ay  # x < a * y
        self.half = half  # keep 2x <= a*y (rs) or 2x < a*y (st)
        self._ratios = self._ratio_window()

    def _ratio_window(self):
        pub, reg = self.pub, self.regime
        e, n = pub.e, pub.n
        (pu, qu), (pv, qv) = self.u, self.v
        Au, Av = n * pu - e * qu, n * pv - e * qv
        lo_s, hi_s = _sqrt_bracket(n)
        C = reg.upper
        # N = x Au + y Av, d = x qu + y qv; need N hi_s > 2 e d and N lo_s < C e d
        conds = [
            (Au * hi_s - 2 * e * qu, Av * hi_s - 2 * e * qv),
            (C * e * qu - Au * lo_s, C * e * qv - Av * lo_s),
        ]
        lo, hi = Fraction(0), None
        for alpha, beta in conds:
            # x alpha + y beta > 0
            if alpha > 0:
                lo = max(lo, -beta / alpha)
            elif alpha < 0:
                bound = beta / -alpha
                hi = bound if hi is None else min(hi, bound)
            elif beta <= 0:
                return None
        if hi is not None and hi < lo:
            return None
        return lo, hi

    def inner_range(self, y: int) -> Optional[tuple[int, int]]:
        if self._ratios is None:
            return None
        lo_r, hi_r = self._ratios
        lo = max(0, (y * lo_r.numerator) // lo_r.denominator - 1)
        hi = None if hi_r is None else -((-y * hi_r.numerator) // hi_r.denominator) + 1
        caps = [hi, self.x_max]
        if self.product_max is not None:
            caps.append(self.product_max // y)
        if self.x_lt_ay is not None:
            caps.append(self.x_lt_ay * y - 1)
        if self.half is not None:
            a, strict = self.half
            caps.append((a * y - 1) // 2 if strict else (a * y) // 2)
        caps = [c for c in caps if c is not None]
        if not caps:
            raise ValueError(f"family {self.tag} has no bound on its inner coefficient")
        hi = min(caps)
        # x = 0 only as the pair (0, 1); other pairs need gcd(x, y) = 1
        lo = max(lo, self.x_min, 0 if y == 1 else 1)
        return (lo, hi) if lo <= hi else None

    def candidate(self, x: int, y: int) -> tuple[int, int]:
        (pu, qu), (pv, qv) = self.u, self.v
        return x * pu + y * pv, x * qu + y * qv


def _candidates_sorted_by_product(families: list[_Family]) -> Iterator[tuple[int, _Family, int, int]]:
    """Merge the families by ascending ``x*y``; ties by family order, then ``y``."""
    heap = []
    for fi, fam in enumerate(families):
        for y in range(1, fam.y_max + 1):
            rng = fam.inner_range(y)
            if rng is not None:
                heap.append((rng[0] * y, fi, y, rng[0], rng[1]))
    heapq.heapify(heap)
    while heap:
        prod, fi, y, x, x_hi = heapq.heappop(heap)
        yield prod, families[fi], x, y
        if x < x_hi:
            heapq.heappush(heap, ((x + 1) * y, fi, y, x + 1, x_hi))


def _test_family_candidate(pub, cfg, fam, x, y):
    if math.gcd(x, y) != 1:
        return None, False
    k, d = fam.candidate(x, y)
    if d <= 0 or not cfg.admits(d, pub.n) or not in_window(pub, k, d, fam.regime):
        return None, False
    return _run_test(pub, cfg, k, d), True


def vvt_attack(pub: RsaPublicKey, cfg: AttackConfig) -> Optional[AttackOutcome]:
    """Exhaustive search over ``(r, s)``, ``s`` ascending then ``r`` ascending."""
    cf = cf_expand(Fraction(pub.e, pub.n))
    reg = cfg.constants
    b = search_bounds(pub, cfg, cf)
    m = b.m
    if m + 1 > cf.last:
        raise ShortExpansion(f"expansion of e/n ends at index {cf.last}, need p_{m + 1}")
    notes = ()
    r_max, s_max, prod = b.vvt_r_max, b.vvt_s_max, None
    if r_max is None:
        # too few partial quotients after m: only rs < 2 upper D^2 is known
        notes = ("short expansion: searching rs < 2*upper*D^2",)
        prod = b.product_max
        s_max = prod
    fam = _Family("rs+", pub, reg, (cf.p(m + 1), cf.q(m + 1)), (cf.p(m), cf.q(m)),
                  ("r", "s"), y_max=s_max, x_max=r_max, product_max=prod)
    steps = 0
    for s in range(1, fam.y_max + 1):
        rng = fam.inner_range(s)
        if rng is None:
            continue
        for r in range(rng[0], rng[1] + 1):
            pq, tested = _test_family_candidate(pub, cfg, fam, r, s)
            steps += tested
            if pq:
                k, d = fam.candidate(r, s)
                out = _outcome(pub, cfg, k, d, pq, steps, "vvt",
                               Witness(m, "rs+", {"r": r, "s": s}),
                               family_steps={"rs+": steps}, notes=notes)
                if out:
                    return out
    return None


def variant_attack(pub: RsaPublicKey, cfg: AttackConfig) -> Optional[AttackOutcome]:
    """Search ``rs+``, ``st-`` and ``r's'`` candidates by ascending coefficient product."""
    cf = cf_expand(Fraction(pub.e, pub.n))
    reg = cfg.constants
    b = search_bounds(pub, cfg, cf)
    m = b.m
    if m + 1 > cf.last:
        raise ShortExpansion(f"expansion of e/n ends at index {cf.last}, need p_{m + 1}")
    P = lambda i: (cf.p(i), cf.q(i))  # noqa: E731
    neg = lambda pq: (-pq[0], -pq[1])  # noqa: E731
    notes = []
    families = []
    if b.a2 is None:
        notes.append("short expansion: only the rs+ family, rs < 2*upper*D^2")
        families.append(_Family("rs+", pub, reg, P(m + 1), P(m), ("r", "s"),
                                y_max=b.product_max, product_max=b.product_max))
    else:
        a2 = b.a2
        s1 = b.s1
        if s1 is None:
            notes.append("short expansion: s bounded by the product only")
            s1 = b.product_max
        common = dict(x_max=b.rt_max, y_max=s1, product_max=b.product_max, x_lt_ay=a2)
        # rs+ and st- describe the same fractions (t = a s - r); keep the smaller product
        families.append(_Family("rs+", pub, reg, P(m + 1), P(m), ("r", "s"),
                                half=(a2, False), **common))
        families.append(_Family("st-", pub, reg, neg(P(m + 1)), P(m + 2), ("t", "s"),
                                x_min=1, half=(a2, True), **common))
        if b.a3 is not None:
            families.append(_Family("r's'", pub, reg, P(m + 3), P(m + 2), ("r'", "s'"),
                                    x_max=b.rprime_max, y_max=b.sprime_max))
    steps = 0
    per_family = {f.tag: 0 for f in families}
    for _, fam, x, y in _candidates_sorted_by_product(families):
        pq, tested = _test_family_candidate(pub, cfg, fam, x, y)
        steps += tested
        per_family[fam.tag] += tested
        if pq:
            k, d = fam.candidate(x, y)
            coeffs = {fam.names[1]: y, fam.names[0]: x}
            out = _outcome(pub, cfg, k, d, pq, steps, "variant",
                           Witness(m, fam.tag, coeffs),
                           family_steps=per_family, notes=tuple(notes))
            if out:
                return out
    return None
