"""Per-exponent statistics over a range of ``d`` for a fixed modulus.

For each ``d`` coprime to ``phi(n)`` the public exponent is ``e = d^-1 mod
phi`` and ``k/d`` is located relative to the convergents of ``e/n``, giving
the coefficients the Verheul--van Tilborg search (``r s``) and the variant
search (``min(r s, s t, r' s')``) would need.  Ratios against
``D^2 = d^2 / sqrt(n)`` are kept in fixed point (``10^-12``) so sums and
maxima are exact integers and independent of how the range is split.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .attacks import BALANCED, REGIMES, Regime, RsaPublicKey, select_m
from .cf import CFExpansion, cf_expand, isqrt

__all__ = [
    "SCALE",
    "THRESHOLD",
    "SweepRow",
    "SweepStats",
    "family_products",
    "sweep_rows",
    "sweep",
    "vvt_sweep",
    "variant_sweep",
    "write_csv",
    "QuotientHistogram",
    "quotient_distribution",
]

SCALE = 10**12
THRESHOLD = 1000
KINDS = ("vvt", "variant")


@dataclass(frozen=True)
class SweepRow:
    d: int
    family: str
    coefficients: tuple[int, int]
    product: int
    ratio_scaled: int  # floor(product * sqrt(n) / d^2 * SCALE), up to 1 ulp

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.ratio_scaled, SCALE)


@dataclass
class SweepStats:
    count: int = 0
    total_scaled: int = 0
    max_scaled: int = -1
    argmax_d: int = 0
    over_threshold_count: int = 0
    skipped: int = 0
    threshold: int = THRESHOLD

    @property
    def mean_ratio(self) -> Fraction:
        return Fraction(self.total_scaled, self.count * SCALE)

    @property
    def max_ratio(self) -> Fraction:
        return Fraction(self.max_scaled, SCALE)

    def add(self, row: SweepRow, n: int) -> None:
        self.count += 1
        self.total_scaled += row.ratio_scaled
        if row.ratio_scaled > self.max_scaled:
            self.max_scaled, self.argmax_d = row.ratio_scaled, row.d
        # exact: product * sqrt(n) > threshold * d^2
        if row.product and row.product**2 * n > (self.threshold * row.d * row.d) ** 2:
            self.over_threshold_count += 1

    def merge(self, other: "SweepStats") -> "SweepStats":
        """Combine with the stats of a later, disjoint ``d`` range."""
        out = SweepStats(
            count=self.count + other.count,
            total_scaled=self.total_scaled + other.total_scaled,
            over_threshold_count=self.over_threshold_count + other.over_threshold_count,
            skipped=self.skipped + other.skipped,
            threshold=self.threshold,
        )
        # ties keep the earlier range, as a sequential pass would
        best = other if other.max_scaled > self.max_scaled else self
        out.max_scaled, out.argmax_d = best.max_scaled, best.argmax_d
        return out

    def summary(self) -> dict:
        return {
            "count": self.count,
            "skipped_non_coprime": self.skipped,
            "mean_ratio": f"{float(self.mean_ratio):.6f}",
            "max_ratio": f"{float(self.max_ratio):.6f}",
            "argmax_d": str(self.argmax_d),
            "over_threshold_count": self.over_threshold_count,
            "threshold": self.threshold,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), indent=2, sort_keys=True)


def family_products(cf: CFExpansion, pub: RsaPublicKey, k: int, d: int,
                    regime: Regime = BALANCED) -> dict[str, tuple[tuple[int, int], int]]:
    """Coefficients of ``k/d`` in each family that contains it.

    Keys are ``"rs+"`` (always), ``"st-"`` (when ``t = s a_{m+2} - r > 0``)
    and ``"r's'"`` (when ``k/d <= p_{m+2}/q_{m+2}``); values are
    ``((x, y), product)``.
    """
    m = select_m(cf, pub, regime)
    p0, q0, p1, q1 = cf.p(m), cf.q(m), cf.p(m + 1), cf.q(m + 1)
    # m is odd, so p_{m+1} q_m - p_m q_{m+1} = -1
    r = d * p0 - k * q0
    s = k * q1 - d * p1
    out = {"rs+": ((r, s), r * s)}
    if m + 2 <= cf.last:
        t = s * cf.a(m + 2) - r
        if t > 0:
            out["st-"] = ((s, t), s * t)
        elif m + 3 <= cf.last:
            p2, q2, p3, q3 = cf.p(m + 2), cf.q(m + 2), cf.p(m + 3), cf.q(m + 3)
            rp = d * p2 - k * q2
            sp = k * q3 - d * p3
            out["r's'"] = ((rp, sp), rp * sp)
    return out


def _classify(n, phi, sqrt_scaled, regime, d):
    e = pow(d, -1, phi)
    k = (e * d - 1) // phi
    pub = RsaPublicKey(n, e)
    fams = family_products(cf_expand(Fraction(e, n)), pub, k, d, regime)
    rows = {}
    (coef, prod) = fams["rs+"]
    rows["vvt"] = SweepRow(d, "rs+", coef, prod, prod * sqrt_scaled // (d * d))
    best = min(fams.items(), key=lambda kv: kv[1][1])  # dict order breaks ties
    fam, (coef, prod) = best
    rows["variant"] = SweepRow(d, fam, coef, prod, prod * sqrt_scaled // (d * d))
    return rows


def _check(n, p, q, d_from, d_to):
    if p * q != n:
        raise ValueError("p * q must equal n")
    if d_from > d_to or d_from < 2:
        raise ValueError("need 2 <= d_from <= d_to")


def sweep_rows(n: int, p: int, q: int, d_from: int, d_to: int, kind: str = "vvt",
               regime: str = "balanced") -> Iterator[SweepRow]:
    """One row per ``d`` in ``[d_from, d_to]`` coprime to ``phi(n)``."""
    _check(n, p, q, d_from, d_to)
    phi = (p - 1) * (q - 1)
    sqrt_scaled = isqrt(n * SCALE * SCALE)
    reg = REGIMES[regime]
    for d in range(d_from, d_to + 1):
        if math.gcd(d, phi) == 1:
            yield _classify(n, phi, sqrt_scaled, reg, d)[kind]


def _sweep_chunk(args):
    n, p, q, d_from, d_to, kinds, regime = args
    phi = (p - 1) * (q - 1)
    sqrt_scaled = isqrt(n * SCALE * SCALE)
    reg = REGIMES[regime]
    stats = {kind: SweepStats() for kind in kinds}
    for d in range(d_from, d_to + 1):
        if math.gcd(d, phi) != 1:
            for st in stats.values():
                st.skipped += 1
            continue
        rows = _classify(n, phi, sqrt_scaled, reg, d)
        for kind in kinds:
            stats[kind].add(rows[kind], n)
    return stats


def sweep(n: int, p: int, q: int, d_from: int, d_to: int,
          kinds: Sequence[str] = KINDS, workers: int = 1,
          regime: str = "balanced") -> dict[str, SweepStats]:
    """Stats for several kinds in one pass over ``[d_from, d_to]``.

    With ``workers > 1`` the range is cut into contiguous chunks run in
    separate processes and merged in range order, so the result does not
    depend on ``workers``.
    """
    _check(n, p, q, d_from, d_to)
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown sweep kind {kind!r}")
    kinds = tuple(kinds)
    chunks = max(1, workers) * 4 if workers > 1 else 1
    step = -(-(d_to - d_from + 1) // chunks)
    jobs = [(n, p, q, lo, min(lo + step - 1, d_to), kinds, regime)
            for lo in range(d_from, d_to + 1, step)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_sweep_chunk, jobs))
    else:
        parts = [_sweep_chunk(job) for job in jobs]
    out = {}
    for kind in kinds:
        acc = parts[0][kind]
        for part in parts[1:]:
            acc = acc.merge(part[kind])
        out[kind] = acc
    return out


def vvt_sweep(n: int, p: int, q: int, d_range: tuple[int, int], workers: int = 1) -> SweepStats:
    """``r s / D^2`` over ``d`` in the inclusive range."""
    return sweep(n, p, q, d_range[0], d_range[1], ("vvt",), workers)["vvt"]


def variant_sweep(n: int, p: int, q: int, d_range: tuple[int, int], workers: int = 1) -> SweepStats:
    """``min(r s, s t, r' s') / D^2`` over ``d`` in the inclusive range."""
    return sweep(n, p, q, d_range[0], d_range[1], ("variant",), workers)["variant"]


def write_csv(rows: Iterable[SweepRow], fh) -> int:
    """Write ``d, family, coefficients, ratio`` rows; returns the row count."""
    w = csv.writer(fh)
    w.writerow(["d", "family", "coefficients", "ratio"])
    count = 0
    for row in rows:
        w.writerow([row.d, row.family, " ".join(map(str, row.coefficients)),
                    f"{row.ratio_scaled // SCALE}.{row.ratio_scaled % SCALE:012d}"])
        count += 1
    return count


@dataclass
class QuotientHistogram:
    """Counts of partial quotients ``a_i`` for ``i >= 1``."""

    counts: dict = field(default_factory=dict)
    total: int = 0

    def frequency(self, value: int) -> float:
        return self.counts.get(value, 0) / self.total

    def tail(self, x: int) -> float:
        """Empirical frequency of ``a_i >= x``."""
        return sum(c for v, c in self.counts.items() if v >= x) / self.total

    @staticmethod
    def reference(value: int) -> float:
        """Gauss-Kuzmin probability of ``a_i = value``."""
        return math.log2(1 + 1 / (value * (value + 2)))

    @staticmethod
    def reference_tail(x: int) -> float:
        """Probability of ``a_i >= x``: ``log2(1 + 1/x)``."""
        return math.log2(1 + 1 / x)

    def as_dict(self) -> dict:
        return asdict(self)


def quotient_distribution(sample: Iterable[CFExpansion]) -> QuotientHistogram:
    hist = QuotientHistogram()
    for cf in sample:
        for a in cf.quotients[1:]:
            hist.counts[a] = hist.counts.get(a, 0) + 1
            hist.total += 1
    if hist.total == 0:
        raise ValueError("sample has no partial quotients past a_0")
    return hist
