"""Deterministic RSA test keys with a prescribed secret-exponent size.

Not for production use: the generator is a seeded ``random.Random``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .attacks import RsaPublicKey
from .cf import iroot

__all__ = ["is_probable_prime", "random_prime", "KeyGenSpec", "RsaKeySet", "gen_key"]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int, rounds: int = 32, rng: Optional[random.Random] = None) -> bool:
    """Miller-Rabin.  Deterministic below 3.3e24; seeded random bases above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    r, u = 0, n - 1
    while u % 2 == 0:
        r += 1
        u //= 2
    if n < 3317044064679887385961981:
        bases = _SMALL_PRIMES
    else:
        rng = rng or random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(rounds)]
    for a in bases:
        x = pow(a, u, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(lo: int, hi: int, rng: random.Random) -> int:
    """A prime drawn from ``[lo, hi)``; raises if none is found quickly."""
    if hi - lo < 2:
        raise ValueError(f"empty prime range [{lo}, {hi})")
    for _ in range(100 * max(hi.bit_length(), 8) ** 2):
        c = rng.randrange(lo, hi) | 1
        if lo <= c < hi and is_probable_prime(c):
            return c
    raise ValueError(f"no prime found in [{lo}, {hi})")


@dataclass(frozen=True)
class KeyGenSpec:
    """What key to build.

    Set exactly one of ``d`` (exact exponent), ``d_bits``, ``D_target``
    (``d`` is the largest admissible value below ``D_target * n^(1/4)``) or
    ``D_max`` (``d`` uniform in ``[2, D_max * n^(1/4))``).  ``primes``
    forces the factors and ignores ``modulus_bits``.
    """

    modulus_bits: int = 64
    d: Optional[int] = None
    d_bits: Optional[int] = None
    D_target: Optional[Fraction] = None
    D_max: Optional[Fraction] = None
    balance: int = 2
    seed: int = 0
    primes: Optional[tuple[int, int]] = None

    def __post_init__(self):
        given = [x is not None for x in (self.d, self.d_bits, self.D_target, self.D_max)]
        if sum(given) != 1:
            raise ValueError("set exactly one of d, d_bits, D_target, D_max")
        if self.balance not in (2, 8):
            raise ValueError("balance must be 2 (p<q<2p) or 8 (p<q<8p)")
        if self.primes is None and self.modulus_bits < 32:
            raise ValueError("modulus_bits must be at least 32")


@dataclass(frozen=True)
class RsaKeySet:
    n: int
    e: int
    d: int
    p: int
    q: int
    k: int
    phi: int

    @property
    def public(self) -> RsaPublicKey:
        return RsaPublicKey(self.n, self.e)

    @property
    def D4(self) -> Fraction:
        """``(d / n^(1/4))^4``."""
        return Fraction(self.d**4, self.n)


def _primes(spec: KeyGenSpec, rng: random.Random) -> tuple[int, int]:
    if spec.primes is not None:
        p, q = sorted(spec.primes)
        return p, q
    bits = spec.modulus_bits
    half = bits // 2 if spec.balance == 2 else (bits - 1) // 2
    for _ in range(10_000):
        p = random_prime(1 << (half - 1), 1 << half, rng)
        q = random_prime(p + 1, spec.balance * p, rng)
        if (p * q).bit_length() == bits:
            return p, q
    raise ValueError(f"could not build a {bits}-bit modulus")


def _below(coeff: Fraction, n: int) -> int:
    """Largest integer strictly below ``coeff * n^(1/4)``."""
    x = Fraction(coeff) ** 4 * n
    t = iroot(x, 4)
    return t - 1 if t**4 == x else t


def _pick_d(spec: KeyGenSpec, n: int, phi: int, rng: random.Random) -> int:
    if spec.d is not None:
        if math.gcd(spec.d, phi) != 1:
            raise ValueError(f"d = {spec.d} is not invertible modulo phi(n)")
        return spec.d
    if spec.D_target is not None:
        d = _below(spec.D_target, n)
        while d >= 2 and math.gcd(d, phi) != 1:
            d -= 1
        if d < 2:
            raise ValueError("D_target too small for any valid d")
        return d
    if spec.d_bits is not None:
        if spec.d_bits < 2:
            raise ValueError("d_bits must be at least 2")
        lo, hi = 1 << (spec.d_bits - 1), 1 << spec.d_bits
    else:
        lo, hi = 2, _below(spec.D_max, n) + 1
        if hi <= lo:
            raise ValueError("D_max too small for any valid d")
    for _ in range(10_000):
        d = rng.randrange(lo, hi)
        if math.gcd(d, phi) == 1:
            return d
    raise ValueError("no d coprime to phi(n) in the requested range")


def gen_key(spec: KeyGenSpec) -> RsaKeySet:
    rng = random.Random(spec.seed)
    p, q = _primes(spec, rng)
    n, phi = p * q, (p - 1) * (q - 1)
    d = _pick_d(spec, n, phi, rng)
    e = pow(d, -1, phi)
    if e <= 1:
        raise ValueError(f"d = {d} gives a degenerate public exponent")
    k = (e * d - 1) // phi
    return RsaKeySet(n=n, e=e, d=d, p=p, q=q, k=k, phi=phi)
