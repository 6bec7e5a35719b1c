import math
import random
from fractions import Fraction

import pytest

from cfrsa.keygen import KeyGenSpec, gen_key, is_probable_prime, random_prime

from conftest import E1, N, P, Q


def naive_prime(n):
    return n >= 2 and all(n % f for f in range(2, math.isqrt(n) + 1))


def test_miller_rabin_matches_trial_division():
    for n in range(-3, 20000):
        assert is_probable_prime(n) == naive_prime(n), n


def test_miller_rabin_known():
    assert is_probable_prime(P) and is_probable_prime(Q)
    assert not is_probable_prime(N)
    assert not is_probable_prime(3215031751)  # strong pseudoprime to 2, 3, 5, 7
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime((2**61 - 1) * (2**89 - 1))


def test_random_prime_in_range():
    rng = random.Random(1)
    for _ in range(50):
        p = random_prime(1000, 2000, rng)
        assert 1000 <= p < 2000 and naive_prime(p)
    with pytest.raises(ValueError):
        random_prime(24, 25, rng)


def test_example_1_rebuilt():
    key = gen_key(KeyGenSpec(d=313, primes=(Q, P)))
    assert (key.n, key.e, key.p, key.q, key.k) == (N, E1, P, Q, 141)


@pytest.mark.parametrize("bits", [64, 128, 256])
def test_modulus_shape(bits):
    for seed in range(5):
        key = gen_key(KeyGenSpec(bits, d_bits=bits // 8, seed=seed))
        assert key.n.bit_length() == bits
        assert key.p < key.q < 2 * key.p
        assert key.d.bit_length() == bits // 8
        assert key.e * key.d - key.k * key.phi == 1


def test_wide_balance():
    key = gen_key(KeyGenSpec(96, d_bits=20, balance=8, seed=2))
    assert key.p < key.q < 8 * key.p


def test_D_options():
    for seed in range(10):
        key = gen_key(KeyGenSpec(80, D_target=Fraction(3), seed=seed))
        assert key.D4 < 81 and (key.d + 1) ** 4 >= 81 * key.n or math.gcd(key.d + 1, key.phi) > 1
        key = gen_key(KeyGenSpec(80, D_max=Fraction(1, 2), seed=seed))
        assert 16 * key.D4 < 1


def test_deterministic():
    spec = KeyGenSpec(128, D_max=Fraction(5), seed=42)
    assert gen_key(spec) == gen_key(spec)
    assert gen_key(spec) != gen_key(KeyGenSpec(128, D_max=Fraction(5), seed=43))


@pytest.mark.parametrize("kwargs", [
    dict(),
    dict(d=3, d_bits=5),
    dict(d_bits=5, balance=3),
    dict(d_bits=5, modulus_bits=16),
])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        KeyGenSpec(**kwargs)


def test_non_invertible_d():
    with pytest.raises(ValueError):
        gen_key(KeyGenSpec(d=2, primes=(P, Q)))
