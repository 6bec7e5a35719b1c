from fractions import Fraction

import pytest

from cfrsa.attacks import RsaPublicKey

N = 7978886869909
P, Q = 2323259, 3434351
E1 = 3594320245477
E2 = 4603830998027


@pytest.fixture
def ex1():
    return RsaPublicKey(N, E1)


@pytest.fixture
def ex2():
    return RsaPublicKey(N, E2)


@pytest.fixture
def alpha1():
    return Fraction(E1, N)


@pytest.fixture
def alpha2():
    return Fraction(E2, N)
