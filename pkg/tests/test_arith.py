import math

import pytest
from hypothesis import given, strategies as st

from cyclicdensity import InvalidArgument, euler_phi, factorize, is_prime
from cyclicdensity.arith import is_power_of


def test_phi_small_values():
    # first values of the totient, plus phi(12) = 4 which the coset checks lean on
    expected = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 7: 6, 8: 4, 9: 6,
                10: 4, 12: 4, 16: 8, 255: 128, 256: 128}
    for k, want in expected.items():
        assert euler_phi(k) == want


def test_phi_rejects_nonpositive():
    with pytest.raises(InvalidArgument):
        euler_phi(0)
    with pytest.raises(InvalidArgument):
        euler_phi(-3)


def test_factorize_reconstructs():
    for k in (1, 2, 12, 97, 360, 1024, 3 ** 5 * 7):
        f = factorize(k)
        assert math.prod(p ** e for p, e in f.items()) == k
        assert all(is_prime(p) for p in f)


def test_is_prime_small():
    for k in range(-2, 300):
        naive = k > 1 and all(k % d for d in range(2, k))
        assert is_prime(k) == naive


def test_is_power_of():
    assert is_power_of(1, 2) and is_power_of(64, 2) and is_power_of(27, 3)
    assert not is_power_of(24, 2) and not is_power_of(0, 2)


@given(st.integers(min_value=1, max_value=500), st.integers(min_value=1, max_value=500))
def test_phi_multiplicative_on_coprimes(a, b):
    if math.gcd(a, b) == 1:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


@given(st.integers(min_value=1, max_value=300))
def test_phi_by_direct_count(k):
    assert euler_phi(k) == sum(1 for i in range(1, k + 1) if math.gcd(i, k) == 1)


@given(st.integers(min_value=1, max_value=200))
def test_divisor_phi_sum(n):
    # sum of phi(d) over divisors d of n equals n
    assert sum(euler_phi(d) for d in range(1, n + 1) if n % d == 0) == n
