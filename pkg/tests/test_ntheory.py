import pytest
from hypothesis import given, strategies as st

from expdioph import ntheory
from expdioph.ntheory import (
    DETERMINISTIC_LIMIT,
    is_prime,
    isqrt,
    perfect_square_root,
    power_of_two_exponent,
    primality,
    two_adic_split,
)
from oracles import bisect_isqrt, trial_division_is_prime


@pytest.mark.parametrize("m, r", [(0, 0), (25, 5), (10 ** 12 - 1, 999999)])
def test_isqrt_examples(m, r):
    assert isqrt(m) == r


@pytest.mark.parametrize("m, r", [(81, 9), (1, 1), (21, None), (0, 0)])
def test_perfect_square_root_examples(m, r):
    assert perfect_square_root(m) == r


def test_negative_rejected():
    with pytest.raises(ValueError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=1 << 300))
def test_isqrt_brackets(m):
    r = isqrt(m)
    assert r * r <= m < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=1 << 200))
def test_isqrt_matches_bisection(m):
    assert isqrt(m) == bisect_isqrt(m)


@given(st.integers(min_value=0, max_value=1 << 200))
def test_square_root_iff_exact(m):
    r = perfect_square_root(m)
    assert (r is not None) == (isqrt(m) ** 2 == m)
    if r is not None:
        assert r * r == m


@given(st.integers(min_value=0, max_value=1 << 100))
def test_squares_are_recognised(r):
    assert perfect_square_root(r * r) == r


@pytest.mark.parametrize("m, expected", [(17, True), (129, False), (65537, True), (0, False), (1, False), (2, True)])
def test_is_prime_examples(m, expected):
    assert is_prime(m) is expected


def test_is_prime_matches_trial_division_below_1e4():
    for m in range(10 ** 4):
        assert is_prime(m) == trial_division_is_prime(m), m


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_is_prime_matches_trial_division(m):
    assert is_prime(m) == trial_division_is_prime(m)


def test_strong_pseudoprimes_caught():
    # 3215031751 fools bases 2, 3, 5, 7; 3825123056546413051 fools 2..23.
    assert not is_prime(3215031751)
    assert not is_prime(3825123056546413051)
    assert not is_prime(561)


def test_known_large_primes():
    assert primality(2 ** 61 - 1) == (True, False)
    big = 2 ** 127 - 1
    assert primality(big) == (True, True)
    assert primality(big * (2 ** 89 - 1)).is_prime is False


def test_deterministic_limit():
    assert primality(DETERMINISTIC_LIMIT - 59).probabilistic is False  # 2^64 - 59 is prime
    assert primality(DETERMINISTIC_LIMIT - 59).is_prime
    assert primality(DETERMINISTIC_LIMIT + 13).probabilistic is True  # 2^64 + 13 is prime


def test_error_bound_validated():
    with pytest.raises(ValueError):
        primality(2 ** 127 - 1, error_bound=0)


@pytest.mark.parametrize("m, split", [(1, (0, 1)), (16, (4, 1)), (12, (2, 3)), (2 ** 100 * 7, (100, 7))])
def test_two_adic_split_examples(m, split):
    assert two_adic_split(m) == split


def test_two_adic_split_family_prime():
    # p - 1 for p = 17, the n = 3, k = 1 family prime
    assert two_adic_split(17 - 1) == (4, 1)


def test_two_adic_split_zero_rejected():
    with pytest.raises(ValueError):
        two_adic_split(0)


@given(st.integers(min_value=1, max_value=1 << 500))
def test_two_adic_reconstruction(m):
    v, u = two_adic_split(m)
    assert u % 2 == 1
    assert (2 ** v) * u == m


@pytest.mark.parametrize("m, e", [(8, 3), (2, 1), (1, 0), (12, None), (0, None), (2 ** 1000, 1000)])
def test_power_of_two_exponent_examples(m, e):
    assert power_of_two_exponent(m) == e


@given(st.integers(min_value=1, max_value=1 << 300))
def test_power_of_two_iff_odd_part_one(m):
    e = power_of_two_exponent(m)
    assert (e is not None) == (two_adic_split(m).odd_part == 1)
    if e is not None:
        assert 2 ** e == m


def test_is_odd_prime():
    assert ntheory.is_odd_prime(3)
    assert not ntheory.is_odd_prime(2)
    assert not ntheory.is_odd_prime(9)
