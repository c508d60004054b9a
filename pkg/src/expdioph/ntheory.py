"""Exact integer primitives: square roots, powers of two, primality."""

from __future__ import annotations

import math
import random
from typing import NamedTuple, Optional

# Bases 2..37 make Miller-Rabin exact below 3.3e24; we only promise 2^64.
DETERMINISTIC_LIMIT = 1 << 64
DEFAULT_ERROR_BOUND = 2.0 ** -128

_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = _WITNESSES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class TwoAdicSplit(NamedTuple):
    valuation: int
    odd_part: int


class Primality(NamedTuple):
    is_prime: bool
    probabilistic: bool


def _check_natural(m: int) -> None:
    if m < 0:
        raise ValueError(f"expected a non-negative integer, got {m}")


def isqrt(m: int) -> int:
    """Largest r with r*r <= m."""
    _check_natural(m)
    return math.isqrt(m)


def perfect_square_root(m: int) -> Optional[int]:
    _check_natural(m)
    r = math.isqrt(m)
    return r if r * r == m else None


def two_adic_split(m: int) -> TwoAdicSplit:
    """Write m = 2**valuation * odd_part with odd_part odd."""
    if m <= 0:
        raise ValueError(f"two_adic_split needs m >= 1, got {m}")
    v = (m & -m).bit_length() - 1
    return TwoAdicSplit(v, m >> v)


def power_of_two_exponent(m: int) -> Optional[int]:
    """Return e with m == 2**e, or None."""
    if m <= 0 or m & (m - 1):
        return None
    return m.bit_length() - 1


def _strong_probable_prime(m: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, m)
    if x == 1 or x == m - 1:
        return True
    for _ in range(s - 1):
        x = x * x % m
        if x == m - 1:
            return True
    return False


def primality(m: int, error_bound: float = DEFAULT_ERROR_BOUND) -> Primality:
    """Miller-Rabin test reporting whether the verdict is exact.

    Below ``DETERMINISTIC_LIMIT`` a fixed witness set makes the answer exact.
    Above it, enough random rounds are run for a false "prime" to occur with
    probability at most ``error_bound`` (each round errs with probability
    <= 1/4). The bases are drawn from an RNG seeded by ``m`` so repeated runs
    agree.
    """
    _check_natural(m)
    if m < 2:
        return Primality(False, False)
    for q in _SMALL_PRIMES:
        if m == q:
            return Primality(True, False)
        if m % q == 0:
            return Primality(False, False)

    d, s = m - 1, 0
    while not d & 1:
        d >>= 1
        s += 1

    if m < DETERMINISTIC_LIMIT:
        ok = all(_strong_probable_prime(m, a, d, s) for a in _WITNESSES)
        return Primality(ok, False)

    if not 0 < error_bound < 1:
        raise ValueError("error_bound must lie in (0, 1)")
    rounds = max(1, math.ceil(-math.log(error_bound, 4)))
    if not all(_strong_probable_prime(m, a, d, s) for a in _WITNESSES):
        return Primality(False, False)
    rng = random.Random(m)
    for _ in range(rounds):
        if not _strong_probable_prime(m, rng.randrange(2, m - 1), d, s):
            return Primality(False, False)
    return Primality(True, True)


def is_prime(m: int, error_bound: float = DEFAULT_ERROR_BOUND) -> bool:
    return primality(m, error_bound).is_prime


def is_odd_prime(m: int) -> bool:
    return m % 2 == 1 and is_prime(m)
