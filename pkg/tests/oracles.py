"""Slow, obviously-correct reference implementations used only by the tests."""


def trial_division_is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def bisect_isqrt(m):
    lo, hi = 0, m + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= m:
            lo = mid
        else:
            hi = mid
    return lo


def brute_solutions(a, b, x_max, y_max):
    out = []
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            s = a ** x + b ** y
            r = bisect_isqrt(s)
            if r * r == s:
                out.append((x, y, r))
    return out


def odd_primes_upto(limit):
    return [q for q in range(3, limit + 1, 2) if trial_division_is_prime(q)]
