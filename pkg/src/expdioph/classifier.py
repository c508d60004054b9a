"""Closed-form solution sets of (4**n)**x + p**y = z**2, plus bounded checks
of the two classical results the characterization leans on.

For odd prime p the solutions are:

* y = 1, x = k whenever p = 1 + 2**(n*k + 1), giving z = 2**(n*k) + 1;
* (2/n, 2, 5) when p = 3 and n divides 2, from 3**2 - 2**3 = 1;

and nothing else. With y >= 1 the factors z - 2**(nx) and z + 2**(nx) of
p**y differ by 2**(nx+1), so both being powers of an odd p forces the small
one to be 1. Then p**y - 2**(nx+1) = 1, which Mihailescu's theorem settles
for y >= 2. With y = 0, z**2 - 4**(nx) = 1 has no solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .model import (
    CatalanApplication,
    Completeness,
    DerivationCertificate,
    FactorSplit,
    FamilyFourN,
    FrenicleApplication,
    PowerOfTwoMatch,
    SolutionFamily,
    SolutionSetDescription,
    SolutionTriple,
    checked_triple,
)
from .ntheory import perfect_square_root, power_of_two_exponent, primality

DEFAULT_EXPONENT_CAP = 10 ** 6
# Frenicle steps replay exponents up to this many bits of p**e.
_FRENICLE_REPLAY_BITS = 4096


@dataclass(frozen=True)
class CatalanBox:
    a_max: int
    b_max: int
    x_max: int
    y_max: int

    def __post_init__(self):
        if self.a_max < 2 or self.b_max < 2:
            raise ValueError("Catalan box needs a_max, b_max >= 2")
        if self.x_max < 2 or self.y_max < 2:
            raise ValueError("Catalan box needs x_max, y_max >= 2")


class CatalanWitness(NamedTuple):
    a: int
    b: int
    x: int
    y: int


class FrenicleWitness(NamedTuple):
    x: int
    exponent: int


class FamilyPrimeRow(NamedTuple):
    k: int
    p: int
    is_prime: bool
    probabilistic: bool


def classify(n: int, p: int, exponent_cap: int = DEFAULT_EXPONENT_CAP) -> SolutionSetDescription:
    """Return every solution of (4**n)**x + p**y = z**2 with a replayable certificate.

    Raises ValueError for n < 1 or for p that is even or composite.
    """
    inst = FamilyFourN(n, p)
    solutions: list[SolutionTriple] = []
    families: list[SolutionFamily] = []
    steps = []
    notes = [
        "z - 2^(nx) and z + 2^(nx) divide p^y and differ by 2^(nx+1); "
        "p is odd, so z - 2^(nx) = p^0 and p^y = 2^(nx+1) + 1",
        "y = 0: z^2 - 4^(nx) = 1 would need two squares at distance 1 with the smaller positive",
    ]
    completeness = Completeness.COMPLETE_BY_THEOREM

    # y >= 2: p**y - 2**(nx+1) = 1 with both exponents >= 2 only as 3**2 - 2**3.
    steps.append(CatalanApplication(3, 2, 2, 3, note="y >= 2 forces p = 3, y = 2, nx = 2"))
    if p == 3 and 2 % n == 0:
        solutions.append(checked_triple(inst, 2 // n, 2, 5))
    if n == 1:
        notes.append("(2,2,5) solves only n = 1 and (1,2,5) only n = 2; both come from nx = 2")

    # y = 1: p = 1 + 2**(nk+1).
    m = power_of_two_exponent(p - 1)
    if m is not None and m > exponent_cap:
        notes.append(f"p - 1 = 2^{m} exceeds exponent cap {exponent_cap}; family branch unevaluated")
        completeness = Completeness.BOX_ONLY
    elif m is not None:
        steps.append(PowerOfTwoMatch(m, p, note="p - 1 is a power of two"))
        if (m - 1) % n == 0:
            family = SolutionFamily(n, p)
            k = (m - 1) // n
            solutions.append(checked_triple(inst, *family.member(k)))
            families.append(family)
            if k == 0:
                notes.append("k = 0 gives 1 + 3 = 2^2, the x = 0 solution for p = 3")
        else:
            notes.append(f"p - 1 = 2^{m} but n = {n} does not divide {m - 1}")

    # x = 0, y >= 2: z**2 - 1 = p**y.
    e_max = max(2, min(64, _FRENICLE_REPLAY_BITS // p.bit_length()))
    steps.append(FrenicleApplication(p, e_max, note="x = 0 with y >= 2 has no solution"))

    solutions.sort()
    for t in solutions:
        if t.y > 0:
            steps.append(FactorSplit(0, n, p, t, note="odd p and the 2-power gap force v = 0"))

    return SolutionSetDescription(
        instance=inst,
        sporadic=tuple(solutions),
        families=tuple(families),
        completeness=completeness,
        certificate=DerivationCertificate(tuple(steps), tuple(notes)),
    )


def family_prime_scan(n: int, k_max: int) -> list[FamilyPrimeRow]:
    rows = []
    for k in range(k_max + 1):
        q = 1 + 2 ** (n * k + 1)
        verdict = primality(q)
        rows.append(FamilyPrimeRow(k, q, verdict.is_prime, verdict.probabilistic))
    return rows


def catalan_box_search(box: CatalanBox) -> list[CatalanWitness]:
    """All a**x - b**y = 1 with 2 <= a <= a_max, 2 <= b <= b_max and exponents in [2, max]."""
    powers: dict[int, list[tuple[int, int]]] = {}
    for b in range(2, box.b_max + 1):
        q = b
        for y in range(2, box.y_max + 1):
            q *= b
            powers.setdefault(q, []).append((b, y))
    found = []
    for a in range(2, box.a_max + 1):
        q = a
        for x in range(2, box.x_max + 1):
            q *= a
            for b, y in powers.get(q - 1, ()):
                found.append(CatalanWitness(a, b, x, y))
    return sorted(found)


def frenicle_box_search(p: int, max_value: int) -> list[FrenicleWitness]:
    """All (x, e) with e >= 2, p**e <= max_value and x**2 - 1 = p**e."""
    if p % 2 == 0 or not primality(p).is_prime:
        raise ValueError(f"p must be an odd prime, got {p}")
    found = []
    q, e = p * p, 2
    while q <= max_value:
        r = perfect_square_root(q + 1)
        if r is not None:
            found.append(FrenicleWitness(r, e))
        q *= p
        e += 1
    return found
