"""Domain types shared by the classifier, the search oracle and validation."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .ntheory import is_prime, perfect_square_root


@dataclass(frozen=True)
class FamilyFourN:
    """The equation (4**n)**x + p**y = z**2 for a fixed n >= 1 and odd prime p."""

    n: int
    p: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if self.p % 2 == 0:
            raise ValueError(f"p must be odd, got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got composite {self.p}")

    @property
    def bases(self) -> tuple[int, int]:
        return 4 ** self.n, self.p

    def __str__(self):
        return f"(4^{self.n})^x + {self.p}^y = z^2"


@dataclass(frozen=True)
class Generic:
    """The equation a**x + b**y = z**2."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise ValueError(f"bases must be >= 2, got a={self.a}, b={self.b}")

    @property
    def bases(self) -> tuple[int, int]:
        return self.a, self.b

    def __str__(self):
        return f"{self.a}^x + {self.b}^y = z^2"


EquationInstance = Union[FamilyFourN, Generic]


class SolutionTriple(NamedTuple):
    x: int
    y: int
    z: int


def verify_triple(inst: EquationInstance, t: tuple[int, int, int]) -> bool:
    x, y, z = t
    if min(x, y, z) < 0:
        return False
    a, b = inst.bases
    return a ** x + b ** y == z * z


def checked_triple(inst: EquationInstance, x: int, y: int, z: Optional[int] = None) -> SolutionTriple:
    """Build a triple for ``inst``, recovering z when omitted; raise if it is not a solution."""
    if z is None:
        a, b = inst.bases
        z = perfect_square_root(a ** x + b ** y)
        if z is None:
            raise ValueError(f"{inst}: x={x}, y={y} gives no square")
    t = SolutionTriple(x, y, z)
    if not verify_triple(inst, t):
        raise ValueError(f"{inst}: {tuple(t)} fails substitution")
    return t


class Completeness(str, enum.Enum):
    COMPLETE_BY_THEOREM = "CompleteByTheorem"
    BOX_ONLY = "BoxOnly"


@dataclass(frozen=True)
class SolutionFamily:
    """The parametric family k -> (k, 1, 2**(n*k) + 1).

    Every k is an algebraic member, since (2**(nk))**2 + 1 + 2**(nk+1) is
    (2**(nk) + 1)**2. A member is admissible only when 1 + 2**(nk+1) is
    prime and, if the family is bound to a prime ``p``, equals it.
    """

    n: int
    p: Optional[int] = None
    parameter_name: str = "k"

    @property
    def x_of_k(self) -> str:
        return self.parameter_name

    @property
    def y_of_k(self) -> str:
        return "1"

    @property
    def z_of_k(self) -> str:
        return f"2^({self.n}{self.parameter_name})+1"

    @property
    def admissibility(self) -> str:
        k = self.parameter_name
        if self.p is None:
            return f"1+2^({self.n}{k}+1) is prime"
        return f"{self.p} = 1+2^({self.n}{k}+1)"

    def prime_for(self, k: int) -> int:
        return 1 + 2 ** (self.n * k + 1)

    def member(self, k: int) -> SolutionTriple:
        if k < 0:
            raise ValueError(f"family parameter must be non-negative, got {k}")
        return SolutionTriple(k, 1, 2 ** (self.n * k) + 1)

    def admissible(self, k: int) -> bool:
        if k < 0:
            return False
        q = self.prime_for(k)
        if self.p is not None and q != self.p:
            return False
        return is_prime(q)

    def admissible_k(self) -> Optional[int]:
        """The unique admissible parameter of a family bound to ``p``, if any."""
        if self.p is None:
            raise ValueError("family is not bound to a prime")
        m = self.p - 1
        if m <= 0 or m & (m - 1):
            return None
        e = m.bit_length() - 1
        if (e - 1) % self.n:
            return None
        return (e - 1) // self.n

    def __str__(self):
        k = self.parameter_name
        return f"({k}, 1, {self.z_of_k}) for {self.admissibility}"


def instantiate_family(f: SolutionFamily, k: int) -> SolutionTriple:
    if not f.admissible(k):
        q = f.prime_for(k) if k >= 0 else None
        if k < 0:
            why = "k must be non-negative"
        elif f.p is not None and q != f.p:
            why = f"1+2^({f.n}*{k}+1) = {q} differs from p = {f.p}"
        else:
            why = f"1+2^({f.n}*{k}+1) = {q} is not prime"
        raise ValueError(f"k={k} is not admissible: {why}")
    return f.member(k)


# Derivation steps. Each carries enough data for ``holds`` to re-check its
# claimed identity with exact arithmetic.


@dataclass(frozen=True)
class FactorSplit:
    """z - 2**(nx) = p**v and (z - 2**(nx)) (z + 2**(nx)) = p**y for one solution."""

    v: int
    n: int
    p: int
    triple: SolutionTriple
    note: str = ""

    def holds(self) -> bool:
        x, y, z = self.triple
        h = 2 ** (self.n * x)
        return z - h == self.p ** self.v and (z - h) * (z + h) == self.p ** y


@dataclass(frozen=True)
class CatalanApplication:
    """a**x - b**y = 1."""

    a: int
    b: int
    x: int
    y: int
    note: str = ""

    def holds(self) -> bool:
        return self.a ** self.x - self.b ** self.y == 1


@dataclass(frozen=True)
class FrenicleApplication:
    """No w with w**2 - 1 = p**e for 2 <= e <= exponent."""

    p: int
    exponent: int
    note: str = ""

    def holds(self) -> bool:
        q = self.p
        for _ in range(2, self.exponent + 1):
            q *= self.p
            if perfect_square_root(q + 1) is not None:
                return False
        return True


@dataclass(frozen=True)
class PowerOfTwoMatch:
    """p - 1 = 2**m."""

    m: int
    p: int
    note: str = ""

    def holds(self) -> bool:
        return self.p - 1 == 2 ** self.m


DerivationStep = Union[FactorSplit, CatalanApplication, FrenicleApplication, PowerOfTwoMatch]


@dataclass(frozen=True)
class DerivationCertificate:
    steps: tuple[DerivationStep, ...] = ()
    notes: tuple[str, ...] = ()

    def replay(self) -> bool:
        return all(step.holds() for step in self.steps)


@dataclass(frozen=True)
class SolutionSetDescription:
    instance: EquationInstance
    sporadic: tuple[SolutionTriple, ...]
    families: tuple[SolutionFamily, ...] = ()
    completeness: Completeness = Completeness.BOX_ONLY
    certificate: DerivationCertificate = field(default_factory=DerivationCertificate)

    def __post_init__(self):
        if len(set(self.sporadic)) != len(self.sporadic):
            raise ValueError("duplicate triples in solution set")
        for t in self.sporadic:
            if not verify_triple(self.instance, t):
                raise ValueError(f"{self.instance}: {tuple(t)} fails substitution")
        if isinstance(self.instance, Generic) and self.completeness is Completeness.COMPLETE_BY_THEOREM:
            raise ValueError("generic instances are only ever complete within a box")
