"""Cross-check the closed-form classifier against the brute-force oracle."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .classifier import classify
from .model import EquationInstance, SolutionSetDescription, SolutionTriple, instantiate_family
from .ntheory import is_prime
from .search import SearchBox, enumerate_solutions

DEFAULT_SIZE_BUDGET_BITS = 4096


class Verdict(str, enum.Enum):
    AGREE = "Agree"
    DISAGREE = "Disagree"


@dataclass(frozen=True)
class ValidationReport:
    instance: EquationInstance
    box: SearchBox
    classifier_in_box: tuple[SolutionTriple, ...]
    oracle: tuple[SolutionTriple, ...]
    missing_from_classifier: tuple[SolutionTriple, ...]
    extra_in_classifier: tuple[SolutionTriple, ...]
    verdict: Verdict

    def __post_init__(self):
        object.__setattr__(self, "verdict", Verdict(self.verdict))
        agree = not self.missing_from_classifier and not self.extra_in_classifier
        if agree != (self.verdict is Verdict.AGREE):
            raise ValueError("verdict does not match the difference lists")

    @property
    def agree(self) -> bool:
        return self.verdict is Verdict.AGREE

    def describe(self) -> str:
        a, b = self.instance.bases
        lines = [f"{self.instance} in x <= {self.box.x_max}, y <= {self.box.y_max}: {self.verdict.value}"]
        for label, ts in (("missing from classifier", self.missing_from_classifier),
                          ("extra in classifier", self.extra_in_classifier)):
            for x, y, z in ts:
                lines.append(f"  {label}: ({x},{y},{z}): {a}^{x} + {b}^{y} = {a ** x + b ** y}, z^2 = {z * z}")
        return "\n".join(lines)


def classifier_solutions_in_box(desc: SolutionSetDescription, box: SearchBox) -> list[SolutionTriple]:
    """Sporadic triples plus every admissible family member, restricted to ``box``."""
    found = {t for t in desc.sporadic if box.contains(t)}
    for family in desc.families:
        for k in range(box.x_max + 1):
            if family.admissible(k):
                t = instantiate_family(family, k)
                if box.contains(t):
                    found.add(t)
    return sorted(found)


def cross_validate(n: int, p: int, box: SearchBox, workers: Optional[int] = 1,
                   size_budget_bits: int = DEFAULT_SIZE_BUDGET_BITS) -> ValidationReport:
    if (p ** box.y_max).bit_length() > size_budget_bits:
        raise ValueError(f"{p}^{box.y_max} exceeds the {size_budget_bits}-bit size budget")
    desc = classify(n, p)
    claimed = classifier_solutions_in_box(desc, box)
    oracle = enumerate_solutions(desc.instance, box, workers=workers)
    claimed_set, oracle_set = set(claimed), set(oracle)
    missing = tuple(sorted(oracle_set - claimed_set))
    extra = tuple(sorted(claimed_set - oracle_set))
    return ValidationReport(
        instance=desc.instance,
        box=box,
        classifier_in_box=tuple(claimed),
        oracle=tuple(oracle),
        missing_from_classifier=missing,
        extra_in_classifier=extra,
        verdict=Verdict.AGREE if not missing and not extra else Verdict.DISAGREE,
    )


def _validate_pair(args):
    n, p, box, budget = args
    return cross_validate(n, p, box, size_budget_bits=budget)


def sweep(n_range: Sequence[int], p_list: Sequence[int], box: SearchBox, workers: Optional[int] = 1,
          size_budget_bits: int = DEFAULT_SIZE_BUDGET_BITS) -> list[ValidationReport]:
    """One report per (n, p), n outer, in input order."""
    for p in p_list:
        if p % 2 == 0 or not is_prime(p):
            raise ValueError(f"sweep needs odd primes; {p} is not one")
    for n in n_range:
        if n < 1:
            raise ValueError(f"sweep needs positive n; got {n}")
    tasks = [(n, p, box, size_budget_bits) for n in n_range for p in p_list]
    if workers == 1 or len(tasks) <= 1:
        return [_validate_pair(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_validate_pair, tasks, chunksize=8))
