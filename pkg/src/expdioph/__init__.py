"""Exact solutions of (4^n)^x + p^y = z^2 for odd primes p, checked against brute force."""

from .classifier import (
    CatalanBox,
    CatalanWitness,
    FamilyPrimeRow,
    FrenicleWitness,
    catalan_box_search,
    classify,
    family_prime_scan,
    frenicle_box_search,
)
from .model import (
    Completeness,
    DerivationCertificate,
    FamilyFourN,
    Generic,
    SolutionFamily,
    SolutionSetDescription,
    SolutionTriple,
    instantiate_family,
    verify_triple,
)
from .search import Checkpoint, SearchBox, enumerate_solutions, resume
from .validate import ValidationReport, Verdict, cross_validate, sweep

__all__ = [
    "CatalanBox",
    "CatalanWitness",
    "Checkpoint",
    "Completeness",
    "DerivationCertificate",
    "FamilyFourN",
    "FamilyPrimeRow",
    "FrenicleWitness",
    "Generic",
    "SearchBox",
    "SolutionFamily",
    "SolutionSetDescription",
    "SolutionTriple",
    "ValidationReport",
    "Verdict",
    "catalan_box_search",
    "classify",
    "cross_validate",
    "enumerate_solutions",
    "family_prime_scan",
    "frenicle_box_search",
    "instantiate_family",
    "resume",
    "sweep",
    "verify_triple",
]
