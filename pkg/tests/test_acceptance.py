"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists one
PASS/FAIL line per criterion.
"""

import json
import random
import time

import pytest

from expdioph import records
from expdioph.classifier import CatalanBox, catalan_box_search, classify, family_prime_scan, frenicle_box_search
from expdioph.model import FamilyFourN, Generic, SolutionFamily, instantiate_family, verify_triple
from expdioph.ntheory import isqrt, perfect_square_root
from expdioph.search import Checkpoint, SearchBox, enumerate_solutions, resume, save_checkpoint, load_checkpoint, search_row
from expdioph.validate import Verdict, cross_validate
from oracles import odd_primes_upto, trial_division_is_prime


@pytest.mark.acceptance(1)
def test_published_solutions_reproduced():
    start = time.perf_counter()
    sixteen, sixty_four, four = classify(2, 3), classify(3, 17), classify(1, 3)
    assert {(1, 2, 5), (0, 1, 2)} <= set(sixteen.sporadic)
    assert (1, 1, 9) in sixty_four.sporadic
    assert (2, 2, 5) in four.sporadic
    for desc in (sixteen, sixty_four, four):
        for t in desc.sporadic:
            assert verify_triple(desc.instance, t)
    assert 16 + 9 == 25 and 1 + 3 == 4 and 64 + 17 == 81
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance(2)
def test_headline_sweep():
    start = time.perf_counter()
    box = SearchBox(6, 12)
    primes = odd_primes_upto(257)
    assert len(primes) == 54
    bad = []
    for n in (1, 2, 3, 4):
        for p in primes:
            report = cross_validate(n, p, box)
            if report.verdict is not Verdict.AGREE:
                bad.append(report.describe())
    assert not bad, "\n".join(bad)
    assert time.perf_counter() - start < 60.0


@pytest.mark.acceptance(3)
def test_acu_regression():
    assert enumerate_solutions(Generic(2, 5), SearchBox(10, 10)) == [(2, 1, 3), (3, 0, 3)]


@pytest.mark.acceptance(4)
def test_catalan_box():
    witnesses = catalan_box_search(CatalanBox(30, 30, 12, 12))
    assert witnesses == [(3, 2, 2, 3)]
    a, b, x, y = witnesses[0]
    assert a ** x - b ** y == 1


@pytest.mark.acceptance(5)
def test_frenicle_box():
    for p in odd_primes_upto(97):
        assert frenicle_box_search(p, 10 ** 12) == [], p


@pytest.mark.acceptance(6)
def test_family_prime_structure():
    rows = family_prime_scan(2, 12)
    assert rows[0].is_prime
    assert not any(r.is_prime for r in rows[1:])
    for n in range(1, 7):
        k_max = (16 - 1) // n
        for r in family_prime_scan(n, k_max):
            e = n * r.k + 1
            assert e <= 16
            assert r.is_prime == trial_division_is_prime(r.p)
            assert r.is_prime == (e in {1, 2, 4, 8, 16}), (n, r)


@pytest.mark.acceptance(7)
def test_large_family_member():
    t = instantiate_family(SolutionFamily(3, 65537), 5)
    assert t == (5, 1, 32769)
    assert 2 ** 30 + 65537 == 32769 ** 2
    assert verify_triple(FamilyFourN(3, 65537), t)


@pytest.mark.acceptance(8)
def test_property_suites(tmp_path):
    rng = random.Random(1657)
    for _ in range(10 ** 4):
        m = rng.getrandbits(rng.randint(1, 256))
        r = isqrt(m)
        assert r * r <= m < (r + 1) * (r + 1)
        assert (perfect_square_root(m) is not None) == (r * r == m)
        assert perfect_square_root(r * r) == r

    def as_bytes(inst, ts):
        return "".join(json.dumps(records.solution_record(inst, t)) + "\n" for t in ts).encode()

    for inst, box in ((Generic(2, 5), SearchBox(14, 14)), (FamilyFourN(1, 3), SearchBox(12, 12))):
        outs = {as_bytes(inst, enumerate_solutions(inst, box, workers=w)) for w in (1, 2, 8)}
        assert len(outs) == 1

    inst, box = FamilyFourN(2, 3), SearchBox(8, 8)
    scratch = enumerate_solutions(inst, box)
    for i in range(20):
        cp = Checkpoint(inst, box)
        for x in rng.sample(range(box.x_max + 1), rng.randint(0, box.x_max + 1)):
            cp = Checkpoint(inst, box, cp.completed_rows | {x},
                            tuple(sorted(cp.found + tuple(search_row(*inst.bases, x, box.y_max)))))
        path = tmp_path / f"cp{i}.json"
        save_checkpoint(cp, path)
        assert resume(load_checkpoint(path)) == scratch
