"""Acceptance gate: the binding criteria for the whole workbench.

Each test is one criterion, at its stated tolerance and time budget.
"""

import random
import time
from fractions import Fraction

from exprtrees import check_tree, random_tree
from pi3lab.congruences import (
    CheckResult,
    list_checks,
    run_check,
    run_range,
)
from pi3lab.exact import primes_in, reduce_mod, valuation
from pi3lab.identities import list_identities, verify_identity
from pi3lab.report import exit_code
from pi3lab.series import REGISTRY as SERIES, compare, const_pi, integral_check, partial_sum
from pi3lab.special import bernoulli_mod_p_fast, bernoulli_number

ESTABLISHED = ("theorem", "cited", "basic")


def test_acceptance_1_half_central_series_to_150_digits():
    start = time.perf_counter()
    s500 = partial_sum("S-1.3", 500)
    pi = const_pi(170)
    assert pi.radius < Fraction(1, 10 ** 170)
    target = pi ** 3 / 48
    rel_bound = (abs(s500 - target.midpoint) + target.radius) / (
        target.midpoint - target.radius
    )
    assert rel_bound < Fraction(1, 10 ** 150)
    assert time.perf_counter() - start < 10.0


def test_acceptance_2_series_vs_closed_forms():
    start = time.perf_counter()
    for sid in ("S-1.2", "S-1.3", "S-AZ", "S-5.1a", "S-5.1b", "S-5.1c"):
        v = compare(sid, 30)
        assert v.consistent and v.rigor == "rigorous", sid
    v = compare("S-1.1", 12)
    assert v.consistent and v.rigor == "rigorous"
    for sid in ("S-5.2a", "S-5.2b", "S-5.2c", "S-5.2d", "S-5.2e"):
        v = compare(sid, 3)
        assert v.consistent and v.rigor == "heuristic", sid
    assert integral_check(10).consistent
    assert time.perf_counter() - start < 120.0


def test_acceptance_3_established_sweeps():
    start = time.perf_counter()
    ids = [d.id for d in list_checks() if d.status in ESTABLISHED]
    results = run_range(ids, primes_in(5, 499))
    bad = [(r.check_id, r.prime) for r in results if r.passed is False]
    assert not bad, bad

    both = run_range(ids, primes_in(5, 199), strategy="both")
    by_key = {}
    for r in both:
        if r.passed is not None:
            by_key.setdefault((r.check_id, r.prime), []).append(r)
    for key, pair in by_key.items():
        assert len(pair) == 2 and pair[0].passed and pair[1].passed, key
        assert pair[0].lhs_residue == pair[1].lhs_residue, key
        assert pair[0].rhs_residue == pair[1].rhs_residue, key
        # family checks may sample different members per strategy; the
        # members both strategies evaluated must agree residue for residue
        left = {label: (l, r) for label, l, r, _ in pair[0].items}
        right = {label: (l, r) for label, l, r, _ in pair[1].items}
        for label in left.keys() & right.keys():
            assert left[label] == right[label], (key, label)
    assert time.perf_counter() - start < 1800.0


def test_acceptance_4_conjecture_sweep_and_exit_code():
    ids = [d.id for d in list_checks(status="conjecture")]
    results = run_range(ids, primes_in(7, 199))
    bad = [(r.check_id, r.prime) for r in results if r.passed is False]
    assert not bad, bad
    # a conjecture failure (and nothing else failing) must map to exit 2
    doctored = list(results) + [
        CheckResult("J-synthetic", 7, 1, "conjecture", "exact", False)
    ]
    assert exit_code(doctored) == 2


def test_acceptance_5_spot_values():
    r = run_check("C-1.14", 5)
    assert (r.lhs_residue, r.rhs_residue) == (415, 415)
    assert run_check("C-1.15", 5).lhs_residue == 4
    assert run_check("C-3.8", 7).lhs_residue == 20
    assert run_check("C-1.6", 5).lhs_residue == 1
    # the mod p^5 full-range check at p = 5, straight from the definition
    lhs = sum((21 * k + 8) * __import__("math").comb(2 * k, k) ** 3 for k in range(5))
    assert lhs == 32135040
    rhs = 8 * 5 + 16 * 5 ** 4 * bernoulli_number(2)
    assert rhs == 40 + Fraction(5000, 3)
    assert valuation(Fraction(lhs) - rhs, 5) >= 5
    assert run_check("C-1.16", 5).passed


def test_acceptance_6_identities_to_300():
    for d in list_identities():
        res = verify_identity(d.id, 300, seed=0)
        assert res.passed, (d.id, res.first_counterexample)


def test_acceptance_7_fast_paths_and_classical_checks():
    for p in primes_in(5, 101):
        for n in range(2, p - 2, 2):
            b = bernoulli_number(n)
            want = b.numerator * pow(b.denominator, -1, p) % p
            assert bernoulli_mod_p_fast(n, p).residue == want, (n, p)
    for r in run_range(["C-wol"], primes_in(5, 199)):
        assert r.passed, r.prime
    for r in run_range(["C-R5.1"], primes_in(7, 199)):
        assert r.passed, r.prime


def test_acceptance_8_property_sweeps():
    rng = random.Random(2026)
    matches = 0
    for _ in range(10_000):
        p = rng.choice([3, 5, 7, 11, 13])
        outcome = check_tree(random_tree(rng, depth=4), p, digits=10, m=2)
        matches += outcome == "match"
    assert matches > 5_000
    # per-member reflection congruence across a prime sweep
    for p in primes_in(3, 100):
        r = run_check("C-refl", p)
        assert r.passed and len(r.items) == (p - 1) // 2
        assert all(ok for _, _, _, ok in r.items), p
