import math
from fractions import Fraction

import pytest

from pi3lab.exact import (
    NotInvertible,
    ResidueClass,
    binomial,
    binomial_rational,
    congruent,
    fraction_sum,
    mod_inv,
    primes_in,
    reduce_mod,
    valuation,
)


def test_binomial_matches_comb():
    for n in range(0, 20):
        for k in range(0, n + 1):
            assert binomial(n, k) == math.comb(n, k)
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_binomial_rational_values():
    # binom(-1/2, k) = (-1/4)^k C(2k, k)
    for k in range(10):
        assert binomial_rational(Fraction(-1, 2), k) == Fraction(-1, 4) ** k * binomial(
            2 * k, k
        )
    assert binomial_rational(Fraction(7), 3) == 35
    assert binomial_rational(Fraction(3, 2), 0) == 1


def test_valuation():
    assert valuation(Fraction(12), 2) == 2
    assert valuation(Fraction(1, 9), 3) == -2
    assert valuation(Fraction(50, 7), 5) == 2
    assert valuation(Fraction(0), 5) == math.inf


def test_mod_inv():
    assert mod_inv(3, 7) == 5
    assert mod_inv(2, 625) * 2 % 625 == 1
    with pytest.raises(NotInvertible):
        mod_inv(5, 625)


def test_primes_in():
    assert primes_in(2, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_in(24, 28) == []
    assert primes_in(5, 5) == [5]


def test_reduce_mod_rational():
    # 1/3 mod 25: inverse of 3 is 17
    r = reduce_mod(Fraction(1, 3), 5, 2)
    assert r == ResidueClass(5, 2, 17)
    assert r == 17


def test_congruent_handles_fractions():
    assert congruent(Fraction(1, 3), Fraction(42, 1), 5, 2)  # 17 + 25 = 42
    assert not congruent(Fraction(1, 3), 18, 5, 2)
    # both sides non-integral but difference highly divisible
    assert congruent(Fraction(1, 5), Fraction(1, 5) + 7 ** 3, 7, 3)


def test_fraction_sum_agrees_with_naive():
    terms = [Fraction((-1) ** k, 2 * k + 1) for k in range(200)]
    assert fraction_sum(terms) == sum(terms)
    assert fraction_sum([]) == 0
    assert fraction_sum([Fraction(3, 7)]) == Fraction(3, 7)
