from fractions import Fraction

import pytest

from pi3lab.exact import primes_in, valuation
from pi3lab.special import (
    bernoulli_mod_p_fast,
    bernoulli_number,
    euler_number,
    fermat_quotient,
    harmonic,
    legendre_symbol,
)

# classical table values, cross-checked against an independent bignum run
EULER = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765]
BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
}


def test_euler_numbers():
    for n, e in enumerate(EULER):
        assert euler_number(n) == e


def test_bernoulli_numbers():
    for n, b in BERNOULLI.items():
        assert bernoulli_number(n) == b
    for n in range(3, 40, 2):
        assert bernoulli_number(n) == 0


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(3, 2) == Fraction(49, 36)
    total = sum(Fraction(1, k) for k in range(1, 100))
    assert harmonic(99) == total


def test_fermat_quotient():
    assert fermat_quotient(5) == 3
    assert fermat_quotient(7) == 9
    for p in primes_in(3, 60):
        q = fermat_quotient(p)
        assert q.denominator == 1


def test_legendre_symbol_brute_force():
    for p in primes_in(3, 40):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            expected = 1 if a in squares else -1
            assert legendre_symbol(a, p) == expected
        assert legendre_symbol(p, p) == 0


def test_legendre_symbol_minus_one():
    # (-1/p) = (-1)^((p-1)/2)
    for p in primes_in(3, 60):
        assert legendre_symbol(-1 % p, p) == (-1) ** ((p - 1) // 2)


def test_bernoulli_mod_p_fast_matches_exact():
    for p in primes_in(5, 31):
        for n in range(2, p - 2, 2):
            b = bernoulli_number(n)
            assert valuation(b, p) >= 0
            want = b.numerator * pow(b.denominator, -1, p) % p
            assert bernoulli_mod_p_fast(n, p).residue == want


def test_bernoulli_mod_p_fast_rejects_bad_index():
    with pytest.raises(ValueError):
        bernoulli_mod_p_fast(3, 11)
    with pytest.raises(ValueError):
        bernoulli_mod_p_fast(10, 11)
