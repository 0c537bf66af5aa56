import math
from fractions import Fraction

import pytest

from pi3lab.exact import NotPIntegral
from pi3lab.padic import DivisionByZero, PadicValue, PrecisionExhausted


def test_from_rational_round_trip():
    v = PadicValue.from_rational(Fraction(50, 3), 5, 4)
    assert v.valuation == 2
    assert v.to_residue(3).residue == 50 * pow(3, -1, 125) % 125
    w = PadicValue.from_rational(Fraction(1, 10), 5, 3)
    assert w.valuation == -1


def test_zero_is_distinguished():
    z = PadicValue.zero(7)
    assert z.is_zero
    assert z.valuation == math.inf
    assert (z + z).is_zero
    assert (z * PadicValue.from_int(3, 7, 2)).is_zero
    assert z.to_residue(4).residue == 0
    with pytest.raises(DivisionByZero):
        z.inv()


def test_addition_tracks_cancellation():
    a = PadicValue.from_int(1 + 5 ** 3, 5, 6)
    b = PadicValue.from_int(-1, 5, 6)
    s = a + b  # = 5^3, three digits cancelled
    assert s.valuation == 3
    assert s.to_residue(4).residue == 125


def test_total_cancellation_raises():
    a = PadicValue.from_int(1, 5, 3)
    b = PadicValue.from_int(-1 + 5 ** 3, 5, 3)
    with pytest.raises(PrecisionExhausted):
        a + b


def test_mul_div_pow():
    p = 7
    a = PadicValue.from_rational(Fraction(3, 49), p, 5)
    b = PadicValue.from_rational(Fraction(14, 5), p, 5)
    prod = a * b
    assert prod.valuation == -1
    assert ((prod / b) * 49).to_residue(3) == PadicValue.from_int(3, p, 5).to_residue(3)
    sq = b ** 2
    assert sq.to_residue(4) == PadicValue.from_rational(Fraction(196, 25), p, 5).to_residue(4)
    inv = b ** -1
    assert (inv * b).to_residue(4).residue == 1


def test_scalar_coercion():
    a = PadicValue.from_int(2, 5, 6)
    assert (a + 3).to_residue(3).residue == 5
    assert (1 - a).to_residue(3).residue == (-1) % 125
    assert (Fraction(1, 2) * a).to_residue(3).residue == 1
    assert (10 / a).to_residue(3).residue == 5


def test_mixed_primes_rejected():
    a = PadicValue.from_int(1, 5, 3)
    b = PadicValue.from_int(1, 7, 3)
    with pytest.raises(ValueError):
        a + b


def test_to_residue_guards():
    a = PadicValue.from_rational(Fraction(1, 5), 5, 8)
    with pytest.raises(NotPIntegral):
        a.to_residue(2)
    b = PadicValue.from_int(3, 5, 2)
    with pytest.raises(PrecisionExhausted):
        b.to_residue(4)
    # high valuation means the residue is simply 0
    c = PadicValue.from_int(5 ** 6, 5, 1)
    assert c.to_residue(3).residue == 0


def test_precision_never_overstated():
    # (a + b) claims digits only where both inputs are known
    a = PadicValue.from_int(12, 5, 2)
    b = PadicValue.from_int(7, 5, 6)
    s = a + b
    assert s.valuation + s.precision <= 2
