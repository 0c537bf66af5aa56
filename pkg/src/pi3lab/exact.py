"""Exact integer/rational arithmetic primitives.

Everything here is exact: unbounded integers, fully reduced fractions
(``fractions.Fraction``), binomial coefficients with integer or rational
upper argument, a small prime sieve, and reduction of p-integral rationals
modulo prime powers.  No floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

# The reference number type for all exact quantities in this package.
Rational = Fraction

RationalLike = Union[int, Fraction]

#: Sentinel valuation of the zero rational (v_p(0) = +infinity).
INF = math.inf


class NotPIntegral(ArithmeticError):
    """Raised when a rational with p in its denominator is reduced mod p^m."""


class NotInvertible(ArithmeticError):
    """Raised when inverting a residue that shares a factor with the modulus."""


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient n!/(k!(n-k)!); 0 when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_rational(x: RationalLike, k: int) -> Fraction:
    """Binomial coefficient with arbitrary rational upper argument.

    binom(x, k) = x (x-1) ... (x-k+1) / k!
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    num = Fraction(1)
    for j in range(k):
        num *= x - j
    return num / math.factorial(k)


def primes_in(lo: int, hi: int) -> List[int]:
    """All primes p with lo <= p <= hi, ascending (sieve of Eratosthenes)."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(hi) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


def valuation(r: RationalLike, p: int):
    """p-adic valuation of a rational; INF for zero.

    v_p(a/b) = v_p(|a|) - v_p(b); the sign of r does not matter.
    """
    r = Fraction(r)
    if r == 0:
        return INF
    v = 0
    num = abs(r.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = r.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Canonical representative of base**exp modulo modulus."""
    return pow(base, exp, modulus)


def mod_inv(a: int, modulus: int) -> int:
    """Inverse of a modulo modulus; NotInvertible when gcd(a, modulus) > 1."""
    try:
        return pow(a, -1, modulus)
    except ValueError as exc:
        raise NotInvertible(f"{a} is not invertible mod {modulus}") from exc


class ResidueClass:
    """Canonical residue of a p-integral rational modulo p^m."""

    __slots__ = ("prime", "exponent", "residue")

    def __init__(self, prime: int, exponent: int, residue: int):
        modulus = prime ** exponent
        self.prime = prime
        self.exponent = exponent
        self.residue = residue % modulus

    @property
    def modulus(self) -> int:
        return self.prime ** self.exponent

    def __eq__(self, other) -> bool:
        if isinstance(other, ResidueClass):
            return (self.prime, self.exponent, self.residue) == (
                other.prime,
                other.exponent,
                other.residue,
            )
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.prime, self.exponent, self.residue))

    def __int__(self) -> int:
        return self.residue

    def __repr__(self):
        return f"ResidueClass({self.residue} mod {self.prime}^{self.exponent})"


def reduce_mod(r: RationalLike, p: int, m: int) -> ResidueClass:
    """Reduce a p-integral rational modulo p^m.

    Writes r = p^v * a/b with p coprime to a and b and returns the residue
    p^v * a * b^{-1} mod p^m.  Raises NotPIntegral when v_p(r) < 0.
    """
    r = Fraction(r)
    if r == 0:
        return ResidueClass(p, m, 0)
    v = valuation(r, p)
    if v < 0:
        raise NotPIntegral(f"{r} has negative {p}-adic valuation {v}")
    modulus = p ** m
    if v >= m:
        return ResidueClass(p, m, 0)
    num = r.numerator // p ** v
    den = r.denominator  # coprime to p since v >= 0 and r is reduced
    res = p ** v * (num % modulus) * mod_inv(den, modulus) % modulus
    return ResidueClass(p, m, res)


def congruent(a: RationalLike, b: RationalLike, p: int, m: int) -> bool:
    """a == b (mod p^m) in the p-adic sense: v_p(a - b) >= m.

    Defined via the valuation of the difference, so it also covers pairs
    whose difference is p-integral even though a and b separately are not.
    """
    return valuation(Fraction(a) - Fraction(b), p) >= m


def fraction_sum(terms: Iterable[RationalLike]) -> Fraction:
    """Exact sum of rationals by pairwise (tree) reduction.

    Equivalent to sum(terms) but far cheaper for long lists whose running
    denominators grow, e.g. harmonic-style sums with 10^4+ terms.
    """
    items: Sequence = list(terms)
    if not items:
        return Fraction(0)
    items = [Fraction(t) for t in items]
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]
