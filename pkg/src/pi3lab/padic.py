"""Fixed-precision p-adic numbers: valuation plus unit residue.

A ``PadicValue`` represents p^v * u where u is a unit known modulo p^N,
i.e. the whole value is known modulo p^(v+N).  N is the number of provably
correct p-adic digits and is tracked conservatively through arithmetic:
multiplication and inversion keep min(N_a, N_b); addition aligns valuations
and subtracts any digits lost to cancellation.

Exact zero is a distinguished element with valuation +infinity, so "is
exactly zero" is never confused with "zero to the known precision".
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import NotPIntegral, ResidueClass, mod_inv, valuation


class PrecisionExhausted(ArithmeticError):
    """A result's provable precision dropped below one digit.

    Callers should retry with a larger guard precision or fall back to the
    exact rational path.
    """


class DivisionByZero(ZeroDivisionError):
    """Inversion or division by the exact p-adic zero."""


class PadicValue:
    """Immutable p-adic value with honestly tracked precision."""

    __slots__ = ("prime", "valuation", "unit", "precision")

    def __init__(self, prime: int, val, unit: int, precision: int):
        self.prime = prime
        self.valuation = val
        self.unit = unit
        self.precision = precision

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "PadicValue":
        return cls(p, math.inf, 0, math.inf)

    @classmethod
    def from_rational(cls, r, p: int, n: int) -> "PadicValue":
        """Exact rational -> p-adic value with N = n known digits."""
        if n < 1:
            raise ValueError("precision must be at least 1")
        r = Fraction(r)
        if r == 0:
            return cls.zero(p)
        v = valuation(r, p)
        pn = p ** n
        num = r.numerator
        den = r.denominator
        if v > 0:
            num //= p ** v
        elif v < 0:
            den //= p ** (-v)
        unit = num * mod_inv(den, pn) % pn
        return cls(p, v, unit, n)

    @classmethod
    def from_int(cls, a: int, p: int, n: int) -> "PadicValue":
        return cls.from_rational(Fraction(a), p, n)

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.unit == 0 and self.valuation == math.inf

    def _coerce(self, other):
        if isinstance(other, PadicValue):
            if other.prime != self.prime:
                raise ValueError("mixed primes in p-adic arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            n = self.precision if self.precision != math.inf else 1
            return PadicValue.from_rational(Fraction(other), self.prime, n)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "PadicValue":
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        p = a.prime
        v = min(a.valuation, b.valuation)
        # both summands are known modulo p^known
        known = min(a.valuation + a.precision, b.valuation + b.precision)
        digits = known - v
        if digits < 1:
            raise PrecisionExhausted("no overlapping known digits in addition")
        mod = p ** digits
        s = (a.unit * p ** (a.valuation - v) + b.unit * p ** (b.valuation - v)) % mod
        if s == 0:
            # all known digits cancelled; the true value has valuation >= known
            # but cannot be normalised at this precision
            raise PrecisionExhausted(
                f"cancellation consumed all {digits} known digits"
            )
        shift = 0
        while s % p == 0:
            s //= p
            shift += 1
        n_out = digits - shift
        return PadicValue(p, v + shift, s % p ** n_out, n_out)

    __radd__ = __add__

    def __neg__(self) -> "PadicValue":
        if self.is_zero:
            return self
        pn = self.prime ** self.precision
        return PadicValue(self.prime, self.valuation, (-self.unit) % pn, self.precision)

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other) -> "PadicValue":
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self
        if a.is_zero or b.is_zero:
            return PadicValue.zero(a.prime)
        n = min(a.precision, b.precision)
        pn = a.prime ** n
        return PadicValue(a.prime, a.valuation + b.valuation, a.unit * b.unit % pn, n)

    __rmul__ = __mul__

    def inv(self) -> "PadicValue":
        if self.is_zero:
            raise DivisionByZero("inverse of p-adic zero")
        pn = self.prime ** self.precision
        return PadicValue(
            self.prime, -self.valuation, mod_inv(self.unit, pn), self.precision
        )

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self * b.inv()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b * self.inv()

    def __pow__(self, k: int) -> "PadicValue":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        if self.is_zero:
            return self if k > 0 else PadicValue(self.prime, 0, 1, 1)
        pn = self.prime ** self.precision
        return PadicValue(
            self.prime,
            self.valuation * k,
            pow(self.unit, k, pn),
            self.precision,
        )

    # -- extraction ---------------------------------------------------

    def to_residue(self, m: int) -> ResidueClass:
        """Canonical residue of the value mod p^m.

        Requires v >= 0 and v + N >= m (enough known digits).
        """
        if self.is_zero:
            return ResidueClass(self.prime, m, 0)
        if self.valuation < 0:
            raise NotPIntegral(
                f"valuation {self.valuation} < 0: not reducible mod p^{m}"
            )
        if self.valuation >= m:
            return ResidueClass(self.prime, m, 0)
        if self.valuation + self.precision < m:
            raise PrecisionExhausted(
                f"only {self.valuation + self.precision} digits known, need {m}"
            )
        return ResidueClass(
            self.prime, m, self.prime ** self.valuation * self.unit % self.prime ** m
        )

    def __repr__(self):
        if self.is_zero:
            return f"PadicValue(0, p={self.prime})"
        return (
            f"PadicValue({self.prime}^{self.valuation} * {self.unit}"
            f" [{self.precision} digits])"
        )
