"""Euler numbers, Bernoulli numbers, harmonic numbers and friends.

Exact values come from the classical recursions with memoized, append-only
tables; ``bernoulli_mod_p_fast`` is a power-sum fast path for prime sweeps
and must always be cross-checkable against the exact recursion.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import List

from .exact import ResidueClass, binomial

_lock = threading.Lock()

# Append-only caches; readers may use any already-published prefix.
_euler: List[int] = [1]
_bernoulli: List[Fraction] = [Fraction(1)]
_harmonic1: List[Fraction] = [Fraction(0)]
_harmonic2: List[Fraction] = [Fraction(0)]


def euler_number(n: int) -> int:
    """Euler number E_n.

    E_0 = 1 and sum over even k of binom(n, k) E_{n-k} = 0 for n >= 1.
    Odd-index values are all zero.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_euler):
        with _lock:
            for m in range(len(_euler), n + 1):
                # the k = 0 term of the defining sum is E_m itself
                acc = 0
                for k in range(2, m + 1, 2):
                    acc += binomial(m, k) * _euler[m - k]
                _euler.append(-acc)
    return _euler[n]


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention.

    B_0 = 1 and sum_{k=0}^{n} binom(n+1, k) B_k = 0 for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_bernoulli):
        with _lock:
            for m in range(len(_bernoulli), n + 1):
                acc = Fraction(0)
                for k in range(m):
                    acc += binomial(m + 1, k) * _bernoulli[k]
                _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


def harmonic(n: int, order: int = 1) -> Fraction:
    """Harmonic number of the given order: sum_{0 < k <= n} 1/k^order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    table = _harmonic1 if order == 1 else _harmonic2
    if n >= len(table):
        with _lock:
            for m in range(len(table), n + 1):
                table.append(table[m - 1] + Fraction(1, m ** order))
    return table[n]


def fermat_quotient(p: int) -> Fraction:
    """Fermat quotient q_p(2) = (2^{p-1} - 1)/p (an integer for odd primes)."""
    return Fraction(2 ** (p - 1) - 1, p)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via the Euler criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def bernoulli_mod_p_fast(n: int, p: int) -> ResidueClass:
    """Residue of B_n mod p for even 2 <= n <= p-3, via power sums.

    Uses sum_{x=1}^{p-1} x^n == p * B_n (mod p^2); in this index range the
    denominator of B_n is coprime to p (von Staudt-Clausen), so the residue
    is well defined.
    """
    if n % 2 or not (2 <= n <= p - 3):
        raise ValueError("need even n with 2 <= n <= p-3")
    p2 = p * p
    s = 0
    for x in range(1, p):
        s += pow(x, n, p2)
    s %= p2
    assert s % p == 0, "power-sum congruence violated"
    return ResidueClass(p, 1, s // p)


def table_sizes() -> dict:
    """Current lengths of the memoized tables (diagnostic)."""
    return {
        "euler": len(_euler),
        "bernoulli": len(_bernoulli),
        "harmonic1": len(_harmonic1),
        "harmonic2": len(_harmonic2),
    }
