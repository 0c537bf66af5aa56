"""Exact combinatorial identities verified over ranges of n.

Every registered identity is an equality of rationals, independent of any
prime; verification is exact Fraction equality with zero tolerance.  Some
identities carry a free rational parameter which is sampled (they are
polynomial in the parameter, so sampling beyond the degree certifies them).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .exact import binomial, binomial_rational, fraction_sum
from .special import harmonic


class UnknownIdentity(KeyError):
    pass


@dataclass
class IdentityDescriptor:
    id: str
    description: str
    # evaluate(n, rng) -> list of (label, lhs, rhs); rng used for parameter samples
    evaluate: Callable[[int, random.Random], List[Tuple[str, Fraction, Fraction]]]


@dataclass
class IdentityResult:
    identity_id: str
    n_max: int
    passed: bool
    checked: int
    first_counterexample: Optional[Tuple[int, str]] = None


def amdeberhan_t(n: int) -> Fraction:
    """t_n = (1/(4n C(2n,n))) * sum_{k=0}^{n-1} (21k+8) C(2k,k)^3."""
    if n < 1:
        raise ValueError("n must be positive")
    s = sum((21 * k + 8) * binomial(2 * k, k) ** 3 for k in range(n))
    return Fraction(s, 4 * n * binomial(2 * n, n))


def amdeberhan_t_prime(n: int) -> int:
    """t_n' = sum_{k=0}^{n-1} C(n+k-1, k)^2."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(binomial(n + k - 1, k) ** 2 for k in range(n))


def thm13_partial_sum_identity(big_n: int) -> bool:
    """Closed form of sum_{k=1}^{N} C(2k,k) H_k / 4^k, checked exactly.

    The sum equals (-1)^N * binom(-3/2, N) * (H_N - 2) + 2.
    """
    lhs = fraction_sum(
        Fraction(binomial(2 * k, k), 4 ** k) * harmonic(k) for k in range(1, big_n + 1)
    )
    rhs = (-1) ** big_n * binomial_rational(Fraction(-3, 2), big_n) * (
        harmonic(big_n) - 2
    ) + 2
    return lhs == rhs


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 50))


def _pairs_3_2(n, rng):
    # the identity is polynomial in x, so the integer samples already
    # certify it for each n; rational samples are extra coverage and are
    # drawn only while binom(x, n) denominators stay cheap
    xs = [Fraction(v) for v in range(-3, 4)]
    if n <= 60:
        xs += [_random_rational(rng) for _ in range(4)]
    out = []
    for x in xs:
        lhs = Fraction(0)
        b = Fraction(1)  # binom(x, k), updated by (x - k)/(k + 1)
        for k in range(n + 1):
            lhs += (-1) ** k * b
            b *= Fraction(x - k, k + 1)
        rhs = (-1) ** n * binomial_rational(x - 1, n)
        out.append((f"x={x}", lhs, rhs))
    return out


def _pairs_3_3(n, rng):
    lhs = fraction_sum(
        Fraction(binomial(n, k) * (-1) ** (k - 1), k) for k in range(1, n + 1)
    )
    return [("", lhs, harmonic(n))]


def _pairs_3_4(n, rng):
    lhs = fraction_sum(
        Fraction(binomial(n, k) * (-1) ** (k - 1), k) * harmonic(k)
        for k in range(1, n + 1)
    )
    return [("", lhs, harmonic(n, 2))]


def _pairs_3_4p(n, rng):
    lhs = fraction_sum(
        binomial(n, k) * (-1) ** k * harmonic(k, 2) for k in range(1, n + 1)
    )
    return [("", lhs, -harmonic(n) / n)]


def _pairs_3_7(n, rng):
    lhs = fraction_sum(
        Fraction(binomial(n, k) * (-2) ** k, k) * harmonic(k)
        for k in range(1, n + 1)
    )
    rhs = -2 * fraction_sum(
        (harmonic(n) - harmonic(n - k)) / k for k in range(1, n + 1, 2)
    )
    return [("", lhs, rhs)]


def _pairs_3_19(n, rng):
    out = []
    for m in range(1, 9):
        lhs = fraction_sum(
            Fraction(binomial(n, k) * (-1) ** k, k + m) for k in range(n + 1)
        )
        rhs = Fraction(1, m * binomial(m + n, m))
        out.append((f"m={m}", lhs, rhs))
    return out


def _pairs_4_1(n, rng):
    lhs = fraction_sum(
        binomial(n, k) * binomial(n + k, k) * (-1) ** k * harmonic(k)
        for k in range(n + 1)
    )
    return [("", lhs, 2 * (-1) ** n * harmonic(n))]


def _pairs_4_2(n, rng):
    lhs = fraction_sum(
        binomial(n, k) * binomial(n + k, k) * (-1) ** k * harmonic(k, 2)
        for k in range(n + 1)
    )
    rhs = 2 * (-1) ** (n - 1) * fraction_sum(
        Fraction((-1) ** k, k * k) for k in range(1, n + 1)
    )
    return [("", lhs, rhs)]


def _pairs_4_6(n, rng):
    lhs = sum(binomial(n, k) ** 2 for k in range(n + 1))
    return [("", Fraction(lhs), Fraction(binomial(2 * n, n)))]


def _pairs_4_7(n, rng):
    lhs = fraction_sum(
        binomial(n, k) * Fraction(binomial(2 * k, k), (-4) ** k)
        for k in range(n + 1)
    )
    return [("", lhs, Fraction(binomial(2 * n, n), 4 ** n))]


def _pairs_cv(n, rng):
    out = []
    samples = [(Fraction(-1, 2), Fraction(-1, 2))]
    if n <= 50:
        samples += [(_random_rational(rng), _random_rational(rng)) for _ in range(3)]
    for x, y in samples:
        bx = [Fraction(1)]
        by = [Fraction(1)]
        for k in range(n):
            bx.append(bx[-1] * Fraction(x - k, k + 1))
            by.append(by[-1] * Fraction(y - k, k + 1))
        lhs = fraction_sum(bx[k] * by[n - k] for k in range(n + 1))
        rhs = binomial_rational(x + y, n)
        out.append((f"x={x},y={y}", lhs, rhs))
    return out


def _pairs_4_5(n, rng):
    return [("", amdeberhan_t(n), Fraction(amdeberhan_t_prime(n)))]


def _pairs_thm13(n, rng):
    lhs = fraction_sum(
        Fraction(binomial(2 * k, k), 4 ** k) * harmonic(k) for k in range(1, n + 1)
    )
    rhs = (-1) ** n * binomial_rational(Fraction(-3, 2), n) * (harmonic(n) - 2) + 2
    return [("", lhs, rhs)]


REGISTRY: Dict[str, IdentityDescriptor] = {
    d.id: d
    for d in [
        IdentityDescriptor(
            "I-3.2",
            "alternating partial row sum of binom(x, k), free rational x",
            _pairs_3_2,
        ),
        IdentityDescriptor("I-3.3", "signed binomial sum over 1/k equals H_n", _pairs_3_3),
        IdentityDescriptor(
            "I-3.4", "signed binomial sum over H_k/k equals second-order H_n", _pairs_3_4
        ),
        IdentityDescriptor(
            "I-3.4p",
            "binomial-inversion partner of I-3.4: sum equals -H_n/n",
            _pairs_3_4p,
        ),
        IdentityDescriptor(
            "I-3.7", "(-2)^k H_k/k binomial sum as odd-index harmonic differences", _pairs_3_7
        ),
        IdentityDescriptor(
            "I-3.19", "partial-fraction binomial sum 1/(m*binom(m+n,m)), m = 1..8", _pairs_3_19
        ),
        IdentityDescriptor("I-4.1", "Osburn-Schneider style H_k sum", _pairs_4_1),
        IdentityDescriptor("I-4.2", "Osburn-Schneider style second-order sum", _pairs_4_2),
        IdentityDescriptor("I-4.6", "sum of squared binomials equals central binomial", _pairs_4_6),
        IdentityDescriptor("I-4.7", "binomial transform of C_k/(-4)^k", _pairs_4_7),
        IdentityDescriptor("I-CV", "Chu-Vandermonde with rational arguments", _pairs_cv),
        IdentityDescriptor("I-4.5", "t_n equals t_n' (both closed forms)", _pairs_4_5),
        IdentityDescriptor(
            "I-thm13", "closed form of the C_k H_k / 4^k partial sums", _pairs_thm13
        ),
    ]
}


def list_identities() -> List[IdentityDescriptor]:
    return [REGISTRY[k] for k in sorted(REGISTRY)]


def verify_identity(
    identity_id: str, n_max: int, seed: int = 0
) -> IdentityResult:
    """Check one identity exactly for all 1 <= n <= n_max."""
    if identity_id not in REGISTRY:
        raise UnknownIdentity(identity_id)
    desc = REGISTRY[identity_id]
    rng = random.Random(seed)
    checked = 0
    for n in range(1, n_max + 1):
        for label, lhs, rhs in desc.evaluate(n, rng):
            checked += 1
            if lhs != rhs:
                where = f"n={n}" + (f", {label}" if label else "")
                return IdentityResult(identity_id, n_max, False, checked, (n, where))
    return IdentityResult(identity_id, n_max, True, checked)
