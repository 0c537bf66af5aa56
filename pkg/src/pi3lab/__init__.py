"""Verification workbench for central-binomial congruences and series.

Three layers: exact rational / p-adic arithmetic cores, registries of
identities, prime-power congruences and infinite series, and a batch CLI
that renders machine-readable reports.
"""

from .exact import (
    NotInvertible,
    NotPIntegral,
    Rational,
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
from .padic import DivisionByZero, PadicValue, PrecisionExhausted
from .special import (
    bernoulli_mod_p_fast,
    bernoulli_number,
    euler_number,
    fermat_quotient,
    harmonic,
    legendre_symbol,
)
from .identities import (
    IdentityResult,
    UnknownIdentity,
    amdeberhan_t,
    amdeberhan_t_prime,
    list_identities,
    thm13_partial_sum_identity,
    verify_identity,
)
from .congruences import (
    CheckResult,
    PrimeConditionViolated,
    PrimeContext,
    PrimeTooSmall,
    UnknownCheck,
    build_prime_context,
    list_checks,
    run_check,
    run_range,
)
from .series import (
    HighPrecisionInterval,
    TargetUnreachable,
    UnknownSeries,
    compare,
    const_log2,
    const_pi,
    const_zeta3,
    evaluate,
    integral_check,
    list_series,
    partial_sum,
    tail_bound,
)
from .report import exit_code, render_csv, render_json, render_table, summarize

__version__ = "1.0.0"
