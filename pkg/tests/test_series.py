from fractions import Fraction

import pytest

from pi3lab.series import (
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

# 40-digit references from an independent bignum computation
PI_40 = Fraction("3.141592653589793238462643383279502884197".replace(".", "")) / 10 ** 39
LOG2_40 = Fraction("0.6931471805599453094172321214581765680755".replace(".", "")) / 10 ** 40
ZETA3_40 = Fraction("1.202056903159594285399738161511449990765".replace(".", "")) / 10 ** 39


@pytest.mark.parametrize(
    "func,reference",
    [(const_pi, PI_40), (const_log2, LOG2_40), (const_zeta3, ZETA3_40)],
)
def test_constants_contain_reference(func, reference):
    iv = func(35)
    assert iv.radius < Fraction(1, 10 ** 35)
    assert iv.lower <= reference <= iv.upper


def test_constants_scale_with_digits():
    for d in (10, 50, 120):
        assert const_pi(d).radius < Fraction(1, 10 ** d)


def test_interval_arithmetic():
    a = HighPrecisionInterval(Fraction(3), Fraction(1, 10))
    b = HighPrecisionInterval(Fraction(-2), Fraction(1, 5))
    assert (a + b).midpoint == 1
    assert (a + b).radius == Fraction(3, 10)
    prod = a * b
    assert prod.midpoint == -6
    assert prod.radius == 3 * Fraction(1, 5) + 2 * Fraction(1, 10) + Fraction(1, 50)
    assert (a ** 2).midpoint == 9
    assert (a - a).midpoint == 0
    assert (a / 2).radius == Fraction(1, 20)
    assert a.overlaps(HighPrecisionInterval(Fraction(31, 10), Fraction(0)))
    assert not a.overlaps(b)
    with pytest.raises(ValueError):
        HighPrecisionInterval(Fraction(0), Fraction(-1))


def test_registry():
    ids = [d.id for d in list_series()]
    assert len(ids) == 12
    assert ids == sorted(ids)
    with pytest.raises(UnknownSeries):
        partial_sum("S-9.9", 3)


def test_partial_sums_small_exact():
    # first terms written out by hand
    assert partial_sum("S-1.1", 2) == 1 - Fraction(1, 27)
    assert partial_sum("S-1.1", 6) == Fraction(40298106682, 41601569625)
    assert partial_sum("S-1.3", 4) == Fraction(26, 45)
    assert partial_sum("S-AZ", 1) == Fraction(13, 8)
    assert partial_sum("S-1.2", 1) == 1


def test_tail_bounds():
    # declared closed form for the 2^k/(k C_k) weighted series
    assert tail_bound("S-1.3", 10) == Fraction(8, 1024)
    # alternating: bound is the first omitted term
    assert tail_bound("S-1.1", 3) == Fraction(1, 7 ** 3)
    # bounds shrink with n
    for sid in ("S-1.2", "S-AZ", "S-5.1b"):
        assert tail_bound(sid, 40) < tail_bound(sid, 20)


def test_tail_bounds_are_honest():
    # |sum_to(2n) - sum_to(n)| can never exceed the claimed bound at n
    for sid in ("S-1.1", "S-1.2", "S-1.3", "S-AZ", "S-5.1a", "S-5.1b", "S-5.1c"):
        for n in (8, 16, 32):
            gap = abs(partial_sum(sid, 2 * n) - partial_sum(sid, n))
            assert gap <= tail_bound(sid, n), (sid, n)


def test_evaluate_rigorous_radius():
    ev = evaluate("S-1.2", 25)
    assert ev.rigor == "rigorous"
    assert ev.value.radius < Fraction(1, 10 ** 25)


def test_compare_consistent():
    for sid in ("S-1.2", "S-AZ"):
        v = compare(sid, 20)
        assert v.consistent and v.rigor == "rigorous"
        assert v.margin <= 1.0


def test_compare_flags_wrong_target():
    wrong = HighPrecisionInterval(Fraction(1), Fraction(1, 10 ** 25))
    v = compare("S-1.2", 20, target=wrong)
    assert not v.consistent
    assert v.margin > 1.0


def test_power_law_is_heuristic_and_capped():
    ev = evaluate("S-5.2e", 3)
    assert ev.rigor == "heuristic"
    with pytest.raises(TargetUnreachable):
        evaluate("S-5.2a", 12)


def test_integral_check():
    v = integral_check(10)
    assert v.consistent
    assert v.rigor == "heuristic"
    with pytest.raises(TargetUnreachable):
        integral_check(13)
