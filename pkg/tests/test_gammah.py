import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hspoly.errors import PoleError, ZeroStepError
from hspoly.gammah import gamma_h, gamma_h_factorial, gamma_h_pole, gamma_h_product, gamma_h_ratio
from hspoly.ratpoly import Poly, real_roots

STEPS = [F(1, 2), F(1), F(2), F(7, 3)]


def rel(a, b):
    return abs(a - b) / abs(b)


def test_examples():
    with mpmath.workdps(64):
        assert rel(gamma_h(8, 2).value, 48) < mpmath.mpf(10) ** -60
        for h in STEPS:
            assert abs(gamma_h(h, h).value - 1) < mpmath.mpf(10) ** -60
        assert rel(gamma_h(5, 1).value, 24) < mpmath.mpf(10) ** -60


def test_pole_examples():
    assert gamma_h_pole(0, F(1, 3))
    h = F(2, 5)
    assert gamma_h_pole(-3 * h, h)
    assert not gamma_h_pole(h / 2, h)
    v = gamma_h(-3 * h, h)
    assert v.is_pole and v.pole_index == 3 and float(v) == float("inf")


def test_bad_step():
    with pytest.raises(ZeroStepError):
        gamma_h(1, 0)
    with pytest.raises(ZeroStepError):
        gamma_h_pole(1, -1)


def test_factorial_exact():
    assert gamma_h_factorial(3, 2) == 48
    assert gamma_h_factorial(0, F(7, 3)) == 1
    assert gamma_h_factorial(4, F(1, 2)) == F(24, 16)


@pytest.mark.parametrize("h", STEPS)
def test_factorial_paths_agree(h):
    with mpmath.workdps(64):
        for n in range(21):
            exact = gamma_h_factorial(n, h)
            val = gamma_h(n * h + h, h).value
            assert rel(val, mpmath.mpf(exact.numerator) / exact.denominator) < 1e-12


@pytest.mark.parametrize("h", STEPS)
def test_recurrence_dense(h):
    with mpmath.workdps(64):
        for j in range(1, 200):
            x = h / 2 + (20 * h - h / 2) * F(j, 200)
            lhs = gamma_h(x + h, h).value
            assert abs(lhs - (mpmath.mpf(x.numerator) / x.denominator) * gamma_h(x, h).value) / abs(lhs) < 1e-12


def test_matches_ordinary_gamma():
    for j in range(0, 96):
        x = F(1, 2) + F(j, 10)
        assert rel(gamma_h(x, 1).value, mpmath.gamma(mpmath.mpf(x.numerator) / x.denominator)) < 1e-12


@given(st.fractions(F(1, 10), 30, max_denominator=20), st.sampled_from(STEPS))
def test_matches_definition(x, h):
    with mpmath.workdps(40):
        assert rel(gamma_h(x, h, 40).value, oracles.gamma_h_mp(x, h)) < 1e-30


@pytest.mark.parametrize("x,h", [(F(5, 2), F(1)), (F(7, 3), F(1, 2)), (F(-3, 4), F(2))])
def test_product_validation_path(x, h):
    with mpmath.workdps(30):
        val, est = gamma_h_product(x, h, factors=20000, dps=30)
        ref = gamma_h(x, h, 30).value
        assert rel(val, ref) < 4 * est + 1e-25
        assert est < 1e-3


def test_product_pole():
    with pytest.raises(PoleError):
        gamma_h_product(-2, 1)


def test_ratio_examples():
    assert gamma_h_ratio(3, [1], [0], 1) == F(1, 2)
    assert gamma_h_ratio(F(17, 5), [F(1, 3), 2], [2, F(1, 3)], F(1, 2)) == 1
    with pytest.raises(PoleError):
        gamma_h_ratio(-1, [0], [], 1)
    # Γ(x)/Γ(x+2) = 1/(x(x+1)): finite at x = 3, pole at x = 0
    assert gamma_h_ratio(3, [0], [-2], 1) == F(1, 12)
    with pytest.raises(PoleError):
        gamma_h_ratio(0, [0], [-2], 1)


def test_ratio_irrational_roots_cancel():
    x = Poly.x()
    a = real_roots(x * x - 2)
    b = real_roots((x - 1) ** 2 - 2)    # a = b - 1: Γ_h(x-a)/Γ_h(x-b) = x - b - 1 +... finite
    with mpmath.workdps(50):
        t = F(9, 4)
        tm = oracles.mp(t)
        got = gamma_h_ratio(t, list(a), list(b), 1, 50)
        ref = oracles.gamma_h_mp(tm - a[0].approx(50), 1) * oracles.gamma_h_mp(tm - a[1].approx(50), 1) / (
            oracles.gamma_h_mp(tm - b[0].approx(50), 1) * oracles.gamma_h_mp(tm - b[1].approx(50), 1))
        assert rel(got, ref) < 1e-40


def test_ratio_recurrence_random():
    rng = random.Random(4)
    for _ in range(10):
        h = rng.choice(STEPS)
        a = [F(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(rng.randint(1, 3))]
        b = [F(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(rng.randint(1, 3))]
        with mpmath.workdps(64):
            for j in range(10):
                x = F(rng.randint(60, 200), 7)
                f0 = gamma_h_ratio(x, a, b, h)
                f1 = gamma_h_ratio(x + h, a, b, h)
                pa = mpmath.fprod(oracles.mp(x - v) for v in a)
                pb = mpmath.fprod(oracles.mp(x - v) for v in b)
                f0m = mpmath.mpf(f0.numerator) / f0.denominator if isinstance(f0, F) else f0
                f1m = mpmath.mpf(f1.numerator) / f1.denominator if isinstance(f1, F) else f1
                assert rel(f1m / f0m, pa / pb) < 1e-12
