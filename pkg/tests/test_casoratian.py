import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import instances
import oracles
from hspoly.casoratian import R_of, casoratian, casoratian_values, closed_form, verify_abel
from hspoly.errors import HypothesisViolation, PoleError
from hspoly.fdeq import DifferenceEquation, cauchy_iterate
from hspoly.jsonio import validate
from hspoly.ratpoly import Poly
from strategies import polys, small_rationals, steps

x = Poly.x()


def sols(eq, x0, n):
    return cauchy_iterate(eq, x0, 1, 0, n), cauchy_iterate(eq, x0, 0, 1, n)


# -- examples -------------------------------------------------------------

def test_casoratian_examples():
    one = Poly.const(1)
    assert casoratian(one, x, 1) == one
    assert casoratian(x * x + 3, x * x + 3, F(1, 2)).is_zero()
    assert casoratian(one, x * x, 1) == 2 * x + 1


def test_R_of_examples():
    f = R_of(DifferenceEquation(x * x, x, Poly.const(5), 1))
    assert f.kappa == 1
    assert f.a_roots.exact_values() == [0, 1]
    assert [(r.lo, r.multiplicity) for r in f.b_roots] == [(0, 2)]
    f = R_of(DifferenceEquation(x - 3, Poly.const(-4), Poly(), 1))   # g - hr = x + 1
    assert f.kappa == 1 and f.a_roots.exact_values() == [-1] and f.b_roots.exact_values() == [3]
    f = R_of(DifferenceEquation(2 * x + 1, Poly.const(1), Poly(), 1))
    assert f.kappa == 1 and f.a_roots.exact_values() == [0]
    with pytest.raises(HypothesisViolation):
        R_of(DifferenceEquation(x, x, Poly(), 1))


def test_theorem1_instance_abel():
    eq = DifferenceEquation(x * (x - F(11, 2)), (x * (x - F(11, 2)) - (x - F(1, 4)) * (x - F(3, 4))),
                            Poly.const(F(2, 3)), 1)
    y1, y2 = sols(eq, F(1, 3), 21)
    rep = verify_abel(eq, y1, y2, F(1, 3), 20, dps=64)
    assert rep.recurrence_exact and not rep.identically_zero
    assert rep.ratio_rel_stddev < 1e-9 and rep.constant
    with mpmath.workdps(64):
        validate(rep.to_json(), "casoratian")


def test_dependent_solutions_identically_zero():
    eq = DifferenceEquation(x * x + 1, x, Poly.const(1), 1)
    y1 = cauchy_iterate(eq, 0, 1, 2, 20)
    y2 = [2 * v for v in y1]
    rep = verify_abel(eq, y1, y2, 0, 20)
    assert rep.identically_zero and rep.recurrence_exact and rep.ratio_mean is None
    assert "identically zero" in rep.notes[0]


def test_single_root_telescoping_exact():
    # g - hr = x - a0, g = x - a0 - h: closed form is 1/(x - a0 - h)... a rational function
    a0, h = F(1, 5), F(1, 2)
    g, gmhr = x - a0 - h, x - a0
    eq = DifferenceEquation(g, (g - gmhr) * (1 / h), Poly.const(3), h)
    y1, y2 = sols(eq, F(7, 3), 21)
    rep = verify_abel(eq, y1, y2, F(7, 3), 20)
    assert rep.recurrence_exact
    assert all(isinstance(r, F) for r in rep.ratios)
    assert rep.ratio_rel_stddev == 0.0 and isinstance(rep.ratio_mean, F)


@pytest.mark.parametrize("kappa", [F(3), F(1, 4), F(-2)])
def test_kappa_not_one(kappa):
    h = F(1, 2)
    gmhr = (x - F(1, 3)) * kappa
    g = x + F(5, 7)
    eq = DifferenceEquation(g, (g - gmhr) * (1 / h), Poly.const(1), h)
    y1, y2 = sols(eq, F(2, 9), 21)
    rep = verify_abel(eq, y1, y2, F(2, 9), 20, dps=64)
    assert rep.recurrence_exact and rep.ratio_rel_stddev < 1e-9


def test_literal_kappa_fails_off_unit_step():
    # the printed exponent x - h/2 only matches the recurrence when h = 1
    h = F(1, 2)
    gmhr = (x - F(1, 3)) * 3
    g = x + F(5, 7)
    eq = DifferenceEquation(g, (g - gmhr) * (1 / h), Poly.const(1), h)
    y1, y2 = sols(eq, F(2, 9), 21)
    rep = verify_abel(eq, y1, y2, F(2, 9), 20, literal_kappa=True, dps=64)
    assert rep.recurrence_exact and rep.ratio_rel_stddev > 1e-3 and not rep.constant


def test_literal_kappa_agrees_at_unit_step():
    gmhr = (x - F(1, 3)) * 3
    g = x + F(5, 7)
    eq = DifferenceEquation(g, g - gmhr, Poly.const(1), 1)
    f = R_of(eq)
    with mpmath.workdps(40):
        for k in range(5):
            t = F(2, 9) + k
            assert abs(closed_form(f, t, k, True, 40) - closed_form(f, t, k, False, 40)) < mpmath.mpf(10) ** -30


def test_irrational_roots_abel():
    rng = random.Random(2)
    eq, x0 = instances.abel_instance(rng, kappa_one=False, irrational=True)
    y1, y2 = sols(eq, x0, 21)
    rep = verify_abel(eq, y1, y2, x0, 20, dps=64)
    assert rep.recurrence_exact and rep.ratio_rel_stddev < 1e-9


def test_pole_on_lattice_rejected():
    eq = DifferenceEquation(x - 3, Poly.const(1), Poly(), 1)
    with pytest.raises(PoleError):
        cauchy_iterate(eq, 0, 1, 0, 10)
    with pytest.raises(HypothesisViolation):
        verify_abel(eq, [1, 2], [3, 4], 0, 5)


# -- properties -------------------------------------------------------------

@given(polys(4, small_rationals), polys(4, small_rationals), steps, st.lists(small_rationals, min_size=5, max_size=5))
def test_determinant_forms_agree(y1, y2, h, pts):
    w = casoratian(y1, y2, h)
    for t in pts:
        assert w(t) == oracles.casoratian_det(y1, y2, h, t)


@given(st.integers(0, 10**6))
def test_recurrence_exact_random(seed):
    rng = random.Random(seed)
    eq, x0 = instances.abel_instance(rng, kappa_one=rng.random() < 0.5)
    y1 = cauchy_iterate(eq, x0, instances.rr(rng), instances.rr(rng), 31)
    y2 = cauchy_iterate(eq, x0, instances.rr(rng), instances.rr(rng), 31)
    w = casoratian_values(y1, y2, eq.h)
    for k in range(30):
        t = x0 + k * eq.h
        assert w[k + 1] * eq.g(t) == eq.g_minus_hr(t) * w[k]


@given(polys(3, small_rationals), polys(3, small_rationals), steps, small_rationals)
def test_lattice_values_match_polynomial(y1, y2, h, x0):
    w = casoratian(y1, y2, h)
    v1 = [y1(x0 + k * h) for k in range(8)]
    v2 = [y2(x0 + k * h) for k in range(8)]
    assert casoratian_values(v1, v2, h) == [w(x0 + k * h) for k in range(7)]
