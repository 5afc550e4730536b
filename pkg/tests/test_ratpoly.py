from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from hspoly.errors import ZeroPolynomialError, ZeroStepError
from hspoly.ratpoly import (Poly, as_rational, count_roots_in, delta_h, interval_eval, poly_eval,
                            poly_gcd, poly_shift, real_roots, squarefree_decomposition)
from strategies import nonzero_polys, polys, rationals, root_sets, small_rationals, steps

x = Poly.x()


# -- examples -------------------------------------------------------------

def test_eval_example():
    assert poly_eval(Poly([F(-1, 3), 0, 1]), 1) == F(2, 3)


def test_shift_example():
    assert poly_shift(x**3, 2) == Poly([8, 12, 6, 1])


def test_delta_example():
    assert delta_h(x**3, 2) == Poly([4, 6, 3])


def test_no_real_roots():
    rl = real_roots(x * x + 1)
    assert len(rl) == 0 and not rl.all_real


def test_gcd_example():
    assert poly_gcd((x - 2) * (x - 3), (x - 3) * (x - 5)) == x - 3


def test_normalisation_and_string():
    assert as_rational("2/4") == F(1, 2)
    assert Poly(["2/4", 0, 0]) == Poly([F(1, 2)])
    assert str(Poly([F(-1, 3), 0, 1])) == "x^2 - 1/3"
    assert Poly([]).degree == -1


def test_zero_step_rejected():
    with pytest.raises(ZeroStepError):
        delta_h(x, 0)


def test_zero_polynomial_errors():
    with pytest.raises(ZeroPolynomialError):
        real_roots(Poly())
    with pytest.raises(ZeroPolynomialError):
        poly_gcd(Poly(), Poly())


def test_irrational_roots_certified():
    rl = real_roots(x * x - 2)
    assert len(rl) == 2 and not rl.all_exact
    with mpmath.workdps(45):
        for r, s in zip(rl, (-1, 1)):
            assert r.factor(r.lo) * r.factor(r.hi) < 0
            assert abs(r.approx(40) - s * mpmath.sqrt(2)) < mpmath.mpf(10) ** -38


def test_multiplicities():
    p = (x - 1) ** 3 * (x + F(1, 2)) * (x * x - 3)
    rl = real_roots(p)
    assert [r.multiplicity for r in rl] == [1, 1, 3, 1]
    assert rl.real_count == 6 and rl.all_real and not rl.all_simple
    assert squarefree_decomposition(p) == [((x + F(1, 2)) * (x * x - 3), 1), (x - 1, 3)]


def test_interval_eval_encloses():
    p = Poly([1, -3, 0, 2])
    lo, hi = interval_eval(p, F(-1), F(1, 2))
    for k in range(31):
        t = F(-1) + F(k, 20)
        assert lo <= p(t) <= hi


# -- properties -----------------------------------------------------------

@given(polys(), polys(), rationals, rationals, steps)
def test_delta_linear(p, q, a, b, h):
    assert delta_h(p * a + q * b, h) == delta_h(p, h) * a + delta_h(q, h) * b


@given(polys(4), polys(4), steps)
def test_delta_leibniz(p, q, h):
    # Δ(pq) = p·Δq + Δp·q(x+h)
    assert delta_h(p * q, h) == p * delta_h(q, h) + delta_h(p, h) * poly_shift(q, h)


@given(polys(), rationals)
def test_shift_round_trip(p, s):
    assert poly_shift(poly_shift(p, s), -s) == p


@given(polys(), rationals, rationals)
def test_shift_pointwise(p, s, t):
    assert poly_shift(p, s)(t) == p(t + s)


@given(nonzero_polys(), nonzero_polys())
def test_divmod(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p and rem.degree < q.degree


@given(nonzero_polys(4), nonzero_polys(4), nonzero_polys(3))
def test_gcd_divides(p, q, c):
    g = poly_gcd(p * c, q * c)
    assert (p * c) % g == Poly() and (q * c) % g == Poly()
    assert (g % c.monic()).is_zero() or c.degree == 0


@given(root_sets(1, 5))
def test_rational_roots_exact(rs):
    p = Poly.from_roots(rs, F(3, 2))
    rl = real_roots(p)
    assert rl.all_exact and rl.exact_values() == sorted(rs)


@given(nonzero_polys(6, small_rationals))
def test_roots_against_sympy(p):
    assume(p.degree >= 1)
    rl = real_roots(p)
    with mpmath.workdps(35):
        ours = sorted(v for r in rl for v in [r.approx(30)] * r.multiplicity)
        ref = oracles.real_roots_sympy(p)
        assert len(ours) == len(ref)
        for a, b in zip(ours, ref):
            assert abs(a - b) < mpmath.mpf(10) ** -20 * max(1, abs(b))
    for r in rl:
        if not r.is_exact:
            assert r.factor(r.lo) * r.factor(r.hi) < 0


@given(nonzero_polys(5, small_rationals), small_rationals, small_rationals)
def test_count_roots_in(p, lo, hi):
    assume(lo < hi and p(lo) != 0 and p(hi) != 0)
    expected = sum(1 for r in real_roots(p) if lo < r.midpoint() < hi)
    assert count_roots_in(p, lo, hi) == expected


@given(st.lists(small_rationals, min_size=2, max_size=5, unique=True))
def test_separation(rs):
    rl = real_roots(Poly.from_roots(rs) * (x * x - 5))
    for a, b in zip(rl, rl.roots[1:]):
        assert a.hi <= b.lo
