from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from hspoly.errors import HypothesisViolation
from hspoly.fdeq import DifferenceEquation, HypergeometricData, lambda_n
from hspoly.jsonio import validate
from hspoly.ratpoly import Poly, poly_shift
from hspoly.solver import polynomial_kernel
from hspoly.uniqueness import (G, G_MINUS_HR, Verdict, certify, check_theorem1,
                               check_theorem1_remark, check_theorem2, lattice_classes)
from strategies import root_sets, small_rationals, steps

x = Poly.x()


def make(gmhr: Poly, g: Poly, h=F(1), u=Poly()) -> DifferenceEquation:
    return DifferenceEquation(g, (g - gmhr) * (1 / F(h)), u, h)


def from_roots(a, b, h=F(1), ka=F(1), kb=F(1)):
    return make(Poly.from_roots(a, ka), Poly.from_roots(b, kb), h)


def class_sets(eq):
    return sorted(sorted((m.source, m.root.exact) for m in c.members) for c in lattice_classes(eq))


EX1 = from_roots([F(1, 4), F(3, 4)], [0, F(11, 2)])
EX2 = from_roots([0, F(1, 2)], [2, F(5, 2)])
EX3 = from_roots([0, 1, 2], [5, F(1, 3), F(2, 3)])


# -- examples -------------------------------------------------------------

def test_lattice_singletons():
    assert [len(c.members) for c in lattice_classes(EX1)] == [1, 1, 1, 1]


def test_lattice_two_pairs():
    assert class_sets(EX2) == [
        [(G, 2), (G_MINUS_HR, 0)],
        [(G, F(5, 2)), (G_MINUS_HR, F(1, 2))],
    ]
    for c in lattice_classes(EX2):
        assert c.anchor == min((m.root for m in c.members), key=lambda r: r.lo)
        assert sorted(m.offset for m in c.members) == [0, 2]


def test_lattice_big_class():
    sizes = sorted(len(c.members) for c in lattice_classes(EX3))
    assert sizes == [1, 1, 4]
    big = max(lattice_classes(EX3), key=lambda c: len(c.members))
    assert big.count(G_MINUS_HR) == 3 and big.count(G) == 1
    assert sorted(m.offset for m in big.members) == [0, 1, 2, 5]


def test_theorem1_examples():
    c = check_theorem1(EX1)
    assert c.verdict == Verdict.T1 and c.witness_root.root.exact == F(1, 4)
    assert c.direction == "up"
    assert check_theorem1(EX2).verdict == Verdict.INCONCLUSIVE


def test_remark_examples():
    c = check_theorem1_remark(from_roots([F(1, 2)], [10]))
    assert c.verdict == Verdict.T1_REMARK and c.witness_root.root.exact == 10 and c.direction == "down"
    assert check_theorem1_remark(from_roots([3], [10])).verdict == Verdict.INCONCLUSIVE


def test_theorem2_examples():
    c = check_theorem2(EX3)
    assert c.verdict == Verdict.T2 and c.witness_root.root.exact == 0
    assert check_theorem2(EX2).verdict == Verdict.INCONCLUSIVE


def test_dispatcher_order():
    assert certify(EX1).verdict == Verdict.T1
    assert certify(EX2).verdict == Verdict.INCONCLUSIVE
    # EX3 also satisfies T2, but the remark is tried first (1/3 has no g - hr root below)
    assert certify(EX3).verdict == Verdict.T1_REMARK
    assert certify(from_roots([F(1, 2)], [10])).verdict == Verdict.T1
    assert certify(from_roots([0, 1], [1])).verdict == Verdict.T2


def test_inconclusive_reports_collisions():
    c = certify(EX2)
    doc = c.to_json()
    validate(doc, "certificate")
    assert doc["witness"] is None and len(doc["collisions"]) == 2


def test_irrational_roots():
    a = x * x - 2
    bal = make(a, poly_shift(a, -3))      # each a-root has a g-root 3 above
    assert certify(bal).verdict == Verdict.INCONCLUSIVE
    assert sorted(len(c.members) for c in lattice_classes(bal)) == [2, 2]
    assert all(sorted(m.offset for m in c.members) == [0, 3] for c in lattice_classes(bal))
    up = make(a, poly_shift(a, 3))        # g-roots sit 3 below
    c = certify(up)
    assert c.verdict == Verdict.T1 and not c.witness_root.root.is_exact


def test_irrational_half_step():
    a = x * x - 3
    eq = make(a * (x - 1), poly_shift(a, F(-3, 2)) * (x - F(1, 3)), F(1, 2))
    classes = lattice_classes(eq)
    assert sorted(len(c.members) for c in classes) == [1, 1, 2, 2]
    assert certify(eq).verdict == Verdict.T1   # root 1 has nothing above on the 1/2-lattice


def test_kappa_reported():
    c = certify(from_roots([0], [F(1, 2)], ka=3, kb=2))
    assert c.kappa == F(3, 2) and c.to_json()["kappa"] == "3/2"


def test_hypothesis_violations():
    with pytest.raises(HypothesisViolation):
        certify(from_roots([0, 0], [1]))
    with pytest.raises(HypothesisViolation):
        certify(make(x - 1, x * x + 1))
    with pytest.raises(HypothesisViolation):
        lattice_classes(make(Poly(), x))


def test_corpus_certificates():
    from hspoly.corpus import corpus_build
    assert certify(corpus_build("charlier").equation(4)).verdict == Verdict.T1
    assert certify(corpus_build("meixner").equation(4)).certified
    assert certify(corpus_build("hahn").equation(4)).certified


def test_corollary_counterexample():
    # outside every hypothesis: balanced lattice pairs and a two-dimensional kernel
    hyp = HypergeometricData(F(-2, 3), F(-1, 3), 0, 4, 0)
    assert lambda_n(hyp, 0) == lambda_n(hyp, 7) == 0
    eq = hyp.equation(0)
    assert certify(eq).verdict == Verdict.INCONCLUSIVE
    kb = polynomial_kernel(eq, 7)
    assert kb.dimension == 2 and kb.degrees() == [7, 0]
    assert oracles.kernel_dimension(eq, 7) == 2


# -- properties -------------------------------------------------------------

disjoint_roots = st.tuples(root_sets(0, 4), root_sets(0, 4)).filter(lambda ab: ab[0] or ab[1])


@given(disjoint_roots, steps, st.fractions(-3, 3, max_denominator=3).filter(bool))
def test_gcd_membership_matches_subtraction(ab, h, kb):
    a, b = ab
    eq = from_roots(a, b, h, kb=kb)
    assume(not eq.g_minus_hr.is_zero())
    ours = class_sets(eq)
    labelled = [(G_MINUS_HR, v) for v in a] + [(G, v) for v in b]
    # connected components of "difference is an integer multiple of h"
    comps = []
    for item in labelled:
        joined = [c for c in comps if any(((item[1] - o[1]) / h).denominator == 1 for o in c)]
        merged = [item] + [o for c in joined for o in c]
        comps = [c for c in comps if c not in joined] + [merged]
    assert ours == sorted(sorted(c) for c in comps)


@given(disjoint_roots, steps)
def test_verdicts_match_brute_force(ab, h):
    a, b = ab
    eq = from_roots(a, b, h, kb=F(2))
    assume(not eq.g_minus_hr.is_zero())
    brute = oracles.brute_verdicts(a, b, h)
    expected = next((v for v in ("T1", "T1_REMARK", "T2") if v in brute), "INCONCLUSIVE")
    assert certify(eq).verdict.value == expected
    assert (check_theorem1(eq).verdict == Verdict.T1) == ("T1" in brute)
    assert (check_theorem1_remark(eq).verdict == Verdict.T1_REMARK) == ("T1_REMARK" in brute)
    assert (check_theorem2(eq).verdict == Verdict.T2) == ("T2" in brute)


@given(disjoint_roots, steps, small_rationals)
def test_translation_invariance(ab, h, s):
    a, b = ab
    eq = from_roots(a, b, h, kb=F(2))
    assume(not eq.g_minus_hr.is_zero())
    assert certify(eq.translated(s)).verdict == certify(eq).verdict


@given(disjoint_roots, steps)
def test_certificate_witness_satisfies_hypothesis(ab, h):
    a, b = ab
    eq = from_roots(a, b, h, kb=F(3))
    assume(not eq.g_minus_hr.is_zero())
    c = certify(eq)
    validate(c.to_json(), "certificate")
    if not c.certified:
        assert c.witness is None
        return
    w, cls = c.witness_root, c.witness
    assert w in cls.members
    if c.verdict == Verdict.T1:
        assert w.source == G_MINUS_HR and cls.count(G, at_least=w.offset) == 0
    elif c.verdict == Verdict.T1_REMARK:
        assert w.source == G and cls.count(G_MINUS_HR, at_most=w.offset) == 0
    else:
        assert w.source == G_MINUS_HR
        assert cls.count(G_MINUS_HR, at_least=w.offset) > cls.count(G, at_least=w.offset)
    for m in cls.members:
        if m.root.is_exact and cls.anchor.is_exact:
            assert m.root.lo == cls.anchor.lo + m.offset * h
