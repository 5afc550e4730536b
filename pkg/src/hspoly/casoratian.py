"""Discrete Wronskian (Casoratian) and the h-analogue of Abel's identity.

For two solutions on a common lattice x0 + k h the Casoratian
W(x) = y1(x) D y2(x) - D y1(x) y2(x) obeys the first-order recurrence

    g(x) W(x + h) = (g(x) - h r(x)) W(x),

whose solution is, up to an h-periodic factor, the closed form

    |kappa|^((x - h/2)/h) sgn(kappa)^k  prod Gamma_h(x - a_j) / prod Gamma_h(x - b_l)

with a_j the roots of g - h r, b_l those of g and kappa the ratio of their
leading coefficients.
"""
from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import HSPolyError, HypothesisViolation, PoleError, ZeroStepError
from .fdeq import DifferenceEquation
from .gammah import DEFAULT_DPS, gamma_h_ratio
from .ratpoly import Poly, RootList, as_rational, delta_h, poly_shift, real_roots

RATIO_TOLERANCE = 1e-9


def casoratian(y1: Poly, y2: Poly, h) -> Poly:
    """y1 D y2 - D y1 y2, cross-checked against the determinant form."""
    h = as_rational(h)
    if h == 0:
        raise ZeroStepError("step h must be nonzero")
    w = y1 * delta_h(y2, h) - delta_h(y1, h) * y2
    det = (y1 * poly_shift(y2, h) - y2 * poly_shift(y1, h)) / h
    if w != det:
        raise HSPolyError("Casoratian forms disagree")
    return w


def casoratian_values(v1, v2, h) -> list[Fraction]:
    """W at x0 + k h from two value sequences on the lattice (one value shorter)."""
    h = as_rational(h)
    return [(v1[k] * v2[k + 1] - v2[k] * v1[k + 1]) / h for k in range(min(len(v1), len(v2)) - 1)]


@dataclass(frozen=True)
class AbelClosedForm:
    kappa: Fraction
    a_roots: RootList
    b_roots: RootList
    h: Fraction


def R_of(eq: DifferenceEquation) -> AbelClosedForm:
    A = eq.g_minus_hr
    if A.is_zero():
        raise HypothesisViolation("g - h r vanishes identically")
    return AbelClosedForm(A.lc / eq.g.lc, real_roots(A), real_roots(eq.g), eq.h)


@dataclass
class AbelReport:
    recurrence_exact: bool
    identically_zero: bool
    points: list[Fraction]
    ratios: list = field(default_factory=list)
    ratio_mean: object = None
    ratio_rel_stddev: float | None = None
    constant: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def num(v):
            if v is None:
                return None
            if isinstance(v, Fraction):
                return {"exact": str(v), "decimal": mpmath.nstr(mpmath.mpf(v.numerator) / v.denominator, 20)}
            return {"decimal": mpmath.nstr(v, 20)}

        return {
            "recurrence_exact": self.recurrence_exact,
            "identically_zero": self.identically_zero,
            "points": [str(p) for p in self.points],
            "ratio_mean": num(self.ratio_mean),
            "ratio_rel_stddev": self.ratio_rel_stddev,
            "constant": self.constant,
            "precision": mpmath.mp.dps,
            "notes": list(self.notes),
        }


def closed_form(form: AbelClosedForm, x, k: int, literal_kappa: bool = False, dps: int | None = None):
    """The Abel closed form at lattice point x = x0 + k h.

    The exponential factor is kappa**((x - h/2)/h), so one step multiplies it
    by kappa as the recurrence requires.  ``literal_kappa`` uses
    kappa**(x - h/2) instead, which agrees only when h = 1.
    """
    if not (form.a_roots.all_real and form.b_roots.all_real):
        raise HypothesisViolation("closed form needs real roots of g and g - h r")
    a = [r for r in form.a_roots for _ in range(r.multiplicity)]
    b = [r for r in form.b_roots for _ in range(r.multiplicity)]
    h = form.h
    with mpmath.workdps(dps or DEFAULT_DPS):
        core = gamma_h_ratio(x, a, b, h, dps)
        kappa = form.kappa
        if kappa == 1:
            return core
        x_m = mpmath.mpf(x.numerator) / x.denominator
        h_m = mpmath.mpf(h.numerator) / h.denominator
        expo = x_m - h_m / 2 if literal_kappa else (x_m - h_m / 2) / h_m
        mag = mpmath.exp(expo * mpmath.log(abs(mpmath.mpf(kappa.numerator) / kappa.denominator)))
        sign = -1 if kappa < 0 and k % 2 else 1
        c = core if not isinstance(core, Fraction) else mpmath.mpf(core.numerator) / core.denominator
        return sign * mag * c


def verify_abel(
    eq: DifferenceEquation,
    y1: list,
    y2: list,
    x0,
    points: int,
    *,
    literal_kappa: bool = False,
    tolerance: float = RATIO_TOLERANCE,
    dps: int | None = None,
) -> AbelReport:
    """Check the Casoratian recurrence exactly and the closed form up to a constant."""
    x0 = as_rational(x0)
    h = eq.h
    if len(y1) < points + 2 or len(y2) < points + 2:
        raise HypothesisViolation("need at least points + 2 lattice values per solution")
    w = casoratian_values(y1[: points + 2], y2[: points + 2], h)
    xs = [x0 + k * h for k in range(points + 1)]
    A, B = eq.g_minus_hr, eq.g
    exact = True
    for k in range(points):
        if B(xs[k]) == 0:
            raise PoleError(f"g vanishes at lattice point {xs[k]}", point=xs[k])
        if w[k + 1] * B(xs[k]) != A(xs[k]) * w[k]:
            exact = False
    pts = xs[:points]
    if all(v == 0 for v in w):
        return AbelReport(exact, True, pts, notes=["identically zero: closed-form comparison skipped"])

    form = R_of(eq)
    report = AbelReport(exact, False, pts)
    ratios = []
    with mpmath.workdps(dps or DEFAULT_DPS):
        for k, x in enumerate(pts):
            try:
                cf = closed_form(form, x, k, literal_kappa, dps)
            except PoleError:
                report.notes.append(f"closed form has a pole at x = {x}; point skipped")
                continue
            if cf == 0 or w[k] == 0:
                report.notes.append(f"zero at x = {x}; point skipped")
                continue
            if isinstance(cf, Fraction):
                ratios.append(w[k] / cf)
            else:
                ratios.append(mpmath.mpf(w[k].numerator) / w[k].denominator / cf)
        if len(ratios) < 2:
            report.notes.append("fewer than two usable points")
            return report
        report.ratios = ratios
        if all(isinstance(r, Fraction) for r in ratios):
            report.ratio_mean = sum(ratios) / len(ratios)
            report.ratio_rel_stddev = 0.0 if len(set(ratios)) == 1 else float(
                statistics.pstdev(ratios) / abs(report.ratio_mean)
            )
        else:
            vals = [r if not isinstance(r, Fraction) else mpmath.mpf(r.numerator) / r.denominator
                    for r in ratios]
            mean = mpmath.fsum(vals) / len(vals)
            var = mpmath.fsum((v - mean) ** 2 for v in vals) / len(vals)
            report.ratio_mean = +mean
            report.ratio_rel_stddev = float(mpmath.sqrt(var) / abs(mean))
    report.constant = report.ratio_rel_stddev < tolerance
    return report
