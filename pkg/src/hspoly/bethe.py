"""Discrete Bethe-Ansatz equations for the zeros of a polynomial solution.

If y = prod (x - x_j) solves the equation, evaluating the recurrence form at
x_k - h (where y vanishes at the middle point) gives, for every k,

    prod_j (x_k - x_j + h) / prod_j (x_k - x_j - h) = (h r(x_k - h) - g(x_k - h)) / g(x_k - h),

the product running over all j including j = k, whose factor is -1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import HypothesisViolation, PoleError
from .fdeq import DifferenceEquation, residual
from .ratpoly import Poly

DEFAULT_TOLERANCE = 1e-8
DEFAULT_ROOT_DPS = 50


def _coerce_root(v):
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, mpmath.mpf):
        return v
    if isinstance(v, str):
        s = v.strip()
        if "/" in s:
            return Fraction(s)
        return mpmath.mpf(s)
    return mpmath.mpf(v)


class RootSet:
    """Distinct zeros x_1..x_n, kept in sorted order."""

    def __init__(self, roots, eps=0, dps: int = 50):
        with mpmath.workdps(dps):
            vals = sorted((_coerce_root(r) for r in roots), key=_mp)
            if not all(isinstance(v, Fraction) for v in vals):
                vals = [_mp(v) for v in vals]
            for a, b in zip(vals, vals[1:]):
                gap = b - a
                if gap == 0 or abs(gap) <= eps:
                    raise HypothesisViolation(f"roots {a} and {b} are not distinct")
        self.roots = tuple(vals)
        self.eps = eps

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    @property
    def exact(self) -> bool:
        return all(isinstance(r, Fraction) for r in self.roots)

    def polynomial_mp(self) -> list:
        """Ascending mpmath coefficients of prod (x - x_k)."""
        c = [mpmath.mpf(1)]
        for r in self.roots:
            r = _mp(r)
            nxt = [mpmath.mpf(0)] * (len(c) + 1)
            for i, v in enumerate(c):
                nxt[i + 1] += v
                nxt[i] -= r * v
            c = nxt
        return c

    def polynomial(self) -> Poly:
        if not self.exact:
            raise HypothesisViolation("exact polynomial needs rational roots")
        return Poly.from_roots(self.roots)


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    if isinstance(v, mpmath.mpf):
        return v
    return mpmath.mpf(v)


def _eval(p: Poly, x):
    if isinstance(x, Fraction):
        return p(x)
    return p.eval_mp(x)


def bae_residual(eq: DifferenceEquation, roots: RootSet, k: int):
    """LHS - RHS of the k-th Bethe-Ansatz equation; exact for rational roots."""
    h = eq.h if roots.exact else _mp(eq.h)
    xk = roots[k]
    num = Fraction(1) if roots.exact else mpmath.mpf(1)
    den = Fraction(1) if roots.exact else mpmath.mpf(1)
    for j, xj in enumerate(roots):
        d = xk - xj
        minus = d - h
        if minus == 0:
            raise PoleError(f"left denominator factor x_{k} - x_{j} - h vanishes", point=xk)
        num *= d + h
        den *= minus
    gk = _eval(eq.g, xk - h)
    if gk == 0:
        raise PoleError(f"g(x_{k} - h) vanishes", point=xk)
    rhs = (h * _eval(eq.r, xk - h) - gk) / gk
    return num / den - rhs


@dataclass(frozen=True)
class LeadingCondition:
    holds: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.holds


def leading_degree_condition(eq: DifferenceEquation, n: int) -> LeadingCondition:
    """Whether residual(x^n + lower) has degree < n for every choice of lower terms."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    for j in range(n, -1, -1):
        res = residual(eq, Poly.monomial(j))
        if res.degree >= n:
            if j == n:
                return LeadingCondition(False, f"degree-{res.degree} coefficient of the residual of x^{n} is {res.lc}")
            return LeadingCondition(
                False, f"x^{j} produces residual degree {res.degree} >= {n}; coefficient degrees exceed the expected pattern"
            )
    return LeadingCondition(True)


@dataclass
class BAEVerdict:
    passed: bool
    bae_passed: bool
    equation_passed: bool
    consistent: bool
    residuals: list = field(default_factory=list)
    max_residual: object = 0
    equation_residual: object = 0
    tolerance: float = DEFAULT_TOLERANCE

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "bae_passed": self.bae_passed,
            "equation_passed": self.equation_passed,
            "consistent": self.consistent,
            "tolerance": self.tolerance,
            "max_residual": mpmath.nstr(_mp(self.max_residual), 10) if not isinstance(self.max_residual, Fraction) else str(self.max_residual),
            "equation_residual": mpmath.nstr(_mp(self.equation_residual), 10),
            "residuals": [str(r) if isinstance(r, Fraction) else mpmath.nstr(r, 10) for r in self.residuals],
            "precision": mpmath.mp.dps,
        }


def _equation_residual(eq: DifferenceEquation, coeffs: list):
    """Max coefficient of the residual of sum c_j x^j, relative to the term scale."""
    n = len(coeffs) - 1
    cols = [residual(eq, Poly.monomial(j)) for j in range(n + 1)]
    width = max((len(c) for c in cols), default=0)
    res = [mpmath.mpf(0)] * width
    scale = [mpmath.mpf(0)] * width
    for cj, col in zip(coeffs, cols):
        for i, v in enumerate(col.coeffs):
            t = cj * (mpmath.mpf(v.numerator) / v.denominator)
            res[i] += t
            scale[i] += abs(t)
    top = max(scale, default=mpmath.mpf(0))
    if top == 0:
        return mpmath.mpf(0)
    return max(abs(v) for v in res) / top


def verify_solution_via_bae(
    eq: DifferenceEquation,
    roots: RootSet,
    tolerance: float = DEFAULT_TOLERANCE,
    dps: int = DEFAULT_ROOT_DPS,
) -> BAEVerdict:
    """Check all Bethe-Ansatz residuals and the equation residual of prod (x - x_k).

    Under the leading-degree condition the two checks are equivalent; both are
    computed and their agreement is reported as ``consistent``.
    """
    n = len(roots)
    cond = leading_degree_condition(eq, n)
    if not cond:
        raise HypothesisViolation(f"leading-degree condition fails for n = {n}: {cond.diagnostic}")
    with mpmath.workdps(dps):
        res = [bae_residual(eq, roots, k) for k in range(n)]
        mags = [abs(r) for r in res]
        worst = max(mags, default=Fraction(0))
        bae_ok = all(m < tolerance for m in mags)
        eq_res = _equation_residual(eq, roots.polynomial_mp())
        eq_ok = eq_res < tolerance
        return BAEVerdict(bae_ok and eq_ok, bae_ok, bool(eq_ok), bae_ok == eq_ok,
                          res, worst, eq_res, tolerance)
