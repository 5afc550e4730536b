"""Second-order difference equations with polynomial coefficients.

The stored form is

    g(x) D^2 y(x) + r(x) D y(x) + u(x) y(x+h) = 0,    D y(x) = (y(x+h) - y(x))/h,

and every other form is derived from it on demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolation, PoleError, ZeroStepError
from .ratpoly import Poly, as_rational, delta_h, poly_shift


@dataclass(frozen=True)
class RecurrenceForm:
    """c2(x) y(x+2h) + c1(x) y(x+h) + c0(x) y(x) = 0 (h**2 times the stored form)."""

    c2: Poly
    c1: Poly
    c0: Poly


@dataclass(frozen=True)
class DifferenceEquation:
    g: Poly
    r: Poly
    u: Poly
    h: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "h", as_rational(self.h))
        for name in ("g", "r", "u"):
            v = getattr(self, name)
            if not isinstance(v, Poly):
                object.__setattr__(self, name, Poly(v))
        if self.h <= 0:
            raise ZeroStepError("step h must be positive")
        if self.g.is_zero():
            raise HypothesisViolation("leading coefficient g must not be the zero polynomial")

    @property
    def g_minus_hr(self) -> Poly:
        return self.g - self.r * self.h

    def recurrence(self) -> RecurrenceForm:
        return to_recurrence_form(self)

    def absorbed_form(self) -> tuple[Poly, Poly, Poly]:
        """Coefficients (g, r + h u, u) of g D^2 y + (r + h u) D y + u y(x) = 0."""
        return self.g, self.r + self.u * self.h, self.u

    def translated(self, s) -> DifferenceEquation:
        """Equation satisfied by y(x + s) whenever y solves this one."""
        return DifferenceEquation(
            poly_shift(self.g, s), poly_shift(self.r, s), poly_shift(self.u, s), self.h
        )

    @property
    def excess_degree(self) -> int:
        """max(deg g - 2, deg r - 1, deg u): how far the residual degree can exceed deg y."""
        return max(self.g.degree - 2, self.r.degree - 1, self.u.degree)


@dataclass(frozen=True)
class HypergeometricData:
    """(a x^2 + b x + c) D^2 y + (d x + f) D y + lam y(x+h) = 0; lam is supplied per query."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    f: Fraction
    h: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "f", "h"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.h <= 0:
            raise ZeroStepError("step h must be positive")

    @property
    def g(self) -> Poly:
        return Poly([self.c, self.b, self.a])

    @property
    def r(self) -> Poly:
        return Poly([self.f, self.d])

    def equation(self, lam) -> DifferenceEquation:
        return DifferenceEquation(self.g, self.r, Poly.const(as_rational(lam)), self.h)


def to_recurrence_form(eq: DifferenceEquation) -> RecurrenceForm:
    h = eq.h
    return RecurrenceForm(
        c2=eq.g,
        c1=eq.r * h + eq.u * (h * h) - eq.g * 2,
        c0=eq.g - eq.r * h,
    )


def residual(eq: DifferenceEquation, y: Poly) -> Poly:
    """Left-hand side of the stored form applied to ``y``; zero iff y is a solution."""
    dy = delta_h(y, eq.h)
    d2y = delta_h(dy, eq.h)
    return eq.g * d2y + eq.r * dy + eq.u * poly_shift(y, eq.h)


def cauchy_iterate(eq: DifferenceEquation, x0, y0, y1, steps: int) -> list[Fraction]:
    """Values y(x0 + k h), k = 0..steps+1, from the two initial values.

    Raises PoleError at the first lattice point where g vanishes.
    """
    x0, y0, y1 = as_rational(x0), as_rational(y0), as_rational(y1)
    rec = to_recurrence_form(eq)
    h = eq.h
    vals = [y0, y1]
    for k in range(steps):
        x = x0 + k * h
        c2 = rec.c2(x)
        if c2 == 0:
            raise PoleError(f"g vanishes at lattice point x = {x}", point=x)
        vals.append(-(rec.c1(x) * vals[-1] + rec.c0(x) * vals[-2]) / c2)
    return vals


def theta(hyp: HypergeometricData, lam, z) -> Fraction:
    """Characteristic polynomial a z(z-1) + d z + lam."""
    z = as_rational(z)
    return hyp.a * z * (z - 1) + hyp.d * z + as_rational(lam)


def lambda_n(hyp: HypergeometricData, n: int) -> Fraction:
    """The eigenvalue with theta(n) = 0: -n(n-1) a - n d."""
    return -n * (n - 1) * hyp.a - n * hyp.d


def regularity_check(hyp: HypergeometricData, n_max: int) -> list[tuple[int, int]]:
    """Pairs n < l <= n_max with coinciding eigenvalues; empty means regular up to n_max."""
    lams = [lambda_n(hyp, n) for n in range(n_max + 1)]
    return [
        (n, l)
        for n in range(n_max + 1)
        for l in range(n + 1, n_max + 1)
        if lams[n] == lams[l]
    ]
