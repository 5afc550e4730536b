"""Continuous counterpart: A y'' + B2 y' + V y = 0 with polynomial coefficients.

Covers Stieltjes residues of B/A (with B = B2/2), Lesky's downward
three-term recurrence for the hypergeometric case, the exact polynomial
kernel, and detection of the degenerate (two-solution) Lesky cases.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolation
from .ratpoly import Poly, RealRoot, as_rational, interval_eval, poly_gcd, real_roots
from .solver import KernelBasis, kernel_of


@dataclass(frozen=True)
class ContinuousEquation:
    A: Poly
    B2: Poly
    V: Poly

    def __post_init__(self):
        for name in ("A", "B2", "V"):
            v = getattr(self, name)
            if not isinstance(v, Poly):
                object.__setattr__(self, name, Poly(v))
        if self.A.is_zero():
            raise HypothesisViolation("A must not be the zero polynomial")

    @classmethod
    def hypergeometric(cls, a, b, c, d, f, lam) -> ContinuousEquation:
        return cls(Poly([c, b, a]), Poly([f, d]), Poly.const(as_rational(lam)))


def continuous_residual(ceq: ContinuousEquation, y: Poly) -> Poly:
    dy = y.derivative()
    return ceq.A * dy.derivative() + ceq.B2 * dy + ceq.V * y


def continuous_kernel(ceq: ContinuousEquation, n: int) -> KernelBasis:
    return kernel_of(lambda p: continuous_residual(ceq, p), n)


# -- residues ---------------------------------------------------------------

@dataclass(frozen=True)
class Pole:
    root: RealRoot
    residue: Fraction | tuple[Fraction, Fraction]

    def residue_sign(self) -> int:
        r = self.residue
        if isinstance(r, Fraction):
            return (r > 0) - (r < 0)
        lo, hi = r
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        return 0


@dataclass(frozen=True)
class ResidueTable:
    poles: tuple[Pole, ...]
    stieltjes: bool
    alternating: bool

    def to_json(self) -> dict:
        return {
            "poles": [
                {
                    "root": p.root.to_json(),
                    "residue": str(p.residue)
                    if isinstance(p.residue, Fraction)
                    else [str(p.residue[0]), str(p.residue[1])],
                }
                for p in self.poles
            ],
            "stieltjes": self.stieltjes,
            "alternating": self.alternating,
        }


def _enclose_ratio(num: Poly, den: Poly, root: RealRoot) -> tuple[Fraction, Fraction]:
    r = root
    bits = 64
    while True:
        nlo, nhi = interval_eval(num, r.lo, r.hi)
        dlo, dhi = interval_eval(den, r.lo, r.hi)
        if dlo > 0 or dhi < 0:
            cands = [nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi]
            if max(cands) - min(cands) < Fraction(1, 2**64) or bits > 512:
                return min(cands), max(cands)
        bits *= 2
        r = r.refined(bits)


def residues(A: Poly, B: Poly) -> ResidueTable:
    """Partial-fraction residues of B/A at the (simple, real) roots of A."""
    roots = real_roots(A)
    if not roots.all_simple:
        raise HypothesisViolation("A must be squarefree")
    if not roots.all_real:
        raise HypothesisViolation("A must have only real roots")
    dA = A.derivative()
    poles = []
    for rt in roots:
        if rt.is_exact:
            poles.append(Pole(rt, B(rt.lo) / dA(rt.lo)))
        else:
            poles.append(Pole(rt, _enclose_ratio(B, dA, rt)))
    stieltjes = all(p.residue_sign() > 0 for p in poles)
    return ResidueTable(tuple(poles), stieltjes, _alternates(A, roots, B))


def _alternates(A: Poly, a_roots, B: Poly) -> bool:
    """Zeros of A strictly interlace those of B, with deg B = deg A - 1."""
    if B.is_zero() or B.degree != A.degree - 1:
        return False
    if B.degree > 0 and poly_gcd(A, B).degree > 0:
        return False
    b_roots = real_roots(B) if B.degree > 0 else None
    if b_roots is not None and not (b_roots.all_real and b_roots.all_simple):
        return False
    items = [(r, "A") for r in a_roots] + [(r, "B") for r in (b_roots or ())]
    changed = True
    while changed:
        changed = False
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                a, b = items[i][0].separated_from(items[j][0])
                if a is not items[i][0] or b is not items[j][0]:
                    items[i] = (a, items[i][1])
                    items[j] = (b, items[j][1])
                    changed = True
    items.sort(key=lambda t: t[0].lo)
    return all(lab == ("A" if k % 2 == 0 else "B") for k, (_, lab) in enumerate(items))


def reconstruct(table: ResidueTable, A: Poly) -> Poly:
    """Sum of rho * A/(x - a) over exact poles; equals B when A splits over Q."""
    total = Poly()
    for p in table.poles:
        if not p.root.is_exact or not isinstance(p.residue, Fraction):
            raise HypothesisViolation("reconstruction requires rational roots")
        q, rem = divmod(A, Poly([-p.root.lo, 1]))
        total = total + q * p.residue
    return total


# -- Lesky recurrence -------------------------------------------------------

@dataclass(frozen=True)
class NoSolution:
    """Recurrence step ``k`` demanded 0 * a_k = rhs with rhs != 0."""

    n: int
    k: int
    rhs: Fraction

    def __bool__(self):
        return False


@dataclass(frozen=True)
class LeskyResult:
    poly: Poly
    free: tuple[int, ...] = ()

    @property
    def degenerate(self) -> bool:
        return bool(self.free)


def lesky_ttrr(a, b, c, d, f, n: int) -> LeskyResult | NoSolution:
    """Monic degree-n solution at lambda_n via the downward three-term recurrence.

    (n-k)[(n+k-1)a + d] a_k = (k+1)[(k+2) c a_{k+2} + (k b + f) a_{k+1}],
    k = n-1, ..., 0, from a_n = 1 and a_{n+1} = 0.  A 0 = 0 step leaves
    a_k free; it is set to zero and its index recorded.
    """
    a, b, c, d, f = map(as_rational, (a, b, c, d, f))
    if n < 0:
        raise ValueError("degree must be nonnegative")
    coef = [Fraction(0)] * (n + 3)
    coef[n] = Fraction(1)
    free = []
    for k in range(n - 1, -1, -1):
        lhs = (n - k) * ((n + k - 1) * a + d)
        rhs = (k + 1) * ((k + 2) * c * coef[k + 2] + (k * b + f) * coef[k + 1])
        if lhs != 0:
            coef[k] = rhs / lhs
        elif rhs != 0:
            return NoSolution(n, k, rhs)
        else:
            free.append(k)
    return LeskyResult(Poly(coef[: n + 1]), tuple(free))


# -- Shapiro / Lesky case detection -----------------------------------------

class ShapiroCase(str, enum.Enum):
    REGULAR = "regular"
    LESKY_CASE2 = "lesky_case2"
    LESKY_CASE3_STRUCTURE = "lesky_case3_structure"
    COLLISION_ONLY = "collision_only"


def shapiro_case_detect(a, b, c, d, f) -> ShapiroCase:
    """Classify (a x^2 + b x + c) y'' + (d x + f) y' + lam y = 0 by k = -d/a.

    Even k = 2t is degenerate-capable iff f = -t b (then dx + f = -t A').
    Odd k = 2t-1 is degenerate-capable iff (dx + f)/A has residues -t and
    -(t-1) at the two roots of A; this is decided exactly by testing whether
    dx + f + t A' and dx + f + (t-1) A' each share a root with A.
    """
    a, b, c, d, f = map(as_rational, (a, b, c, d, f))
    if a == 0:
        raise HypothesisViolation("a must be nonzero")
    k = -d / a
    if k <= 0 or k.denominator != 1:
        return ShapiroCase.REGULAR
    k = int(k)
    A = Poly([c, b, a])
    B2 = Poly([f, d])
    if k % 2 == 0:
        t = k // 2
        return ShapiroCase.LESKY_CASE2 if f == -t * b else ShapiroCase.COLLISION_ONLY
    t = (k + 1) // 2
    if A.degree != 2 or poly_gcd(A, A.derivative()).degree > 0:
        return ShapiroCase.COLLISION_ONLY
    dA = A.derivative()
    hit_t = poly_gcd(A, B2 + dA * t).degree > 0
    hit_t1 = poly_gcd(A, B2 + dA * (t - 1)).degree > 0
    if hit_t and hit_t1:
        return ShapiroCase.LESKY_CASE3_STRUCTURE
    return ShapiroCase.COLLISION_ONLY
