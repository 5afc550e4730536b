"""The h-gamma function: Gamma_h(x + h) = x Gamma_h(x), Gamma_h(h) = 1.

Production values come from the reduction to the ordinary gamma function,

    Gamma_h(x) = Gamma(x/h) * h**((x - h)/h),

evaluated with mpmath.  Poles sit at x = 0, -h, -2h, ...; they are flagged,
not raised, by :func:`gamma_h`.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import PoleError, ZeroStepError
from .ratpoly import Poly, RealRoot, as_rational, count_roots_in, poly_gcd, poly_shift

DEFAULT_DPS = int(os.environ.get("HSPOLY_DPS", "64"))


@dataclass(frozen=True)
class GammaHValue:
    value: object
    is_pole: bool = False
    pole_index: int | None = None

    def __float__(self):
        if self.is_pole:
            return math.inf
        return float(self.value)


def _positive_step(h) -> Fraction:
    h = as_rational(h)
    if h <= 0:
        raise ZeroStepError("step h must be positive")
    return h


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    if isinstance(v, RealRoot):
        return v.approx(mpmath.mp.dps)
    return mpmath.mpf(v)


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction, str)) and not isinstance(v, bool)


def gamma_h_pole(x, h) -> bool:
    """Exact test for x in {0, -h, -2h, ...}."""
    h = _positive_step(h)
    q = as_rational(x) / h
    return q <= 0 and q.denominator == 1


def _pole_index(x, h: Fraction) -> int | None:
    if _is_exact(x):
        q = as_rational(x) / h
        return int(-q) if q <= 0 and q.denominator == 1 else None
    q = _mp(x) / _mp(h)
    if q <= 0 and mpmath.isint(q):
        return int(-q)
    return None


def gamma_h(x, h, dps: int | None = None) -> GammaHValue:
    h = _positive_step(h)
    with mpmath.workdps(dps or DEFAULT_DPS):
        idx = _pole_index(x, h)
        if idx is not None:
            return GammaHValue(mpmath.inf, True, idx)
        xm, hm = _mp(as_rational(x) if _is_exact(x) else x), _mp(h)
        val = mpmath.gamma(xm / hm) * mpmath.exp((xm - hm) / hm * mpmath.log(hm))
        return GammaHValue(+val)


def gamma_h_factorial(n: int, h) -> Fraction:
    """Gamma_h(n h + h) = h**n n!, exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    h = _positive_step(h)
    return h**n * math.factorial(n)


def gamma_h_product(x, h, factors: int = 20_000, dps: int | None = None):
    """Validation path: truncated Weierstrass product for 1/Gamma_h.

    1/Gamma_h(x) = exp((gamma - ln h) x / h) x prod_{s>=1} (1 + x/(s h)) exp(-x/(s h)).

    Returns (value, relative truncation error estimate).  The neglected factors
    contribute exp(-(x/h)**2 / (2 S) + O(S**-2)) for S factors.
    """
    h = _positive_step(h)
    if gamma_h_pole(x, h) if _is_exact(x) else False:
        raise PoleError(f"Gamma_h has a pole at x = {x}", point=as_rational(x))
    with mpmath.workdps(dps or DEFAULT_DPS):
        xm, hm = _mp(as_rational(x) if _is_exact(x) else x), _mp(h)
        z = xm / hm
        log_inv = (mpmath.euler - mpmath.log(hm)) * z + mpmath.log(abs(xm))
        sign = 1 if xm > 0 else -1
        for s in range(1, factors + 1):
            t = 1 + z / s
            if t < 0:
                sign = -sign
            log_inv += mpmath.log(abs(t)) - z / s
        value = sign * mpmath.exp(-log_inv)
        return +value, float(z * z / (2 * factors))


# -- ratios with symbolic cancellation ------------------------------------

def _lattice_offset(a, b, h: Fraction) -> int | None:
    """Integer m with a = b + m h when it can be decided exactly, else None."""
    if _is_exact(a) and _is_exact(b):
        q = (as_rational(a) - as_rational(b)) / h
        return int(q) if q.denominator == 1 else None
    if isinstance(a, RealRoot) and isinstance(b, RealRoot):
        if a.is_exact and b.is_exact:
            return _lattice_offset(a.lo, b.lo, h)
        if a.factor is None or b.factor is None:
            return None
        # candidate offsets from the enclosures, then an exact gcd test
        lo = math.floor((a.lo - b.hi) / h)
        hi = math.ceil((a.hi - b.lo) / h)
        for m in range(lo, hi + 1):
            D = poly_gcd(a.factor, poly_shift(b.factor, -m * h))
            if D.degree < 1:
                continue
            hit_a = a.is_exact and D(a.lo) == 0 or not a.is_exact and count_roots_in(D, a.lo, a.hi) > 0
            shifted = poly_shift(D, m * h)
            hit_b = b.is_exact and shifted(b.lo) == 0 or not b.is_exact and count_roots_in(shifted, b.lo, b.hi) > 0
            if hit_a and hit_b:
                return m
        return None
    return None


def _as_exact_root(v):
    if isinstance(v, RealRoot) and v.is_exact:
        return v.lo
    return v


def _sub(x, b):
    b = _as_exact_root(b)
    if _is_exact(x) and _is_exact(b):
        return as_rational(x) - as_rational(b)
    return _mp(x if not _is_exact(x) else as_rational(x)) - _mp(b if not _is_exact(b) else as_rational(b))


def gamma_h_ratio(x, a_roots, b_roots, h, dps: int | None = None):
    """prod Gamma_h(x - a_j) / prod Gamma_h(x - b_l) with lattice pairs cancelled first.

    A numerator root a = b + m h paired with a denominator root b reduces to
    1 / prod_{i=1..m} (x - b - i h) for m >= 0 and prod_{i=0..-m-1} (x - b + i h)
    otherwise.  The result is a Fraction when every factor cancels and x and the
    roots are rational, and an mpmath number otherwise.
    """
    h = _positive_step(h)
    a_left = list(a_roots)
    b_left = list(b_roots)
    pairs = []
    for a in list(a_left):
        best = None
        for b in b_left:
            m = _lattice_offset(a, b, h)
            if m is not None and (best is None or abs(m) < abs(best[1])):
                best = (b, m)
        if best is not None:
            pairs.append((a, best[0], best[1]))
            a_left.remove(a)
            b_left.remove(best[0])

    with mpmath.workdps(dps or DEFAULT_DPS):
        exact = Fraction(1)
        numeric = mpmath.mpf(1)
        for a, b, m in pairs:
            z = _sub(x, b)
            if m >= 0:
                factors = [z - i * h for i in range(1, m + 1)]
                for fct in factors:
                    if fct == 0:
                        raise PoleError(f"uncancelled pole: Gamma_h(x - {a}) over Gamma_h(x - {b})",
                                        point=x)
                for fct in factors:
                    if isinstance(fct, Fraction):
                        exact /= fct
                    else:
                        numeric /= fct
            else:
                for i in range(-m):
                    fct = z + i * h
                    if isinstance(fct, Fraction):
                        exact *= fct
                    else:
                        numeric *= fct
        for a in a_left:
            arg = _sub(x, a)
            g = gamma_h(arg, h, dps)
            if g.is_pole:
                raise PoleError(f"uncancelled pole: Gamma_h(x - {a}) at x = {x}", point=x)
            numeric *= g.value
        for b in b_left:
            g = gamma_h(_sub(x, b), h, dps)
            if g.is_pole:
                return Fraction(0) if not a_left else mpmath.mpf(0)
            numeric /= g.value
        if not a_left and not b_left and numeric == 1:
            return exact
        return +(numeric * _mp(exact))
