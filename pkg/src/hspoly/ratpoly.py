"""Exact rational polynomials and certified real-root isolation.

Scalars are :class:`fractions.Fraction`.  A :class:`Poly` stores its
coefficients in ascending order, ``coeffs[k]`` being the coefficient of
``x**k``; the zero polynomial has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import mpmath

from .errors import HSPolyError, ZeroPolynomialError, ZeroStepError

DEFAULT_ROOT_BITS = 128


def as_rational(value) -> Fraction:
    """Coerce ints, strings such as ``"2/4"`` or ``"0.25"`` and floats to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, float, str)):
        return Fraction(value.strip() if isinstance(value, str) else value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Poly:
    """Immutable dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> Poly:
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    # -- basic properties ---------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = as_rational(scalar)
        if s == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return Poly([c / s for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            q = rem[k] * inv
            if q == 0:
                continue
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= q * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return Fraction(acc) if isinstance(x, (int, Fraction)) else acc

    # -- derived polynomials ------------------------------------------
    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no monic form")
        return self / self.lc

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift(self, s) -> Poly:
        return poly_shift(self, s)

    def scale_arg(self, s) -> Poly:
        """Return q with q(x) = p(s*x)."""
        s = as_rational(s)
        return Poly([c * s**k for k, c in enumerate(self.coeffs)])

    def primitive_integer(self) -> list[int]:
        """Integer coefficients of a positive multiple of ``self`` with content 1."""
        if self.is_zero():
            return []
        den = 1
        for c in self.coeffs:
            den = math.lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return [v // g for v in ints]

    def mp_coeffs(self) -> list:
        return [mpmath.mpf(c.numerator) / c.denominator for c in self.coeffs]

    def eval_mp(self, x):
        acc = mpmath.mpf(0)
        for c in reversed(self.mp_coeffs()):
            acc = acc * x + c
        return acc


# -- module-level operations ----------------------------------------------

def poly_eval(p: Poly, x) -> Fraction:
    """Exact Horner evaluation."""
    return p(as_rational(x))


def poly_shift(p: Poly, s) -> Poly:
    """Return q with q(x) = p(x + s), by binomial expansion."""
    s = as_rational(s)
    if s == 0 or p.degree < 1:
        return p
    c = p.coeffs
    n = len(c)
    spow = [Fraction(1)]
    for _ in range(n):
        spow.append(spow[-1] * s)
    return Poly(
        sum(c[j] * math.comb(j, k) * spow[j - k] for j in range(k, n))
        for k in range(n)
    )


def delta_h(p: Poly, h) -> Poly:
    """Forward difference quotient (p(x+h) - p(x))/h."""
    h = as_rational(h)
    if h == 0:
        raise ZeroStepError("difference step h must be nonzero")
    return (poly_shift(p, h) - p) / h


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime factors with multiplicities."""
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no squarefree decomposition")
    f = p.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    d = df // a - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        ai = poly_gcd(b, d)
        b = b // ai
        c = d // ai
        d = c - b.derivative()
        if ai.degree > 0:
            out.append((ai, i))
        i += 1
    return out


# -- sign evaluation on integer polynomials -------------------------------

def _int_sign(ci: Sequence[int], x: Fraction) -> int:
    n, d = x.numerator, x.denominator
    deg = len(ci) - 1
    acc = 0
    dpow = 1
    # sum c_k n^k d^(deg-k), accumulated from the top coefficient
    for k in range(deg, -1, -1):
        acc = acc * n + ci[k] * dpow
        dpow *= d
    return (acc > 0) - (acc < 0)


def sturm_sequence(p: Poly) -> list[list[int]]:
    """Sturm chain of ``p`` as primitive integer coefficient lists (positive rescaling)."""
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r * (1 / abs(r.lc)))
    return [q.primitive_integer() for q in seq]


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_int_sign(c, x) for c in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(p: Poly) -> Fraction:
    """A power of two strictly larger than every root modulus (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def count_roots_in(p: Poly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the open interval (lo, hi).

    Endpoints must not be roots of ``p``.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has infinitely many roots")
    if p.degree < 1 or lo >= hi:
        return 0
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError("interval endpoints must not be roots")
    sqf = p // poly_gcd(p, p.derivative())
    chain = sturm_sequence(sqf)
    return _variations(chain, lo) - _variations(chain, hi)


# -- roots ----------------------------------------------------------------

@dataclass(frozen=True)
class RealRoot:
    """A real root, either exact (``lo == hi``) or inside the open interval (lo, hi).

    For an interval root, ``factor`` is a squarefree polynomial with exactly
    one root in (lo, hi) and nonzero values of opposite sign at both ends.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    factor: Poly | None = field(default=None, compare=False, repr=False)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def exact(self) -> Fraction | None:
        return self.lo if self.lo == self.hi else None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def bisect(self) -> RealRoot:
        """One bisection step; may land on the root exactly."""
        if self.is_exact:
            return self
        f = self.factor
        mid = self.midpoint()
        fm = f(mid)
        if fm == 0:
            return RealRoot(mid, mid, self.multiplicity, f)
        if (fm > 0) == (f(self.lo) > 0):
            return RealRoot(mid, self.hi, self.multiplicity, f)
        return RealRoot(self.lo, mid, self.multiplicity, f)

    def refined(self, bits: int = DEFAULT_ROOT_BITS) -> RealRoot:
        """Shrink the interval below ``2**-bits`` absolute width."""
        tol = Fraction(1, 2**bits)
        r = self
        while not r.is_exact and r.width >= tol:
            r = r.bisect()
        return r

    def approx(self, dps: int = 50):
        """mpmath value accurate to about ``dps`` significant digits."""
        if self.is_exact:
            with mpmath.workdps(dps + 5):
                return mpmath.mpf(self.lo.numerator) / self.lo.denominator
        mag = max(abs(self.lo), abs(self.hi), Fraction(1))
        bits = int(dps * 3.33) + 8 + int(math.log2(mag) + 1)
        r = self.refined(bits)
        if r.is_exact:
            return r.approx(dps)
        with mpmath.workdps(dps + 5):
            m = r.midpoint()
            return mpmath.mpf(m.numerator) / m.denominator

    def __float__(self):
        return float(self.midpoint())

    def separated_from(self, other: RealRoot) -> tuple[RealRoot, RealRoot]:
        """Refine two distinct roots until their intervals are disjoint."""
        a, b = self, other
        for _ in range(10_000):
            if a.hi < b.lo or b.hi < a.lo or (a.is_exact and b.is_exact and a.lo != b.lo):
                return a, b
            if a.is_exact and b.is_exact:
                raise HSPolyError("roots coincide")
            if a.is_exact or (not b.is_exact and b.width > a.width):
                b = b.bisect()
            else:
                a = a.bisect()
        raise HSPolyError("could not separate roots")

    def to_json(self) -> dict:
        out = {"multiplicity": self.multiplicity}
        if self.is_exact:
            out["exact"] = str(self.lo)
        else:
            out["interval"] = [str(self.lo), str(self.hi)]
        out["approx"] = mpmath.nstr(self.approx(20), 17)
        return out


@dataclass(frozen=True)
class RootList:
    """Real roots sorted ascending, with multiplicities."""

    roots: tuple[RealRoot, ...]
    degree: int

    def __iter__(self) -> Iterator[RealRoot]:
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    @property
    def real_count(self) -> int:
        """Number of real roots counted with multiplicity."""
        return sum(r.multiplicity for r in self.roots)

    @property
    def all_real(self) -> bool:
        return self.real_count == self.degree

    @property
    def all_simple(self) -> bool:
        return all(r.multiplicity == 1 for r in self.roots)

    @property
    def all_exact(self) -> bool:
        return all(r.is_exact for r in self.roots)

    def exact_values(self) -> list[Fraction]:
        if not self.all_exact:
            raise HSPolyError("not all roots are rational")
        return [r.lo for r in self.roots]

    def approx(self, dps: int = 50) -> list:
        return [r.approx(dps) for r in self.roots]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.roots]


def _isolate_squarefree(f: Poly) -> list[tuple[Fraction, Fraction]]:
    chain = sturm_sequence(f)
    B = _root_bound(f)
    out = []
    stack = [(-B, B, _variations(chain, -B), _variations(chain, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n <= 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        step = (hi - lo) / 7
        k = 1
        while f(mid) == 0:
            # split points must avoid roots; they are dyadic-ish and finitely many roots exist
            mid = (lo + hi) / 2 + step / (k + 2)
            k += 1
        vm = _variations(chain, mid)
        stack.append((mid, hi, vm, vhi))
        stack.append((lo, mid, vlo, vm))
    out.sort()
    return out


def _try_exact(f: Poly, root: RealRoot) -> RealRoot:
    """Detect a rational root: its denominator divides the primitive leading coefficient."""
    ints = f.primitive_integer()
    L = abs(ints[-1])
    r = root
    tol = Fraction(1, L)
    while not r.is_exact and r.width >= tol:
        r = r.bisect()
    if r.is_exact:
        return r
    cand = Fraction(math.ceil(r.lo * L), L)
    if r.lo < cand < r.hi and _int_sign(ints, cand) == 0:
        return RealRoot(cand, cand, r.multiplicity, f)
    return r


def real_roots(p: Poly, precision: int = DEFAULT_ROOT_BITS) -> RootList:
    """All real roots of ``p``: rational ones exactly, the rest as isolating intervals.

    Irrational roots are refined to absolute width below ``2**-precision``.
    """
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no root list")
    roots: list[RealRoot] = []
    for f, mult in squarefree_decomposition(p):
        if f.degree == 1:
            v = -f.coeffs[0] / f.coeffs[1]
            roots.append(RealRoot(v, v, mult, f))
            continue
        for lo, hi in _isolate_squarefree(f):
            r = _try_exact(f, RealRoot(lo, hi, mult, f))
            roots.append(r.refined(precision))
    roots = _sort_roots(roots)
    return RootList(tuple(roots), p.degree)


def _sort_roots(roots: list[RealRoot]) -> list[RealRoot]:
    """Refine pairwise-distinct roots until all intervals are disjoint, then sort."""
    rs = list(roots)
    changed = True
    while changed:
        changed = False
        for i in range(len(rs)):
            for j in range(i + 1, len(rs)):
                a, b = rs[i].separated_from(rs[j])
                if a is not rs[i] or b is not rs[j]:
                    rs[i], rs[j] = a, b
                    changed = True
    return sorted(rs, key=lambda r: r.lo)


def interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    a = b = Fraction(0)
    for c in reversed(p.coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b
