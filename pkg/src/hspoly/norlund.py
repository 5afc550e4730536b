"""Norlund's principal solution of D u = phi (step h).

When both converge, the principal sum is

    F(x) = int_c^oo phi(t) dt - h sum_{s>=0} phi(x + s h).

Otherwise phi is damped by exp(-mu lam(t)) with lam(t) = t**p (ln t)**q, the
difference is computed for a decreasing schedule of mu, and the limit mu -> 0
is taken by polynomial (Richardson) extrapolation.  Only a few families of
phi are supported, so that the tail bounds below are rigorous.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
import mpmath
import numpy as np
from scipy import integrate

from .errors import HypothesisViolation, NumericalFailure, ZeroStepError
from .gammah import gamma_h
from .ratpoly import as_rational

EPS = np.finfo(float).eps


class Family(str, enum.Enum):
    CONSTANT = "constant"
    EXPONENTIAL = "exponential"
    LOGARITHM = "logarithm"
    POLYEXP = "polyexp"


@dataclass(frozen=True)
class Phi:
    """phi(z) for one of the supported families.

    constant: a; exponential: a exp(-beta z); logarithm: a ln z;
    polyexp: (sum coeffs[k] z**k) exp(-beta z) with beta >= 0.
    """

    family: Family
    a: float = 1.0
    beta: float = 1.0
    coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family in (Family.EXPONENTIAL,) and self.beta <= 0:
            raise HypothesisViolation("exponential family needs beta > 0")
        if self.family is Family.POLYEXP and (self.beta < 0 or not self.coeffs):
            raise HypothesisViolation("polyexp family needs beta >= 0 and coefficients")

    @classmethod
    def constant(cls, a=1.0):
        return cls(Family.CONSTANT, a=float(a))

    @classmethod
    def exponential(cls, a=1.0, beta=1.0):
        return cls(Family.EXPONENTIAL, a=float(a), beta=float(beta))

    @classmethod
    def logarithm(cls, a=1.0):
        return cls(Family.LOGARITHM, a=float(a))

    @classmethod
    def polyexp(cls, coeffs, beta=0.0):
        return cls(Family.POLYEXP, beta=float(beta), coeffs=tuple(float(c) for c in coeffs))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.family is Family.CONSTANT:
            return np.full_like(t, self.a)
        if self.family is Family.EXPONENTIAL:
            return self.a * np.exp(-self.beta * t)
        if self.family is Family.LOGARITHM:
            return self.a * np.log(t)
        return np.polynomial.polynomial.polyval(t, self.coeffs) * np.exp(-self.beta * t)

    def log_decay(self, t: float) -> float:
        """-(d/dt) ln|phi(t)|; nondecreasing for t beyond :meth:`regular_from`."""
        if self.family is Family.CONSTANT:
            return 0.0
        if self.family is Family.EXPONENTIAL:
            return self.beta
        if self.family is Family.LOGARITHM:
            return -1.0 / (t * math.log(t))
        p = np.polynomial.Polynomial(self.coeffs)
        return self.beta - float(p.deriv()(t) / p(t))

    def regular_from(self) -> float:
        """A point beyond which phi has no zeros and its log-decay is monotone."""
        if self.family is Family.LOGARITHM:
            return math.e
        if self.family is Family.POLYEXP and len(self.coeffs) > 1:
            c = self.coeffs
            lead = abs(c[-1]) if c[-1] else 1.0
            return 1.0 + max(abs(v) for v in c[:-1]) / lead
        return 0.0

    def needs_positive_argument(self) -> bool:
        return self.family is Family.LOGARITHM

    def converges_unregularized(self) -> bool:
        return self.family is Family.EXPONENTIAL or (self.family is Family.POLYEXP and self.beta > 0)

    def to_json(self) -> dict:
        out = {"family": self.family.value, "a": self.a}
        if self.family in (Family.EXPONENTIAL, Family.POLYEXP):
            out["beta"] = self.beta
        if self.coeffs:
            out["coeffs"] = list(self.coeffs)
        return out


@dataclass(frozen=True)
class RegularizationConfig:
    p: int = 1
    q: int = 0
    mu_schedule: tuple[float, ...] = tuple(0.1 / 2**k for k in range(8))
    series_tail_tol: float = 1e-15
    quadrature_tol: float = 1e-14

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise HypothesisViolation("need p >= 1 and q >= 0")
        mus = tuple(float(m) for m in self.mu_schedule)
        if len(mus) < 2 or any(m <= 0 for m in mus) or any(b >= a for a, b in zip(mus, mus[1:])):
            raise HypothesisViolation("mu schedule must be positive and strictly decreasing")
        object.__setattr__(self, "mu_schedule", mus)

    def lam(self, t):
        t = np.asarray(t, dtype=float)
        if self.q == 0:
            return t**self.p
        return t**self.p * np.log(t) ** self.q

    def dlam(self, t: float) -> float:
        if self.q == 0:
            return self.p * t ** (self.p - 1)
        lt = math.log(t)
        return t ** (self.p - 1) * (self.p * lt**self.q + self.q * lt ** (self.q - 1))

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "mu_schedule": list(self.mu_schedule),
                "series_tail_tol": self.series_tail_tol, "quadrature_tol": self.quadrature_tol}


@dataclass
class NorlundResult:
    value: float
    error: float
    converged: bool
    levels: list = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "value": repr(self.value),
            "error": self.error,
            "converged": self.converged,
            "levels": [{"mu": m, "F": repr(f)} for m, f in self.levels],
            "diagnostics": list(self.diagnostics),
        }


# -- closed forms ---------------------------------------------------------

def principal_sum_closed(kind, x, h, c=0, a=1, beta=1, dps: int = 30):
    """Reference values of the principal sum.

    constant a:          a (x - c - h/2)
    exponential a e^{-beta z}:  (a/beta) e^{-beta c} - h a e^{-beta x} / (1 - e^{-beta h})
    logarithm a ln z:    a [h ln Gamma_h(x) - h ln sqrt(2 pi / h) - (c ln c - c)]
    """
    kind = Family(kind)
    h = as_rational(h)
    if h <= 0:
        raise ZeroStepError("step h must be positive")
    x, c, a, beta = (as_rational(v) for v in (x, c, a, beta))
    if kind is Family.CONSTANT:
        return a * (x - c - h / 2)
    with mpmath.workdps(dps):
        X, C, H, A, Bt = (mpmath.mpf(v.numerator) / v.denominator for v in (x, c, h, a, beta))
        if kind is Family.EXPONENTIAL:
            if beta <= 0:
                raise HypothesisViolation("exponential family needs beta > 0")
            return +(A / Bt * mpmath.exp(-Bt * C) - H * A * mpmath.exp(-Bt * X) / (1 - mpmath.exp(-Bt * H)))
        if kind is Family.LOGARITHM:
            if x <= 0 or c < 0:
                raise HypothesisViolation("logarithm family needs x > 0 and c >= 0")
            lg = mpmath.log(gamma_h(x, h, dps).value)
            const = C * mpmath.log(C) - C if c > 0 else 0
            return +(A * (H * lg - H * mpmath.log(mpmath.sqrt(2 * mpmath.pi / H)) - const))
    raise HypothesisViolation(f"no closed form for family {kind.value}")


# -- numeric principal sum ------------------------------------------------

def _decay(phi: Phi, cfg: RegularizationConfig, mu: float, t: float) -> float:
    d = phi.log_decay(t)
    if mu > 0:
        d += mu * cfg.dlam(t)
    return d


def _tail_start(phi, cfg, mu, t0, tol, weight) -> tuple[float, float]:
    """Point T >= t0 past which psi = |phi| w is log-concave with integral below tol."""
    T = max(t0, phi.regular_from(), math.e if cfg.q else 1.0, 1.0)
    step = 1.0
    for _ in range(400):
        k = _decay(phi, cfg, mu, T)
        if k > 0:
            psi = abs(float(phi(T))) * weight(T)
            bound = psi / k
            if bound < tol:
                return T, bound
        T += step
        step *= 1.5
    raise NumericalFailure("could not bound the tail of the integrand")


def _integral(phi, cfg, mu, c, tol):
    weight = (lambda t: math.exp(-mu * float(cfg.lam(t)))) if mu > 0 else (lambda t: 1.0)

    def f(t):
        return float(phi(t)) * weight(t)

    T, tail = _tail_start(phi, cfg, mu, c, tol, weight)
    # geometric panels keep each quad call well conditioned
    edges = [c]
    w = 1.0
    while edges[-1] < T:
        edges.append(min(T, edges[-1] + w))
        w *= 2.0
    parts, errs = [], []
    for lo, hi in zip(edges, edges[1:]):
        with warnings.catch_warnings():
            # roundoff at the requested tolerance is accounted for by err
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            val, err = integrate.quad(f, lo, hi, epsabs=tol / len(edges), epsrel=1e-14, limit=200)
        parts.append(val)
        errs.append(max(err, 4 * EPS * abs(val)))
    return math.fsum(parts), math.fsum(errs) + tail


def _series(phi, cfg, mu, x, h, tol):
    weight = (lambda t: math.exp(-mu * float(cfg.lam(t)))) if mu > 0 else (lambda t: 1.0)
    T, _ = _tail_start(phi, cfg, mu, x, tol, weight)
    n_head = max(0, math.ceil((T - x) / h))
    terms = []
    chunk = 4096
    s = 0
    while True:
        t = x + h * np.arange(s, s + chunk, dtype=float)
        vals = phi(t)
        if mu > 0:
            vals = vals * np.exp(-mu * cfg.lam(t))
        terms.append(vals)
        s += chunk
        if s <= n_head:
            continue
        last_t = x + (s - 1) * h
        k = _decay(phi, cfg, mu, last_t)
        last = abs(float(vals[-1]))
        if k > 0:
            tail = h * last * math.exp(-k * h) / (1 - math.exp(-k * h))
            if tail < tol:
                return h * math.fsum(np.concatenate(terms)), tail
        if s > 50_000_000:
            raise NumericalFailure("series did not reach its tail tolerance")


def regularized_difference(phi: Phi, c: float, x: float, h: float, mu: float,
                           cfg: RegularizationConfig) -> tuple[float, float]:
    """F(x, mu) and an error bound for the quadrature and series truncation."""
    I, ei = _integral(phi, cfg, mu, c, cfg.quadrature_tol)
    S, es = _series(phi, cfg, mu, x, h, cfg.series_tail_tol)
    noise = 8 * EPS * (abs(I) + abs(S))
    return I - S, ei + es + noise


def _neville_zero(mus, vals):
    """Diagonal of the Neville table at mu = 0: successively higher-order extrapolants."""
    n = len(mus)
    P = list(vals)
    diag = [P[-1]]
    for m in range(1, n):
        P = [
            (mus[i + m] * P[i] - mus[i] * P[i + 1]) / (mus[i + m] - mus[i])
            for i in range(n - m)
        ]
        diag.append(P[-1])
    return diag


def _amplification(mus) -> float:
    """Sum of |Lagrange weights| for extrapolation to 0 through all nodes."""
    tot = 0.0
    for i, mi in enumerate(mus):
        w = 1.0
        for j, mj in enumerate(mus):
            if j != i:
                w *= mj / (mj - mi)
        tot += abs(w)
    return tot


def principal_sum_numeric(phi: Phi, c, x, h, cfg: RegularizationConfig | None = None,
                          strict: bool = False) -> NorlundResult:
    """Regularized principal sum with Richardson extrapolation in mu.

    For families that converge without damping the sum is also evaluated at
    mu = 0 directly; that value is returned and the extrapolation is kept as a
    diagnostic.
    """
    cfg = cfg or RegularizationConfig()
    c, x, h = float(c), float(x), float(h)
    if h <= 0:
        raise ZeroStepError("step h must be positive")
    if (phi.needs_positive_argument() or cfg.q) and (x <= 0 or c < 0):
        raise HypothesisViolation("this family or weight needs x > 0 and c >= 0")
    if cfg.q and c < 1:
        raise HypothesisViolation("weights with q > 0 need c >= 1")
    diags = []
    if phi.converges_unregularized():
        val, err = regularized_difference(phi, c, x, h, 0.0, cfg)
        diags.append("integral and series converge; evaluated at mu = 0")
        return NorlundResult(float(val), float(err), True, [(0.0, val)], diags)

    levels = []
    noise = 0.0
    for mu in cfg.mu_schedule:
        val, err = regularized_difference(phi, c, x, h, mu, cfg)
        levels.append((mu, val))
        noise = max(noise, err)
    mus = [m for m, _ in levels]
    diag = _neville_zero(mus, [v for _, v in levels])
    steps = [abs(b - a) for a, b in zip(diag, diag[1:])]
    floor = noise * _amplification(mus)
    err = max(steps[-1], floor)
    # the error model is a power series in mu; a growing last correction means it failed
    converged = bool(steps[-1] <= max(2 * min(steps[:-1]), 10 * floor))
    if cfg.q:
        diags.append("q > 0: extrapolation assumes an expansion in integer powers of mu")
    if not converged:
        diags.append("extrapolation corrections are not decreasing")
        if strict:
            raise NumericalFailure("non-convergent mu schedule")
    return NorlundResult(float(diag[-1]), float(err), converged, levels, diags)
