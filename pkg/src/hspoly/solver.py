"""Polynomial solutions by exact nullspace computation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import linalg
from .errors import HSPolyError, ZeroPolynomialError
from .fdeq import DifferenceEquation, HypergeometricData, lambda_n, residual
from .ratpoly import Poly


@dataclass(frozen=True)
class KernelBasis:
    """Polynomial solutions of degree <= ``degree_bound``.

    The basis is in reduced echelon form with respect to descending degree:
    every element is monic, leading degrees are distinct, and no element has
    a nonzero coefficient at another element's leading degree.
    """

    degree_bound: int
    basis: tuple[Poly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def degrees(self) -> list[int]:
        return [p.degree for p in self.basis]

    def to_json(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "dimension": self.dimension,
            "basis": [[str(c) for c in p.coeffs] for p in self.basis],
        }


def residual_matrix(columns: list[Poly]) -> list[list[Fraction]]:
    """Matrix whose column j holds the coefficients of ``columns[j]``."""
    nrows = max((len(p) for p in columns), default=0)
    return [[p.coeff(i) for p in columns] for i in range(nrows)]


def canonical_basis(vectors: list[list[Fraction]], n: int) -> tuple[Poly, ...]:
    """Echelon-normalize coefficient vectors (ascending degree, length n+1) by descending degree."""
    if not vectors:
        return ()
    rows = [list(reversed(v)) for v in vectors]
    red = linalg.rref(rows)
    polys = [Poly(list(reversed(r))) for r in red]
    return tuple(sorted(polys, key=lambda p: p.degree, reverse=True))


def kernel_of(apply: Callable[[Poly], Poly], n: int) -> KernelBasis:
    """Kernel of a linear polynomial map restricted to degree <= n."""
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    cols = [apply(Poly.monomial(j)) for j in range(n + 1)]
    m = residual_matrix(cols)
    vecs = linalg.nullspace(m, ncols=n + 1) if m else linalg.nullspace([], ncols=n + 1)
    return KernelBasis(n, canonical_basis(vecs, n))


def polynomial_kernel(eq: DifferenceEquation, n: int) -> KernelBasis:
    """All polynomial solutions of ``eq`` with degree at most ``n``."""
    return kernel_of(lambda p: residual(eq, p), n)


def eigen_scan(hyp: HypergeometricData, n_max: int) -> list[tuple[int, Fraction, KernelBasis]]:
    """Kernel at degree bound ``n_max`` for each eigenvalue lambda_n, n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = []
    for n in range(n_max + 1):
        lam = lambda_n(hyp, n)
        out.append((n, lam, polynomial_kernel(hyp.equation(lam), n_max)))
    return out


def linear_dependence(y1: Poly, y2: Poly) -> tuple[Fraction, Fraction] | None:
    """Constants (C1, C2), not both zero, with C1 y1 + C2 y2 = 0; None if independent.

    If exactly one argument is the zero polynomial the pair puts all weight on
    it, e.g. y1 = 0 gives (1, 0).
    """
    if y1.is_zero() and y2.is_zero():
        raise ZeroPolynomialError("both polynomials are zero")
    if y1.is_zero():
        return Fraction(1), Fraction(0)
    if y2.is_zero():
        return Fraction(0), Fraction(1)
    if y1.degree != y2.degree:
        return None
    c = y2.lc / y1.lc
    if y1 * c != y2:
        return None
    return c, Fraction(-1)


def verify_kernel(eq_residual: Callable[[Poly], Poly], kb: KernelBasis) -> None:
    """Raise if a basis element is not a solution or the basis is dependent."""
    for p in kb.basis:
        if not eq_residual(p).is_zero():
            raise HSPolyError(f"kernel element {p} has nonzero residual")
    rows = [[p.coeff(i) for i in range(kb.degree_bound + 1)] for p in kb.basis]
    if rows and linalg.rank(rows) != len(rows):
        raise HSPolyError("kernel basis is linearly dependent")
