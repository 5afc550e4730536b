"""Polynomial solutions of second-order difference equations and their uniqueness."""
from .errors import (HSPolyError, HypothesisViolation, InputError, NumericalFailure, PoleError,
                     ZeroPolynomialError, ZeroStepError)
from .fdeq import DifferenceEquation, HypergeometricData, cauchy_iterate, lambda_n, residual
from .ratpoly import Poly, RealRoot, RootList, real_roots
from .solver import KernelBasis, eigen_scan, polynomial_kernel
from .uniqueness import UniquenessCertificate, Verdict, certify

__version__ = "0.1.0"

__all__ = [
    "HSPolyError", "HypothesisViolation", "InputError", "NumericalFailure", "PoleError",
    "ZeroPolynomialError", "ZeroStepError", "DifferenceEquation", "HypergeometricData",
    "cauchy_iterate", "lambda_n", "residual", "Poly", "RealRoot", "RootList", "real_roots",
    "KernelBasis", "eigen_scan", "polynomial_kernel", "UniquenessCertificate", "Verdict",
    "certify", "__version__",
]
