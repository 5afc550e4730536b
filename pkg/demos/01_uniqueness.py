"""Polynomial solutions of a difference equation, and when they are unique.

Run: python demos/01_uniqueness.py
"""
from fractions import Fraction as F

from hspoly import DifferenceEquation, Poly
from hspoly.corpus import corpus_build
from hspoly.errors import HypothesisViolation
from hspoly.fdeq import HypergeometricData, lambda_n
from hspoly.solver import eigen_scan, polynomial_kernel
from hspoly.uniqueness import certify

x = Poly.x()

# A small equation: x^2 D^2 y + (x + 2) D y - y(x + 1) = 0 with unit step.
eq = DifferenceEquation(x * x, x + 2, Poly.const(-1), 1)
kb = polynomial_kernel(eq, 6)
print("kernel up to degree 6:", [str(p) for p in kb.basis])

# The certificate reads the real roots of g and g - h r and looks for a lattice
# configuration that forces uniqueness.  It needs simple roots, so x^2 is refused.
try:
    certify(eq)
except HypothesisViolation as exc:
    print("certify refused:", exc)

eq = DifferenceEquation(x * (x - F(11, 2)), Poly([F(-3, 16), F(-9, 2)]), Poly.const(F(2, 3)), 1)
cert = certify(eq)
print("g - h r =", eq.g_minus_hr, " g =", eq.g)
print("verdict:", cert.verdict.value, "witness root", cert.witness_root.root.approx(10), cert.direction)

# Hypergeometric coefficients give an eigenvalue problem.  Two degrees can share
# an eigenvalue, yet the kernel stays one-dimensional.
hyp = HypergeometricData(1, 0, F(-1, 4), -4, F(1, 3))
for n, lam, k in eigen_scan(hyp, 5):
    print(f"n={n} lambda={str(lam):>4} dim={k.dimension} degrees={k.degrees()}")
print("lambda_1 == lambda_4:", lambda_n(hyp, 1) == lambda_n(hyp, 4))

# Not every case is covered by a theorem: for Kravchuk data the roots of g and
# g - h r balance on one lattice and the certificate is inconclusive, although
# the kernel is still one-dimensional.
kr = corpus_build("kravchuk").equation(3)
print("kravchuk n=3:", certify(kr).verdict.value, "dim", polynomial_kernel(kr, 10).dimension)
