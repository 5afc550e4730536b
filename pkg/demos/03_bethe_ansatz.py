"""Zeros of a Charlier polynomial and the discrete Bethe-Ansatz equations.

Run: python demos/03_bethe_ansatz.py
"""
import mpmath

from hspoly.bethe import RootSet, verify_solution_via_bae
from hspoly.corpus import corpus_build
from hspoly.ratpoly import real_roots
from hspoly.solver import polynomial_kernel

entry = corpus_build("charlier")
eq = entry.equation(6)
y = polynomial_kernel(eq, 6).basis[0]
print("degree-6 solution:", y)

with mpmath.workdps(50):
    zeros = real_roots(y).approx(50)
    print("zeros:", [mpmath.nstr(z, 12) for z in zeros])
    v = verify_solution_via_bae(eq, RootSet(zeros))
    print("BAE pass:", v.passed, "max residual", mpmath.nstr(v.max_residual, 3))

    moved = list(zeros)
    moved[2] += mpmath.mpf("1e-3")
    v = verify_solution_via_bae(eq, RootSet(moved))
    print("one zero moved by 1e-3 -> pass:", v.passed, "max residual", mpmath.nstr(v.max_residual, 3))
