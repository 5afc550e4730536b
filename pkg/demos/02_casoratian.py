"""The Casoratian of two lattice solutions and its Gamma_h closed form.

Run: python demos/02_casoratian.py
"""
from fractions import Fraction as F

import mpmath

from hspoly import DifferenceEquation, Poly
from hspoly.casoratian import casoratian_values, verify_abel
from hspoly.fdeq import cauchy_iterate

x = Poly.x()
h = F(1, 2)
g = (x - F(1, 3)) * 2            # roots of g
gmhr = (x + F(5, 4)) * 6         # roots of g - h r; kappa = 3
eq = DifferenceEquation(g, (g - gmhr) * (1 / h), Poly.const(F(2, 7)), h)

x0 = F(2, 9)
y1 = cauchy_iterate(eq, x0, 1, 0, 21)
y2 = cauchy_iterate(eq, x0, 0, 1, 21)
w = casoratian_values(y1, y2, h)
print("first Casoratian values:", [str(v) for v in w[:4]])
print("W(x+h) g(x) == (g - h r)(x) W(x) at x0:", w[1] * g(x0) == gmhr(x0) * w[0])

with mpmath.workdps(64):
    good = verify_abel(eq, y1, y2, x0, 20, dps=64)
    lit = verify_abel(eq, y1, y2, x0, 20, literal_kappa=True, dps=64)
print("closed form with kappa^((x - h/2)/h): rel. stddev of W / closed form =", good.ratio_rel_stddev)
print("closed form with kappa^(x - h/2):     rel. stddev of W / closed form =", lit.ratio_rel_stddev)
print("the two exponents agree only when h = 1")
