"""Principal sums by mu-regularization, and the step-h Gamma function.

Run: python demos/04_norlund_gamma_h.py
"""
import math
from fractions import Fraction as F

from hspoly.gammah import gamma_h, gamma_h_factorial
from hspoly.norlund import Phi, RegularizationConfig, principal_sum_closed, principal_sum_numeric

# Constant phi = a: neither the integral nor the sum converges, but their
# regularized difference has a limit, a (x - c - h/2).
for p in (1, 2):
    res = principal_sum_numeric(Phi.constant(1.0), 0, 3, 1, RegularizationConfig(p=p))
    print(f"constant, p={p}: {res.value:.12f} +- {res.error:.1e} (closed form 5/2)")

# Exponential decay converges outright.
res = principal_sum_numeric(Phi.exponential(), 0, 0, 1)
print("exponential:", res.value, "closed form", principal_sum_closed("exponential", 0, 1, 0))

# Logarithm: the principal sum is h ln Gamma_h(x) up to a constant.
res = principal_sum_numeric(Phi.logarithm(), 0, 4, 1)
print("logarithm at x=4:", res.value, "closed form", principal_sum_closed("logarithm", 4, 1, 0))

# Gamma_h(n h + h) = h^n n!
h = F(7, 3)
for n in (0, 3, 8):
    print(f"Gamma_h({n * h + h}) with h={h}:", gamma_h(n * h + h, h).value, "exact", gamma_h_factorial(n, h))
print("pole at -2h:", gamma_h(-2 * h, h).is_pole, " 20! check:", gamma_h_factorial(20, 1) == math.factorial(20))
