"""The continuous equation A y'' + B y' + V y = 0 and its degenerate cases.

Run: python demos/05_continuous_limit.py
"""
from hspoly.contode import (ContinuousEquation, continuous_kernel, lesky_ttrr, residues,
                            shapiro_case_detect)
from hspoly.fdeq import HypergeometricData, lambda_n
from hspoly.ratpoly import Poly

x = Poly.x()

# A = x^2 + 5, B = -2x, V = 2: two independent polynomial solutions.
ceq = ContinuousEquation(x * x + 5, Poly([0, -2]), Poly.const(2))
print("case:", shapiro_case_detect(1, 0, 5, -2, 0).value)
print("kernel:", [str(p) for p in continuous_kernel(ceq, 6).basis])

# Changing f alone keeps the eigenvalue collision but restores uniqueness.
hyp = HypergeometricData(1, 0, 5, -2, 1)
print("case with f = 1:", shapiro_case_detect(1, 0, 5, -2, 1).value)
for n in range(4):
    k = continuous_kernel(ContinuousEquation.hypergeometric(1, 0, 5, -2, 1, lambda_n(hyp, n)), 6)
    print(f"  lambda_{n} = {lambda_n(hyp, n)}: dim {k.dimension}")

# The three-term recurrence can also rule a degree out.
print("a=1, c=1, d=-1, n=2:", lesky_ttrr(1, 0, 1, -1, 0, 2))

# Residues of B/A at the roots of A describe B completely.
print(residues(x * (x - 1), (x - 1) * -2 - x).to_json())
