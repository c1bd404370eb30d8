# Which integer matrices square to the identity, and what they fix on the torus.
from fractions import Fraction
from collections import Counter

from torusrev import enumerate_involutions, classify_involution, fixed_point_curves
from torusrev.involutions import is_fixed_on_torus
from torusrev import Mat2Z

invs = enumerate_involutions(3)
print(len(invs), "non-trivial involutions with entries in [-3, 3]")
print(Counter(classify_involution(A).family.value for A in invs))

for A in invs[:6]:
    print(A, "->", classify_involution(A))

# gamma even: two parallel circles; gamma odd: the two lifts close up into one
for g in (4, 3):
    A = Mat2Z(1, 0, g, -1)
    curves = fixed_point_curves(A)
    print(A, len(curves), "curve(s)")
    for c in curves:
        print("   ", c.describe())

A = Mat2Z(1, 0, 4, -1)
p = fixed_point_curves(A)[1].point(Fraction(1, 3))
print("point on second curve", p, "fixed:", is_fixed_on_torus(A, p))
print("(1/3, 1/3) fixed:", is_fixed_on_torus(A, (Fraction(1, 3), Fraction(1, 3))))
