# Integer 2x2 matrices and the hyperbolicity test.
from torusrev import Mat2Z, classify_hyperbolicity, mat_pow, inverse_unimodular

cat = Mat2Z(2, 1, 1, 1)
print(cat, classify_hyperbolicity(cat).describe())

# entries grow like the leading eigenvalue ~2.618^n
for n in (1, 5, 20):
    print(n, mat_pow(cat, n))

print("inverse:", inverse_unimodular(cat))

# det -1 case: hyperbolic unless trace^2 + 4 is a square
for M in [Mat2Z(2, 3, 1, 1), Mat2Z(1, 0, 0, -1), Mat2Z(0, 1, 1, 0)]:
    v = classify_hyperbolicity(M)
    print(M, v.det, v.trace, v.reason.value)

# rotation by 90 degrees is elliptic
print(classify_hyperbolicity(Mat2Z(0, -1, 1, 0)).describe())
