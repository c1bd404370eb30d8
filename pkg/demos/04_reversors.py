# Searching for reversing involutions A (A L A = L^-1) and the two reference tables.
from torusrev import Mat2Z, find_reversors, involution_family, orientation_reversing_analysis
from torusrev.tables import example1, example2

for L in [Mat2Z(2, 1, 3, 2), Mat2Z(2, 1, 1, 1), Mat2Z(4, 9, 7, 16)]:
    rep = find_reversors(L, 5)
    print(L, rep.case1.reason, "|", rep.case2.reason)
    print("   pell:", rep.case3.problem.equation(), rep.case3.solutions.kind.value,
          "admissible:", len(rep.case3.admissible), "rejected:", len(rep.case3.rejected))
    print("   first few:", [str(A) for A in rep.reversors_found[:4]])

# every A L^n is again a reversor
A, L = Mat2Z(1, 0, 0, -1), Mat2Z(2, 1, 3, 2)
for B in involution_family(A, L, range(-2, 3)):
    print(B)

# orientation reversing: nothing, and a proof of why
rep = orientation_reversing_analysis(Mat2Z(2, 3, 1, 1))
print(rep.conic.value, rep.case3.problem.equation(), rep.case3.solutions.count(), rep.reversors_found)
for step in rep.obstruction.steps[-4:]:
    print("  ", step.label, step.claim, step.verified)

for row in example1():
    print(row.L, row.gammas, row.equation, "MATCH" if row.match else "MISMATCH")
for row in example2():
    print(row.L, row.delta, row.equation, row.count, row.conic, "MATCH" if row.match else "MISMATCH")
