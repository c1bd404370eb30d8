# x^2 - D y^2 = N in all its flavours.
from torusrev import PellProblem, solve_general, brute_force_solutions, cf_sqrt, fundamental_solution

print(cf_sqrt(12), fundamental_solution(12))
print(cf_sqrt(61).period, fundamental_solution(61))   # famously large

for D, N in [(12, 4), (5, 4), (-3, 36), (0, 64), (9, 7), (396, 324), (3, -1)]:
    s = solve_general(PellProblem(D, N))
    print(f"{s.problem.equation():>16}  {s.kind.value:<16} reps={list(s.representatives)} lines={list(s.lines)}")

# classes expand through the automorph; compare with a plain scan
s = solve_general(PellProblem(5, 4))
mine = s.iter_up_to(1000)
scan = brute_force_solutions(PellProblem(5, 4), 1000)
print(len(mine), "solutions with |y| <= 1000, scan agrees:", sorted(mine) == sorted(scan))
print([sol for sol in mine if sol[0] > 0 and sol[1] >= 0])

# D = 421 has x1 with 20 digits; the scan bound would be useless here
print(fundamental_solution(421))
reps = solve_general(PellProblem(421, 900)).representatives
print(len(reps), "classes, smallest:", reps[:3])
