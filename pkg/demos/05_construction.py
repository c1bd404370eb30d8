# Given an involution, build a hyperbolic map it reverses.
from torusrev import InvolutionSpec, construct_reversible_anosov, materialize, is_r_reversible
from torusrev import classify_hyperbolicity

specs = [
    InvolutionSpec.triangular("lower+", 0),
    InvolutionSpec.triangular("lower+", 3),
    InvolutionSpec.triangular("upper-", -2),
    InvolutionSpec.general(2, 1),
    InvolutionSpec.general(5, -8),
    InvolutionSpec.general(0, 1),   # the coordinate swap
]
for spec in specs:
    A = materialize(spec)
    L = construct_reversible_anosov(spec)
    print(f"{str(spec):<28} A={A}  L={L}  trace={L.trace}  ok={is_r_reversible(L, A)}")

# general family has a second recipe with -beta
spec = InvolutionSpec.general(3, 4)
for choice in (0, 1):
    L = construct_reversible_anosov(spec, choice)
    print(choice, L, classify_hyperbolicity(L).reason.value)
