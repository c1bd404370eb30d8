"""Machine-checked proof that orientation-reversing hyperbolic maps have no linear reversor.

For a concrete ``L`` with ``det(L) == -1`` every involution family is taken
with symbolic parameters and the reversibility equation
``A L - L^-1 A == 0`` is reduced, step by step, to a contradiction with
hyperbolicity. Each step is an exact polynomial identity checked with sympy
on the concrete entries of ``L``.

Triangular families: one entry of ``A L - L^-1 A`` does not depend on the
parameter and equals ``-+2b`` (lower) or ``-+2c`` (upper), which is non-zero
because ``b == 0`` or ``c == 0`` would force ``a + d == 0``.

General family, with ``E1 = al*b + be*d``, ``E2 = al*be*c - a*(1 - al**2)``
and ``E3 = b*al**2 + al*be*(a + d) + be**2*c - b``::

    E3 - al*E1          = al*be*a + be**2*c - b
    al*(...) - be*E2    = be*a - al*b
    (...) + E1          = be*(a + d)

so ``be != 0`` forces ``a + d == 0``, and then ``(a + d)**2 + 4 == 4`` is a
perfect square, so ``L`` would not be hyperbolic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp

from .errors import NotHyperbolic, OrientationPreserving
from .lattice import Mat2Z, classify_hyperbolicity, det

alpha, beta, gamma = sp.symbols("alpha beta gamma")


@dataclass(frozen=True)
class ProofStep:
    label: str
    claim: str
    verified: bool


@dataclass
class ObstructionTrace:
    matrix: Mat2Z
    steps: list[ProofStep] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return bool(self.steps) and all(s.verified for s in self.steps)

    def add(self, label, claim, ok):
        self.steps.append(ProofStep(label, claim, bool(ok)))


def _sym(M: Mat2Z) -> sp.Matrix:
    return sp.Matrix(M.rows())


def _difference(L: Mat2Z, A: sp.Matrix) -> sp.Matrix:
    Ls = _sym(L)
    # L^-1 for det -1 is -adj(L)
    Linv = sp.Matrix([[-L.d, L.b], [L.c, -L.a]])
    assert Ls * Linv == sp.eye(2)
    return (A * Ls - Linv * A).applyfunc(sp.expand)


def _is_zero(expr) -> bool:
    return sp.simplify(sp.expand(expr)) == 0


_TRIANGULAR = {
    "lower+": (sp.Matrix([[1, 0], [gamma, -1]]), (0, 1), "b"),
    "lower-": (sp.Matrix([[-1, 0], [gamma, 1]]), (0, 1), "b"),
    "upper+": (sp.Matrix([[1, gamma], [0, -1]]), (1, 0), "c"),
    "upper-": (sp.Matrix([[-1, gamma], [0, 1]]), (1, 0), "c"),
}


def build_obstruction(L: Mat2Z) -> ObstructionTrace:
    if det(L) != -1:
        raise OrientationPreserving(f"det{L} = {det(L)}, expected -1")
    v = classify_hyperbolicity(L)
    if not v.is_hyperbolic:
        raise NotHyperbolic(f"{L} is not hyperbolic", reason=v.reason)
    a, b, c, d = L.entries()
    trace = ObstructionTrace(L)

    # hyperbolicity facts used below
    trace.add("trace", f"a + d = {a + d} != 0 (a + d = 0 would make (a+d)^2 + 4 = 4 a square)", a + d != 0)
    trace.add("b_nonzero", f"b = {b} != 0 (b = 0 with ad = -1 forces a + d = 0)", b != 0)
    trace.add("c_nonzero", f"c = {c} != 0 (c = 0 with ad = -1 forces a + d = 0)", c != 0)

    for name, (A, (i, j), piv) in _TRIANGULAR.items():
        diff = _difference(L, A)
        entry = diff[i, j]
        val = b if piv == "b" else c
        ok = (
            sp.Poly(entry, gamma).degree() <= 0
            and entry != 0
            and sp.expand(entry) in (2 * val, -2 * val)
        )
        trace.add(
            f"{name}",
            f"entry ({i},{j}) of A L - L^-1 A is {entry}, independent of gamma and non-zero since {piv} != 0",
            ok,
        )

    # general family: A = [[al, be], [(1 - al^2)/be, -al]]
    A = sp.Matrix([[alpha, beta], [(1 - alpha**2) / beta, -alpha]])
    diff = _difference(L, A)
    E1 = alpha * b + beta * d
    E2 = alpha * beta * c - a * (1 - alpha**2)
    E3 = b * alpha**2 + alpha * beta * (a + d) + beta**2 * c - b
    trace.add("E1", "entry (0,1) = 2*E1", _is_zero(diff[0, 1] - 2 * E1))
    trace.add("E2", "beta * entry (1,0) = -2*E2", _is_zero(sp.cancel(beta * diff[1, 0]) + 2 * E2))
    trace.add("E3", "beta * entry (0,0) = E3", _is_zero(sp.cancel(beta * diff[0, 0]) - E3))

    F1 = sp.expand(E3 - alpha * E1)
    trace.add("step1", f"E3 - alpha*E1 = {F1}", _is_zero(F1 - (alpha * beta * a + beta**2 * c - b)))
    F2 = sp.expand(alpha * F1 - beta * E2)
    trace.add("step2", f"alpha*(E3 - alpha*E1) - beta*E2 = {F2}", _is_zero(F2 - (beta * a - alpha * b)))
    F3 = sp.expand(F2 + E1)
    trace.add("step3", f"previous + E1 = {F3}", _is_zero(F3 - beta * (a + d)))
    trace.add(
        "conclusion",
        f"beta*({a + d}) = 0 needs beta = 0, which the general family excludes",
        a + d != 0 and _is_zero(F3 - beta * (a + d)),
    )
    return trace


def validate_obstruction(trace: ObstructionTrace) -> bool:
    """Rebuild the trace from its matrix and check every step again."""
    fresh = build_obstruction(trace.matrix)
    return fresh.valid and [s.claim for s in fresh.steps] == [s.claim for s in trace.steps]
