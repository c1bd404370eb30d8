import random

import pytest
import sympy as sp

from torusrev.errors import NotHyperbolic, OrientationPreserving
from torusrev.lattice import Mat2Z, is_hyperbolic, iter_unimodular
from torusrev.obstruction import ObstructionTrace, ProofStep, build_obstruction, validate_obstruction

REVERSING = [L for L in iter_unimodular(6, -1) if is_hyperbolic(L)]


def test_example_matrices_validate():
    for L in (Mat2Z(2, 3, 1, 1), Mat2Z(3, 4, 1, 1), Mat2Z(4, 5, 1, 1)):
        tr = build_obstruction(L)
        assert tr.valid
        assert validate_obstruction(tr)
        labels = [s.label for s in tr.steps]
        assert labels[-1] == "conclusion"
        assert {"lower+", "lower-", "upper+", "upper-", "step1", "step2", "step3"} <= set(labels)


def test_random_reversing_matrices_validate():
    rng = random.Random(11)
    for L in rng.sample(REVERSING, 40):
        assert build_obstruction(L).valid, L


def test_tampered_trace_fails_validation():
    tr = build_obstruction(Mat2Z(2, 3, 1, 1))
    bad = ObstructionTrace(tr.matrix, tr.steps[:-1] + [ProofStep("conclusion", "forged", True)])
    assert bad.valid
    assert not validate_obstruction(bad)
    assert not ObstructionTrace(tr.matrix).valid


def test_errors():
    with pytest.raises(OrientationPreserving):
        build_obstruction(Mat2Z(2, 1, 1, 1))
    with pytest.raises(NotHyperbolic):
        build_obstruction(Mat2Z(1, 0, 0, -1))


def test_chain_holds_for_generic_entries():
    # the three-step elimination does not use det or hyperbolicity at all
    a, b, c, d, al, be = sp.symbols("a b c d al be")
    E1 = al * b + be * d
    E2 = al * be * c - a * (1 - al**2)
    E3 = b * al**2 + al * be * (a + d) + be**2 * c - b
    F = al * (E3 - al * E1) - be * E2 + E1
    assert sp.expand(F - be * (a + d)) == 0


def test_general_equations_match_matrix_entries_generically():
    # with ad - bc = -1 substituted, beta * (A L - L^-1 A) has entries (E3, 2 beta E1; -2 E2, ...)
    a, b, d, al, be = sp.symbols("a b d al be")
    c = (a * d + 1) / b
    L = sp.Matrix([[a, b], [c, d]])
    Linv = sp.Matrix([[-d, b], [c, -a]])
    assert sp.simplify(L * Linv - sp.eye(2)) == sp.zeros(2)
    A = sp.Matrix([[al, be], [(1 - al**2) / be, -al]])
    diff = A * L - Linv * A
    E1 = al * b + be * d
    E2 = al * be * c - a * (1 - al**2)
    E3 = b * al**2 + al * be * (a + d) + be**2 * c - b
    assert sp.simplify(diff[0, 1] - 2 * E1) == 0
    assert sp.simplify(be * diff[1, 0] + 2 * E2) == 0
    assert sp.simplify(be * diff[0, 0] - E3) == 0
