import random
from fractions import Fraction

import pytest

from torusrev.errors import InvalidParams, NotAnInvolution, TrivialInvolution
from torusrev.involutions import (
    Family,
    InvolutionSpec,
    classify_involution,
    enumerate_involutions,
    enumerate_involutions_brute,
    fixed_point_curves,
    is_fixed_on_torus,
    materialize,
)
from torusrev.lattice import IDENTITY, MINUS_IDENTITY, Mat2Z, is_involution


def test_classify_examples():
    assert classify_involution(Mat2Z(1, 0, 7, -1)) == InvolutionSpec(Family.LOWER_PLUS, gamma=7)
    assert classify_involution(Mat2Z(5, 3, -8, -5)) == InvolutionSpec.general(5, 3)
    # overlap at gamma = 0 resolves to the first family
    assert classify_involution(Mat2Z(1, 0, 0, -1)) == InvolutionSpec(Family.LOWER_PLUS, gamma=0)
    assert classify_involution(Mat2Z(-1, 0, 0, 1)).family is Family.LOWER_MINUS
    assert classify_involution(Mat2Z(-1, 4, 0, 1)) == InvolutionSpec(Family.UPPER_MINUS, gamma=4)


def test_classify_errors():
    with pytest.raises(NotAnInvolution):
        classify_involution(Mat2Z(2, 1, 1, 1))
    with pytest.raises(TrivialInvolution):
        classify_involution(IDENTITY)
    with pytest.raises(TrivialInvolution):
        classify_involution(MINUS_IDENTITY)


def test_materialize_examples():
    assert materialize(InvolutionSpec.general(2, 1)) == Mat2Z(2, 1, -3, -2)
    assert materialize(InvolutionSpec.triangular("lower+", 0)) == Mat2Z(1, 0, 0, -1)
    assert materialize(InvolutionSpec.triangular("upper-", 3)) == Mat2Z(-1, 3, 0, 1)


@pytest.mark.parametrize(
    "spec",
    [
        InvolutionSpec.general(2, 5),
        InvolutionSpec.general(3, 0),
        InvolutionSpec.general(1, 2),
        InvolutionSpec.general(-1, 1),
        InvolutionSpec(Family.LOWER_PLUS),
        InvolutionSpec(Family.GENERAL, alpha=2),
        InvolutionSpec(Family.UPPER_PLUS, gamma=1, alpha=2),
    ],
)
def test_materialize_rejects(spec):
    with pytest.raises(InvalidParams):
        materialize(spec)


def test_triangular_constructor_rejects_general():
    with pytest.raises(InvalidParams):
        InvolutionSpec.triangular("general", 1)


def test_swap_is_general_with_alpha_zero():
    spec = classify_involution(Mat2Z(0, 1, 1, 0))
    assert (spec.family, spec.alpha, spec.beta) == (Family.GENERAL, 0, 1)
    assert materialize(spec) == Mat2Z(0, 1, 1, 0)


def test_enumerate_small_bounds():
    assert enumerate_involutions(0) == []
    one = enumerate_involutions(1)
    # oracle: every one of the 81 matrices in the box
    assert one == sorted(enumerate_involutions_brute(1))
    assert len(one) == 12
    assert Mat2Z(0, 1, 1, 0) in one and Mat2Z(0, -1, -1, 0) in one


@pytest.mark.parametrize("bound", [2, 3, 5])
def test_enumerate_matches_quartic_scan(bound):
    assert enumerate_involutions(bound) == sorted(enumerate_involutions_brute(bound))


def test_enumerate_closure_and_trichotomy():
    for A in enumerate_involutions(12):
        spec = classify_involution(A)
        assert materialize(spec) == A
        assert is_involution(A)
        assert A.det == -1 and A.trace == 0
        if A.b == 0 or A.c == 0:
            assert {A.a, A.d} == {1, -1}


def test_roundtrip_specs():
    specs = [InvolutionSpec.triangular(f, g) for f in Family if f.is_triangular for g in range(-6, 7)]
    for al in range(-9, 10):
        rest = 1 - al * al
        if rest == 0:
            continue
        specs += [InvolutionSpec.general(al, be) for be in range(-abs(rest), abs(rest) + 1) if be and rest % be == 0]
    for spec in specs:
        A = materialize(spec)
        back = classify_involution(A)
        assert materialize(back) == A
        # gamma = 0 specs collapse onto lower+/lower-
        if spec.family is Family.GENERAL or spec.gamma != 0:
            assert back == spec


# --- fixed curves ---------------------------------------------------------


def bounded_k_offsets(A):
    """Solve (A - I) v = k for every integer k with |k_i| <= 1 + max|A - I|.

    Only points on the circles x = 0 and y = 0 are kept; every fixed curve
    crosses one of them.
    """
    a, b, c, d = A.entries()
    m = 1 + max(abs(e) for e in (a - 1, b, c, d - 1))
    pts = set()
    for k1 in range(-m, m + 1):
        for k2 in range(-m, m + 1):
            # (a-1) x + b y = k1 ; c x + (d-1) y = k2, restricted to x = 0 then y = 0
            for fix_x in (True, False):
                if fix_x:
                    coef1, coef2 = b, d - 1
                else:
                    coef1, coef2 = a - 1, c
                if coef1 == 0 and coef2 == 0:
                    continue
                if coef1:
                    t = Fraction(k1, coef1)
                    if coef2 * t != k2:
                        continue
                else:
                    t = Fraction(k2, coef2)
                    if k1 != 0:
                        continue
                if 0 <= t < 1:
                    pts.add((Fraction(0), t) if fix_x else (t, Fraction(0)))
    return pts


def grid_fixed_points(A, q):
    return {
        (Fraction(i, q), Fraction(j, q))
        for i in range(q)
        for j in range(q)
        if is_fixed_on_torus(A, (Fraction(i, q), Fraction(j, q)))
    }


def test_fixed_curves_lower_plus_even_gamma():
    for g in (-6, -2, 0, 2, 4, 10):
        curves = fixed_point_curves(Mat2Z(1, 0, g, -1))
        assert len(curves) == 2
        # (2, g) reduced
        assert {c.direction for c in curves} == {(1, g // 2)}
        assert {c.offset for c in curves} == {(0, 0), (0, Fraction(1, 2))}


def test_fixed_curves_lower_plus_odd_gamma_is_connected():
    # the two lifted lines meet the same torus curve when gamma is odd
    for g in (-5, -1, 1, 3, 7):
        curves = fixed_point_curves(Mat2Z(1, 0, g, -1))
        assert len(curves) == 1
        assert curves[0].direction == (2, g)
        assert curves[0].contains((0, Fraction(1, 2)))


def test_fixed_curves_axis_examples():
    c = fixed_point_curves(Mat2Z(-1, 0, 0, 1))
    assert [(x.direction, x.offset) for x in c] == [((0, 1), (0, 0)), ((0, 1), (Fraction(1, 2), 0))]
    c = fixed_point_curves(Mat2Z(1, 0, 0, -1))
    assert [(x.direction, x.offset) for x in c] == [((1, 0), (0, 0)), ((1, 0), (0, Fraction(1, 2)))]


SAMPLE = enumerate_involutions(6)[::7]


@pytest.mark.parametrize("A", SAMPLE, ids=str)
def test_points_on_curves_are_fixed(A):
    rng = random.Random(hash(A.entries()))
    for curve in fixed_point_curves(A):
        for _ in range(25):
            t = Fraction(rng.randint(-500, 500), rng.randint(1, 60))
            assert is_fixed_on_torus(A, curve.point(t))


@pytest.mark.parametrize("A", SAMPLE, ids=str)
def test_points_off_curves_are_not_fixed(A):
    rng = random.Random(7 + hash(A.entries()))
    curves = fixed_point_curves(A)
    checked = 0
    while checked < 100:
        q = rng.randint(2, 40)
        p = (Fraction(rng.randrange(q), q), Fraction(rng.randrange(q), q))
        if any(c.contains(p) for c in curves):
            continue
        assert not is_fixed_on_torus(A, p)
        checked += 1


@pytest.mark.parametrize("A", SAMPLE, ids=str)
def test_curves_cover_grid_fixed_points(A):
    curves = fixed_point_curves(A)
    for q in (6, 12):
        for p in grid_fixed_points(A, q):
            assert sum(c.contains(p) for c in curves) == 1


@pytest.mark.parametrize("A", SAMPLE, ids=str)
def test_component_count_matches_bounded_k_oracle(A):
    # each component crosses the axis circle x = 0 (or y = 0) |n2| (or |n1|) times,
    # so compare crossings instead of raw component counts
    curves = fixed_point_curves(A)
    pts = bounded_k_offsets(A)
    on_axis = {p for p in pts if p[0] == 0} or pts
    for p in on_axis:
        assert any(c.contains(p) for c in curves)
    for c in curves:
        assert any(c.contains(p) for p in pts)


def test_fixed_curve_errors():
    with pytest.raises(TrivialInvolution):
        fixed_point_curves(IDENTITY)
    with pytest.raises(NotAnInvolution):
        fixed_point_curves(Mat2Z(2, 1, 1, 1))


def test_describe_mentions_offset_and_direction():
    c = fixed_point_curves(Mat2Z(1, 0, 4, -1))[1]
    assert c.describe() == "(x, y) = (0, 1/2) + t*(1, 2)"
