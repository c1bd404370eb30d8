import itertools

import pytest
from hypothesis import given, strategies as st

from torusrev.errors import NotUnimodular
from torusrev.lattice import (
    IDENTITY,
    Mat2Z,
    Orientation,
    classify_hyperbolicity,
    det,
    inverse_unimodular,
    is_involution,
    is_perfect_square,
    isqrt_ceil,
    iter_unimodular,
    mat_mul,
    mat_pow,
)

ints = st.integers(min_value=-10**6, max_value=10**6)
mats = st.builds(Mat2Z, ints, ints, ints, ints)


def unimodular_matrices(max_steps=12):
    # words in the SL(2,Z) generators, optionally times diag(1, -1)
    gens = [Mat2Z(1, 1, 0, 1), Mat2Z(1, 0, 1, 1), Mat2Z(1, -1, 0, 1), Mat2Z(1, 0, -1, 1)]
    return st.tuples(
        st.lists(st.sampled_from(gens), max_size=max_steps), st.booleans()
    ).map(_word)


def _word(args):
    word, flip = args
    M = Mat2Z(1, 0, 0, -1) if flip else IDENTITY
    for g in word:
        M = mat_mul(M, g)
    return M


def naive_mul(M, N):
    A, B = M.rows(), N.rows()
    return Mat2Z.from_rows(
        [[sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    )


@pytest.mark.parametrize(
    "M, expected",
    [
        (Mat2Z(2, 1, 3, 2), 1),
        (IDENTITY, 1),
        (Mat2Z(2, 3, 1, 1), -1),
    ],
)
def test_det_examples(M, expected):
    assert det(M) == expected


def test_mat_mul_examples():
    assert mat_mul(Mat2Z(2, 1, -3, -2), Mat2Z(2, 1, 3, 2)) == Mat2Z(7, 4, -12, -7)
    M = Mat2Z(5, -7, 11, 13)
    assert mat_mul(IDENTITY, M) == M
    A = Mat2Z(1, 0, 1, -1)
    assert mat_mul(A, A) == IDENTITY


def test_inverse_examples():
    inv = inverse_unimodular(Mat2Z(2, 1, 3, 2))
    assert inv == Mat2Z(2, -1, -3, 2)
    assert mat_mul(Mat2Z(2, 1, 3, 2), inv) == IDENTITY
    assert inverse_unimodular(IDENTITY) == IDENTITY
    with pytest.raises(NotUnimodular):
        inverse_unimodular(Mat2Z(2, 0, 0, 2))


def test_mat_pow_examples():
    assert mat_pow(Mat2Z(2, 1, 1, 1), 2) == Mat2Z(5, 3, 3, 2)
    assert mat_pow(Mat2Z(9, 4, 2, 1), 0) == IDENTITY
    assert mat_pow(Mat2Z(2, 1, 3, 2), -1) == Mat2Z(2, -1, -3, 2)
    with pytest.raises(NotUnimodular):
        mat_pow(Mat2Z(2, 0, 0, 2), -1)
    # non-unimodular positive powers are fine
    assert mat_pow(Mat2Z(2, 0, 0, 2), 10) == Mat2Z(1024, 0, 0, 1024)


def test_classify_hyperbolicity_examples():
    v = classify_hyperbolicity(Mat2Z(2, 1, 1, 1))
    assert (v.det, v.trace, v.is_hyperbolic, v.reason.value) == (1, 3, True, "H1_pass")
    assert v.orientation is Orientation.PRESERVING

    v = classify_hyperbolicity(Mat2Z(0, 1, -1, 0))
    assert (v.det, v.trace, v.is_hyperbolic, v.reason.value) == (1, 0, False, "H1_fail")

    v = classify_hyperbolicity(Mat2Z(2, 3, 1, 1))
    assert (v.det, v.trace, v.is_hyperbolic, v.reason.value) == (-1, 3, True, "H2_pass")
    assert v.orientation is Orientation.REVERSING

    # trace 0 with det -1: 0 + 4 is a square
    assert classify_hyperbolicity(Mat2Z(1, 0, 0, -1)).reason.value == "H2_fail"
    v = classify_hyperbolicity(Mat2Z(2, 0, 0, 2))
    assert not v.is_sl2z and not v.is_hyperbolic and v.reason.value == "not_unimodular"
    assert v.orientation is None


def test_is_involution_examples():
    assert is_involution(Mat2Z(1, 0, 5, -1))
    assert is_involution(IDENTITY)
    assert not is_involution(Mat2Z(2, 1, 1, 1))


def test_rejects_non_integer_entries():
    with pytest.raises(TypeError):
        Mat2Z(1.5, 0, 0, 1)


def test_perfect_square_large():
    n = 10**40 + 7
    assert is_perfect_square(n * n)
    assert not is_perfect_square(n * n + 1)
    assert not is_perfect_square(-4)
    assert isqrt_ceil(n * n) == n and isqrt_ceil(n * n + 1) == n + 1
    assert isqrt_ceil(0) == 0 and isqrt_ceil(-3) == 0


@given(mats, mats)
def test_mat_mul_matches_naive(M, N):
    assert mat_mul(M, N) == naive_mul(M, N)


@given(mats, mats)
def test_det_multiplicative(M, N):
    assert det(mat_mul(M, N)) == det(M) * det(N)


@given(unimodular_matrices())
def test_inverse_both_sides(M):
    inv = inverse_unimodular(M)
    assert mat_mul(M, inv) == IDENTITY
    assert mat_mul(inv, M) == IDENTITY


@given(unimodular_matrices(6), st.integers(-6, 6), st.integers(-6, 6))
def test_pow_additive(M, m, n):
    assert mat_pow(M, m + n) == mat_mul(mat_pow(M, m), mat_pow(M, n))


@given(unimodular_matrices(8), st.integers(0, 20))
def test_pow_matches_repeated_product(M, n):
    P = IDENTITY
    for _ in range(n):
        P = naive_mul(P, M)
    assert mat_pow(M, n) == P


@given(unimodular_matrices())
def test_hyperbolic_trace_bounds(M):
    v = classify_hyperbolicity(M)
    if v.is_hyperbolic:
        assert v.is_sl2z
        if v.det == 1:
            assert abs(v.trace) >= 3
    if v.det == 1:
        assert v.is_hyperbolic == (abs(v.trace) >= 3)


def test_involutions_in_box_have_trace_zero_det_minus_one():
    rng = range(-3, 4)
    for e in itertools.product(rng, repeat=4):
        M = Mat2Z(*e)
        if is_involution(M) and M not in (IDENTITY, -IDENTITY):
            assert det(M) == -1 and M.trace == 0


@pytest.mark.parametrize("det_value", [1, -1])
def test_iter_unimodular_matches_quartic_scan(det_value):
    B = 4
    rng = range(-B, B + 1)
    brute = [Mat2Z(*e) for e in itertools.product(rng, repeat=4) if Mat2Z(*e).det == det_value]
    fast = list(iter_unimodular(B, det_value))
    assert fast == sorted(brute)
