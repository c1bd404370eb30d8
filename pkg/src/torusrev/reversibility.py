"""Linear reversing involutions of hyperbolic toral automorphisms.

A toral automorphism induced by ``L`` is reversed by the involution induced
by ``A`` when ``A @ L == inverse(L) @ A``. For orientation-preserving ``L``
the reversors are found family by family: the triangular ones reduce to a
divisibility test, the general family to a Pell equation. Orientation
reversing ``L`` admits no linear reversor at all; see
``orientation_reversing_analysis``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InvalidParams,
    NoRecipe,
    NotAnInvolution,
    NotHyperbolic,
    NotReversible,
    NotUnimodular,
    OrientationPreserving,
    OrientationReversing,
)
from .involutions import Family, InvolutionSpec, materialize
from .lattice import (
    IDENTITY,
    MINUS_IDENTITY,
    Mat2Z,
    Orientation,
    classify_hyperbolicity,
    det,
    inverse_unimodular,
    is_involution,
    mat_mul,
    mat_pow,
)
from .pell import (
    ConicKind,
    PellProblem,
    PellSolutionSet,
    SolutionKind,
    automorph_orbit,
    classify_conic,
    reversor_pell_problem,
    solve_general,
)

DEFAULT_DEPTH = 10


def is_r_reversible(L: Mat2Z, A: Mat2Z) -> bool:
    if det(L) not in (1, -1):
        raise NotUnimodular(f"det{L} = {det(L)}")
    if not is_involution(A):
        raise NotAnInvolution(f"{A} is not an involution")
    return mat_mul(A, L) == mat_mul(inverse_unimodular(L), A)


def scan_reversors(L: Mat2Z, candidates) -> np.ndarray:
    """Boolean mask of the candidate matrices (shape ``(k, 2, 2)``) reversing ``L``.

    Vectorised version of ``is_r_reversible`` for exhaustive sweeps; the
    candidates are assumed to be involutions already.
    """
    C = np.asarray(candidates)
    Lm = np.array(L.rows(), dtype=np.int64)
    Li = np.array(inverse_unimodular(L).rows(), dtype=np.int64)
    big = int(np.abs(C).max(initial=0)) * max(L.max_abs(), 1)
    # products must stay well inside int64
    dtype = np.int64 if big < 2**60 else object
    C = C.astype(dtype)
    lhs = C @ Lm.astype(dtype)
    rhs = Li.astype(dtype) @ C
    return np.all(lhs == rhs, axis=(1, 2))


def as_array(mats) -> np.ndarray:
    return np.array([m.rows() for m in mats], dtype=np.int64).reshape(-1, 2, 2)


# --- report types --------------------------------------------------------


@dataclass(frozen=True)
class TrivialVerdict:
    """Why +I and -I never reverse a hyperbolic ``L``.

    Either one reverses ``L`` iff ``L == inverse(L)``, i.e. ``a == d`` and
    ``b == c == 0`` (det +1) or ``a == -d`` (det -1).
    """

    identity_reverses: bool
    minus_identity_reverses: bool
    forced_conditions: str
    conditions_hold: bool
    l_squared_is_identity: bool


def trivial_verdict(L: Mat2Z) -> TrivialVerdict:
    a, b, c, d = L.entries()
    if det(L) == 1:
        forced = "a = d and b = c = 0"
        holds = a == d and b == 0 and c == 0
    else:
        forced = "a = -d"
        holds = a == -d
    linv = inverse_unimodular(L)
    return TrivialVerdict(
        identity_reverses=mat_mul(IDENTITY, L) == mat_mul(linv, IDENTITY),
        minus_identity_reverses=mat_mul(MINUS_IDENTITY, L) == mat_mul(linv, MINUS_IDENTITY),
        forced_conditions=forced,
        conditions_hold=holds,
        l_squared_is_identity=mat_mul(L, L) == IDENTITY,
    )


@dataclass(frozen=True)
class TriangularReversor:
    family: Family
    gamma: int
    matrix: Mat2Z


@dataclass(frozen=True)
class TriangularCase:
    """Outcome for one pair of triangular families (lower or upper)."""

    applicable: bool
    divisible: bool
    reversors: tuple[TriangularReversor, ...] = ()
    reason: str = ""

    def gamma_for(self, family: Family) -> int | None:
        for r in self.reversors:
            if r.family is family:
                return r.gamma
        return None


@dataclass(frozen=True)
class GeneralReversor:
    alpha: int
    beta: int
    x: int
    y: int
    matrix: Mat2Z


@dataclass(frozen=True)
class RejectedSolution:
    """A Pell solution that does not give an admissible involution."""

    x: int
    y: int
    code: str
    reason: str


@dataclass(frozen=True)
class GeneralCase:
    problem: PellProblem
    solutions: PellSolutionSet
    depth: int
    admissible: tuple[GeneralReversor, ...]
    rejected: tuple[RejectedSolution, ...]
    status: str = "bounded enumeration"


@dataclass
class ReversibilityReport:
    input: Mat2Z
    orientation: Orientation
    verdict_trivial: TrivialVerdict
    case1: TriangularCase | None = None
    case2: TriangularCase | None = None
    case3: GeneralCase | None = None
    reversors_found: list[Mat2Z] = field(default_factory=list)
    obstruction: object | None = None
    conic: ConicKind | None = None
    warnings: list[str] = field(default_factory=list)


# --- orientation preserving: the three cases ------------------------------


def _require_hyperbolic(L: Mat2Z):
    v = classify_hyperbolicity(L)
    if not v.is_hyperbolic:
        raise NotHyperbolic(f"{L} is not hyperbolic: {v.describe()}", reason=v.reason)
    return v


def _triangular_case(L: Mat2Z, lower: bool) -> TriangularCase:
    a, b, c, d = L.entries()
    pivot = b if lower else c
    name = "b" if lower else "c"
    if pivot == 0:
        return TriangularCase(
            applicable=False,
            divisible=False,
            reason=f"{name} = 0: the condition {name}*gamma = d - a forces a = d",
        )
    if (d - a) % pivot:
        return TriangularCase(
            applicable=True,
            divisible=False,
            reason=f"{name} = {pivot} does not divide d - a = {d - a}",
        )
    g = (d - a) // pivot
    fams = (Family.LOWER_PLUS, Family.LOWER_MINUS) if lower else (
        Family.UPPER_PLUS, Family.UPPER_MINUS)
    found = []
    for fam, gamma in zip(fams, (g, -g)):
        A = materialize(InvolutionSpec(fam, gamma=gamma))
        if not is_r_reversible(L, A):
            raise AssertionError(f"divisibility predicted {A} reverses {L}")
        found.append(TriangularReversor(fam, gamma, A))
    return TriangularCase(
        applicable=True,
        divisible=True,
        reversors=tuple(found),
        reason=f"{name} = {pivot} divides d - a = {d - a}",
    )


def _general_candidates(sol_set: PellSolutionSet, depth: int) -> set[tuple[int, int]]:
    if sol_set.kind is SolutionKind.INFINITE_CLASSES:
        out = set()
        for s in sol_set.solutions:
            out |= automorph_orbit(sol_set.problem.D, sol_set.automorph, s, depth)
        return out
    if sol_set.kind is SolutionKind.DEGENERATE_LINES:
        return set(sol_set.iter_up_to(depth))
    return set(sol_set.solutions)


def _general_case(L: Mat2Z, depth: int) -> GeneralCase:
    a, b, c, d = L.entries()
    problem = reversor_pell_problem(L)
    sols = solve_general(problem)
    shift = d - a if det(L) == 1 else a + d
    admissible, rejected = [], []
    for x, y in sorted(_general_candidates(sols, depth), key=lambda s: (abs(s[1]), s[1], s[0])):
        if y == 0:
            rejected.append(RejectedSolution(x, y, "beta_zero", "y = 0 gives beta = 0"))
            continue
        num = x - shift * y
        if b == 0 or num % (2 * b):
            rejected.append(RejectedSolution(x, y, "alpha_not_integral", f"2b = {2 * b} does not divide x - ({shift})y = {num}"))
            continue
        alpha, beta = num // (2 * b), y
        if alpha * alpha == 1:
            rejected.append(RejectedSolution(x, y, "alpha_squared_one", "alpha^2 = 1 (triangular family)"))
            continue
        if (1 - alpha * alpha) % beta:
            rejected.append(RejectedSolution(x, y, "beta_not_divisor", f"beta = {beta} does not divide 1 - alpha^2 = {1 - alpha * alpha}"))
            continue
        A = materialize(InvolutionSpec.general(alpha, beta))
        if not is_r_reversible(L, A):
            rejected.append(RejectedSolution(x, y, "not_reversing", "fails A L = L^-1 A"))
            continue
        admissible.append(GeneralReversor(alpha, beta, x, y, A))
    return GeneralCase(problem, sols, depth, tuple(admissible), tuple(rejected))


def _dedupe(mats):
    seen = set()
    out = []
    for m in mats:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def find_reversors(L: Mat2Z, case3_class_depth: int = DEFAULT_DEPTH) -> ReversibilityReport:
    """All linear reversing involutions of an orientation-preserving hyperbolic ``L``.

    The triangular cases are exact. The general family is searched along the
    Pell solution classes up to ``case3_class_depth`` automorph steps each
    way, so an empty general case means "none within the horizon".
    """
    v = _require_hyperbolic(L)
    if v.orientation is Orientation.REVERSING:
        raise OrientationReversing(f"{L} reverses orientation; use orientation_reversing_analysis")
    if case3_class_depth < 0:
        raise ValueError("case3_class_depth must be non-negative")

    report = ReversibilityReport(L, Orientation.PRESERVING, trivial_verdict(L))
    report.case1 = _triangular_case(L, lower=True)
    report.case2 = _triangular_case(L, lower=False)
    report.case3 = _general_case(L, case3_class_depth)
    report.conic = classify_conic(L, Orientation.PRESERVING)
    mats = [r.matrix for r in report.case1.reversors]
    mats += [r.matrix for r in report.case2.reversors]
    mats += [r.matrix for r in report.case3.admissible]
    report.reversors_found = _dedupe(mats)
    report.warnings.append(
        f"case-3 enumeration bounded at depth {case3_class_depth}"
    )
    return report


# --- constructing a reversible map for a given involution -----------------


def recipe_count(spec: InvolutionSpec) -> int:
    return 2 if spec.family is Family.GENERAL else 1


def construct_reversible_anosov(spec: InvolutionSpec, choice: int = 0) -> Mat2Z:
    """An orientation-preserving hyperbolic ``L`` reversed by ``materialize(spec)``.

    Triangular families have one recipe. The general family has two, the
    ``+beta`` and ``-beta`` variants ``[[al, +-be], [+-(al**2 - 1)/be, al]]``;
    for ``alpha == 0`` (the coordinate swaps) those have trace 0, so the
    variants ``[[8, +-3], [-+3, -1]]`` are used instead.
    """
    A = materialize(spec)
    if not 0 <= choice < recipe_count(spec):
        raise InvalidParams(f"choice {choice} out of range for {spec.family.value}")
    fam = spec.family

    if fam is Family.GENERAL:
        al, be = spec.alpha, spec.beta
        if al == 0:
            L = Mat2Z(8, 3, -3, -1) if choice == 0 else Mat2Z(8, -3, 3, -1)
        elif choice == 0:
            L = Mat2Z(al, be, (al * al - 1) // be, al)
        else:
            L = Mat2Z(al, -be, (1 - al * al) // be, al)
    else:
        g = spec.gamma
        plus = fam in (Family.LOWER_PLUS, Family.UPPER_PLUS)
        if g == 0:
            L = Mat2Z(3, 4, 2, 3)
        elif plus:
            L = Mat2Z(g, 1, 2 * g * g - 1, 2 * g)
        else:
            L = Mat2Z(g, -1, 1 - 2 * g * g, 2 * g)
        if fam in (Family.UPPER_PLUS, Family.UPPER_MINUS):
            # upper families are transposes of lower ones, and so is the answer
            L = L.transpose()

    if not (classify_hyperbolicity(L).is_hyperbolic and det(L) == 1 and is_r_reversible(L, A)):
        raise NoRecipe(f"recipe {choice} failed for {spec}")
    return L


# --- orientation reversing ------------------------------------------------


def orientation_reversing_analysis(L: Mat2Z, depth: int = DEFAULT_DEPTH) -> ReversibilityReport:
    """Show that an orientation-reversing hyperbolic ``L`` has no linear reversor.

    The report carries a symbolic proof trace (see ``obstruction``) plus the
    conic and Pell data of the general-family reduction, whose candidate
    solutions are all rejected.
    """
    from .obstruction import build_obstruction

    v = _require_hyperbolic(L)
    if v.orientation is Orientation.PRESERVING:
        raise OrientationPreserving(f"{L} preserves orientation; use find_reversors")
    report = ReversibilityReport(L, Orientation.REVERSING, trivial_verdict(L))
    report.conic = classify_conic(L, Orientation.REVERSING)
    report.case3 = _general_case(L, depth)
    report.obstruction = build_obstruction(L)
    if report.case3.admissible:
        raise AssertionError(f"orientation-reversing {L} has a reversor; the obstruction is wrong")
    report.reversors_found = []
    return report


def analyze(L: Mat2Z, depth: int = DEFAULT_DEPTH) -> ReversibilityReport:
    """Dispatch on orientation."""
    v = _require_hyperbolic(L)
    if v.orientation is Orientation.PRESERVING:
        return find_reversors(L, depth)
    return orientation_reversing_analysis(L, depth)


# --- families of reversors and compositions -------------------------------


def involution_family(A: Mat2Z, L: Mat2Z, n_range) -> list[Mat2Z]:
    """``[A @ L**n for n in n_range]``: every one is again a reversor of ``L``."""
    if not is_r_reversible(L, A):
        raise NotReversible(f"{A} does not reverse {L}")
    return [mat_mul(A, mat_pow(L, n)) for n in n_range]


def reversor_composition_commutes(R: Mat2Z, S: Mat2Z, L: Mat2Z) -> bool:
    """True iff ``R @ S`` commutes with ``L``; holds whenever both reverse ``L``."""
    for X in (R, S):
        if not is_r_reversible(L, X):
            raise NotReversible(f"{X} does not reverse {L}")
    RS = mat_mul(R, S)
    return mat_mul(RS, L) == mat_mul(L, RS)

