"""Generalized Pell equations ``x**2 - D*y**2 = N`` over the integers.

Every sign case of ``D`` is handled. For ``D > 0`` non-square the solutions
split into finitely many classes, each closed under the automorph
``(x, y) -> (x*x1 + D*y*y1, x*y1 + y*x1)`` built from the fundamental
solution ``(x1, y1)`` of ``x**2 - D*y**2 = 1``; the solver returns the
solutions inside the classical search box together with one representative
per class. ``brute_force_solutions`` is an independent scan used as an
oracle.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

from .errors import NonPositive, OrientationMismatch, PerfectSquare
from .lattice import Mat2Z, Orientation, det, is_perfect_square, isqrt_ceil


@dataclass(frozen=True)
class PellProblem:
    D: int
    N: int

    def residual(self, x: int, y: int) -> int:
        return x * x - self.D * y * y - self.N

    def equation(self) -> str:
        """Human form, e.g. ``x^2-12y^2=4``, ``x^2+3y^2=36`` or ``x^2=64``."""
        D, N = self.D, self.N
        if D == 0:
            return f"x^2={N}"
        coef = "" if abs(D) == 1 else str(abs(D))
        sign = "-" if D > 0 else "+"
        return f"x^2{sign}{coef}y^2={N}"


@dataclass(frozen=True)
class CFExpansion:
    a0: int
    period: tuple[int, ...]

    def terms(self, count: int):
        """First ``count`` partial quotients a0, a1, a2, ..."""
        out = [self.a0]
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out[:count]

    def convergents(self, count: int):
        """Yield the first ``count`` convergents (p, q)."""
        p_prev, p = 1, self.a0
        q_prev, q = 0, 1
        yield p, q
        for a in self.terms(count)[1:]:
            p_prev, p = p, a * p + p_prev
            q_prev, q = q, a * q + q_prev
            yield p, q


def cf_sqrt(D: int) -> CFExpansion:
    """Minimal-period continued fraction of ``sqrt(D)``."""
    if D <= 0:
        raise NonPositive(f"D={D} must be positive")
    a0 = math.isqrt(D)
    if a0 * a0 == D:
        raise PerfectSquare(f"D={D} is a perfect square")
    # standard (m, d, a) recurrence; the period ends at the first a == 2*a0
    m, d, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return CFExpansion(a0, tuple(period))


def fundamental_solution(D: int) -> tuple[int, int]:
    """Least positive solution of ``x**2 - D*y**2 = 1``."""
    cf = cf_sqrt(D)
    r = len(cf.period)
    # the solution is the convergent ending the first (even r) or second (odd r) period
    idx = r - 1 if r % 2 == 0 else 2 * r - 1
    for k, (p, q) in enumerate(cf.convergents(idx + 1)):
        if k == idx:
            assert p * p - D * q * q == 1
            return p, q
    raise AssertionError("unreachable")


class SolutionKind(str, Enum):
    EMPTY = "Empty"
    FINITE_LIST = "FiniteList"
    INFINITE_CLASSES = "InfiniteClasses"
    DEGENERATE_LINES = "DegenerateLines"


@dataclass(frozen=True)
class PellSolutionSet:
    """Structured solution set of ``x**2 - D*y**2 = N``.

    ``solutions`` is the full list for finite kinds and the search-box
    solutions for ``InfiniteClasses``; ``representatives`` holds one
    solution per class. For ``DegenerateLines`` the solutions are the lines
    ``x = slope*y + intercept`` listed in ``lines``.
    """

    problem: PellProblem
    kind: SolutionKind
    solutions: tuple[tuple[int, int], ...] = ()
    representatives: tuple[tuple[int, int], ...] = ()
    automorph: tuple[int, int] | None = None
    lines: tuple[tuple[int, int], ...] = ()
    search_bound: int | None = None

    @property
    def is_infinite(self) -> bool:
        return self.kind in (SolutionKind.INFINITE_CLASSES, SolutionKind.DEGENERATE_LINES)

    def count(self):
        """Number of solutions, or ``math.inf``."""
        if self.is_infinite:
            return math.inf
        return len(self.solutions)

    def iter_up_to(self, y_max: int):
        """Every solution with ``|y| <= y_max``, sorted by (y, x)."""
        return sorted(_expand(self, y_max), key=_ykey)

    def orbit(self, x: int, y: int, depth: int):
        """``(x, y)`` moved by the automorph ``-depth..depth`` times (both signs)."""
        if self.automorph is None:
            raise ValueError("no automorph for this solution set")
        return automorph_orbit(self.problem.D, self.automorph, (x, y), depth)


def _ykey(s):
    return (s[1], s[0])


def apply_automorph(D: int, automorph, sol, power: int = 1):
    """Apply the automorph ``power`` times (negative uses the conjugate)."""
    x1, y1 = automorph
    if power < 0:
        y1 = -y1
        power = -power
    x, y = sol
    for _ in range(power):
        x, y = x * x1 + D * y * y1, x * y1 + y * x1
    return x, y


def automorph_orbit(D: int, automorph, sol, depth: int) -> set[tuple[int, int]]:
    out = set()
    for s in (sol, (-sol[0], -sol[1])):
        fwd = bwd = s
        out.add(s)
        for _ in range(depth):
            fwd = apply_automorph(D, automorph, fwd, 1)
            bwd = apply_automorph(D, automorph, bwd, -1)
            out.add(fwd)
            out.add(bwd)
    return out


def _expand(sol_set: PellSolutionSet, y_max: int) -> set[tuple[int, int]]:
    kind = sol_set.kind
    if kind is SolutionKind.EMPTY:
        return set()
    if kind is SolutionKind.FINITE_LIST:
        return {s for s in sol_set.solutions if abs(s[1]) <= y_max}
    if kind is SolutionKind.DEGENERATE_LINES:
        return {
            (slope * y + icept, y)
            for slope, icept in sol_set.lines
            for y in range(-y_max, y_max + 1)
        }
    D = sol_set.problem.D
    out = set()
    for rep in sol_set.representatives:
        for start in (rep, (-rep[0], -rep[1])):
            out.update(_walk(D, sol_set.automorph, start, y_max))
    return out


def _walk(D, automorph, start, y_max):
    # |y| is unimodal along an automorph orbit: once it exceeds y_max and
    # the next step does not decrease it, nothing further can qualify
    found = []
    for direction in (1, -1):
        cur = start
        while True:
            if abs(cur[1]) <= y_max:
                found.append(cur)
            nxt = apply_automorph(D, automorph, cur, direction)
            if abs(cur[1]) > y_max and abs(nxt[1]) >= abs(cur[1]):
                break
            cur = nxt
    return found


def _class_representatives(D: int, N: int, sols) -> list[tuple[int, int]]:
    """One solution per class, preferring small y >= 0 and then positive x.

    Two solutions are in the same class (up to overall sign) iff
    ``x*u - D*y*v`` and ``x*v - u*y`` are both divisible by N.
    """
    n = abs(N)
    reps: list[tuple[int, int]] = []
    for x, y in sorted(sols, key=lambda s: (s[1], -s[0])):
        if y < 0:
            continue
        if not any(
            (x * u - D * y * v) % n == 0 and (x * v - u * y) % n == 0 for u, v in reps
        ):
            reps.append((x, y))
    return reps


def solve_general(problem: PellProblem, method: str = "lmm") -> PellSolutionSet:
    """Solve ``x**2 - D*y**2 = N`` for any signs of D and N.

    For ``D > 0`` non-square, ``method`` picks how one solution per class is
    found: ``"lmm"`` (continued fractions, fast) or ``"scan"`` (every y up to
    the classical bound, only practical when the fundamental unit is small).
    """
    D, N = problem.D, problem.N
    kind = SolutionKind

    if D < 0:
        if N < 0:
            return PellSolutionSet(problem, kind.EMPTY)
        ymax = math.isqrt(N // -D)
        sols = _scan(D, N, range(-ymax, ymax + 1))
        k = kind.FINITE_LIST if sols else kind.EMPTY
        return PellSolutionSet(problem, k, tuple(sols), search_bound=ymax)

    if D == 0:
        if is_perfect_square(N):
            r = math.isqrt(N)
            lines = ((0, -r), (0, r)) if r else ((0, 0),)
            pts = tuple(sorted({(-r, 0), (r, 0)}, key=_ykey))
            return PellSolutionSet(problem, kind.DEGENERATE_LINES, pts, lines=lines)
        return PellSolutionSet(problem, kind.EMPTY)

    s = math.isqrt(D)
    if s * s == D:
        if N == 0:
            lines = ((-s, 0), (s, 0))
            return PellSolutionSet(problem, kind.DEGENERATE_LINES, ((0, 0),), lines=lines)
        sols = _factor_square(s, N)
        k = kind.FINITE_LIST if sols else kind.EMPTY
        return PellSolutionSet(problem, k, tuple(sols))

    # D > 0, non-square
    if N == 0:
        return PellSolutionSet(problem, kind.FINITE_LIST, ((0, 0),))
    x1, y1 = fundamental_solution(D)
    if method == "scan":
        bound = scan_bound(D, N, x1)
        found = _scan(D, N, range(0, bound + 1))
    elif method == "lmm":
        found = _lmm_fundamentals(D, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not found:
        return PellSolutionSet(problem, kind.EMPTY, automorph=(x1, y1))
    reduced = sorted({_reduce_in_orbit(D, (x1, y1), s) for s in found}, key=lambda s: (s[1], -s[0]))
    reps = _class_representatives(D, N, reduced)
    # every solution up to the largest reduced |y|; this covers the classical box
    top = max(abs(r[1]) for r in reps)
    sol_set = PellSolutionSet(
        problem,
        kind.INFINITE_CLASSES,
        representatives=tuple(reps),
        automorph=(x1, y1),
        search_bound=top,
    )
    return dataclasses.replace(sol_set, solutions=tuple(sol_set.iter_up_to(top)))


def scan_bound(D: int, N: int, x1: int) -> int:
    """Classical upper bound on y for one fundamental solution per class."""
    return isqrt_ceil(_ceil_div(abs(N) * (x1 + 1), 2 * D))


def _reduce_in_orbit(D, automorph, sol):
    """Orbit element with least |y|, negated if needed so that y >= 0."""
    ends = [sol]
    for direction in (1, -1):
        cur = sol
        while True:
            nxt = apply_automorph(D, automorph, cur, direction)
            if abs(nxt[1]) >= abs(cur[1]):
                break
            cur = nxt
        ends.append(cur)

    def norm(p):
        return (-p[0], -p[1]) if p[1] < 0 or (p[1] == 0 and p[0] < 0) else p

    return min((norm(p) for p in ends), key=lambda p: (p[1], -p[0]))


def _pqa(P0: int, Q0: int, D: int):
    """Continued fraction of (P0 + sqrt(D)) / Q0, yielding (i, P_i, Q_i, G_{i-1}, B_{i-1}).

    Requires Q0 | D - P0**2. Stops once a (P, Q) state repeats, i.e. after
    the pre-period and one full period.
    """
    s = math.isqrt(D)
    P, Q = P0, Q0
    G_prev2, G_prev = -P0, Q0
    B_prev2, B_prev = 1, 0
    seen = set()
    i = 0
    while (P, Q) not in seen:
        seen.add((P, Q))
        if i > 0:
            yield i, P, Q, G_prev, B_prev
        a = (P + s) // Q if Q > 0 else (P + s + 1) // Q
        G_prev2, G_prev = G_prev, a * G_prev + G_prev2
        B_prev2, B_prev = B_prev, a * B_prev + B_prev2
        P = a * Q - P
        Q = (D - P * P) // Q
        i += 1
    yield i, P, Q, G_prev, B_prev


def negative_pell_solution(D: int):
    """Least positive solution of x**2 - D*y**2 = -1, or None when there is none."""
    cf = cf_sqrt(D)
    r = len(cf.period)
    if r % 2 == 0:
        return None
    for k, (p, q) in enumerate(cf.convergents(r)):
        if k == r - 1:
            assert p * p - D * q * q == -1
            return p, q
    raise AssertionError("unreachable")


def _lmm_fundamentals(D: int, N: int) -> list[tuple[int, int]]:
    """One solution per class via the continued-fraction (LMM) method.

    For each f with f**2 | N and m = N / f**2, every square root z of D
    modulo |m| with -|m|/2 < z <= |m|/2 gives at most one class of
    primitive solutions of x**2 - D*y**2 = m, found where the expansion of
    (z + sqrt(D)) / |m| first hits Q = +-1.
    """
    out = []
    neg = None
    neg_checked = False
    for f in range(1, math.isqrt(abs(N)) + 1):
        if N % (f * f):
            continue
        m = N // (f * f)
        am = abs(m)
        for z in range(-((am - 1) // 2), am // 2 + 1):
            if (z * z - D) % am:
                continue
            for _, P, Q, r, s in _pqa(z, am, D):
                if Q in (1, -1):
                    break
            else:
                continue
            if Q not in (1, -1):
                continue
            val = r * r - D * s * s
            if val == m:
                out.append((f * r, f * s))
            elif val == -m:
                if not neg_checked:
                    neg, neg_checked = negative_pell_solution(D), True
                if neg is not None:
                    t, u = neg
                    out.append((f * (r * t + s * u * D), f * (r * u + s * t)))
    for x, y in out:
        assert x * x - D * y * y == N
    return out


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _scan(D: int, N: int, ys) -> list[tuple[int, int]]:
    out = []
    for y in ys:
        v = N + D * y * y
        if v < 0:
            continue
        x = math.isqrt(v)
        if x * x == v:
            out.append((-x, y))
            if x:
                out.append((x, y))
    out.sort(key=_ykey)
    return out


def _factor_square(s: int, N: int) -> list[tuple[int, int]]:
    # (x - s*y)(x + s*y) = N with e = x - s*y, f = x + s*y
    out = set()
    n = abs(N)
    for e0 in range(1, math.isqrt(n) + 1):
        if n % e0:
            continue
        for e1 in {e0, n // e0}:
            for e in (e1, -e1):
                f = N // e
                if (e + f) % 2 or (f - e) % (2 * s):
                    continue
                out.add(((e + f) // 2, (f - e) // (2 * s)))
    return sorted(out, key=_ykey)


def brute_force_solutions(problem: PellProblem, y_max: int) -> list[tuple[int, int]]:
    """All solutions with ``|y| <= y_max`` by direct scan over y."""
    if y_max < 0:
        raise ValueError("y_max must be non-negative")
    D, N = problem.D, problem.N
    out = []
    for y in range(-y_max, y_max + 1):
        v = N + D * y * y
        if v < 0:
            continue
        r = math.isqrt(v)
        if r * r != v:
            continue
        out.append((r, y))
        if r:
            out.append((-r, y))
    return sorted(out, key=_ykey)


class ConicKind(str, Enum):
    HYPERBOLA = "Hyperbola"
    ELLIPSE = "Ellipse"
    DEGENERATE_PARALLEL_LINES = "DegenerateParallelLines"


def conic_discriminant(L: Mat2Z, orientation: Orientation | str) -> int:
    orientation = Orientation(orientation)
    expected = 1 if orientation is Orientation.PRESERVING else -1
    if det(L) != expected:
        raise OrientationMismatch(f"det{L} = {det(L)} does not match {orientation.value}")
    if orientation is Orientation.PRESERVING:
        return L.trace ** 2 - 4
    return (L.a - L.d) ** 2 - 4


def classify_conic(L: Mat2Z, orientation: Orientation | str) -> ConicKind:
    delta = conic_discriminant(L, orientation)
    if delta > 0:
        return ConicKind.HYPERBOLA
    if delta < 0:
        return ConicKind.ELLIPSE
    return ConicKind.DEGENERATE_PARALLEL_LINES


def reversor_pell_problem(L: Mat2Z) -> PellProblem:
    """The Pell problem attached to ``L`` by the general-family reduction."""
    if det(L) == 1:
        return PellProblem(L.trace ** 2 - 4, 4 * L.b * L.b)
    if det(L) == -1:
        return PellProblem((L.a - L.d) ** 2 - 4, 4 * L.b * L.b)
    raise OrientationMismatch(f"det{L} = {det(L)} is not +1 or -1")
