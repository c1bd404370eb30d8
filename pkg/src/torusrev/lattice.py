"""Exact 2x2 integer matrices and the unimodular/hyperbolicity predicates.

Everything here works on Python integers, so entries never overflow and
divisibility or perfect-square tests are exact.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum

from .errors import NotUnimodular


@dataclass(frozen=True, order=True)
class Mat2Z:
    """Row-major 2x2 integer matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        # numpy ints and other exact integers are normalised; floats raise TypeError
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, operator.index(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows) -> "Mat2Z":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Mat2Z":
        return Mat2Z(self.a, self.c, self.b, self.d)

    def __neg__(self) -> "Mat2Z":
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, other: "Mat2Z") -> "Mat2Z":
        return mat_mul(self, other)

    def apply(self, x, y):
        """Image of the column vector (x, y); works for ints and Fractions."""
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def max_abs(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = Mat2Z(1, 0, 0, 1)
MINUS_IDENTITY = Mat2Z(-1, 0, 0, -1)


def det(M: Mat2Z) -> int:
    return M.a * M.d - M.b * M.c


def mat_mul(M: Mat2Z, N: Mat2Z) -> Mat2Z:
    return Mat2Z(
        M.a * N.a + M.b * N.c,
        M.a * N.b + M.b * N.d,
        M.c * N.a + M.d * N.c,
        M.c * N.b + M.d * N.d,
    )


def inverse_unimodular(M: Mat2Z) -> Mat2Z:
    """Integer inverse of a matrix with determinant +1 or -1."""
    dt = det(M)
    if dt not in (1, -1):
        raise NotUnimodular(f"det{M} = {dt}, expected +1 or -1")
    # dividing by +-1 is multiplying by it
    return Mat2Z(dt * M.d, -dt * M.b, -dt * M.c, dt * M.a)


def mat_pow(M: Mat2Z, n: int) -> Mat2Z:
    """``M**n`` by binary exponentiation; negative ``n`` needs a unimodular ``M``."""
    if n < 0:
        M = inverse_unimodular(M)
        n = -n
    result = IDENTITY
    base = M
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def isqrt_ceil(n: int) -> int:
    """Smallest r >= 0 with r*r >= n (0 for n <= 0)."""
    if n <= 0:
        return 0
    r = math.isqrt(n)
    return r if r * r == n else r + 1


class Orientation(str, Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"


class HyperbolicityReason(str, Enum):
    H1_PASS = "H1_pass"
    H1_FAIL = "H1_fail"
    H2_PASS = "H2_pass"
    H2_FAIL = "H2_fail"
    NOT_UNIMODULAR = "not_unimodular"


@dataclass(frozen=True)
class HyperbolicityVerdict:
    is_sl2z: bool
    det: int
    trace: int
    orientation: Orientation | None
    is_hyperbolic: bool
    reason: HyperbolicityReason

    def describe(self) -> str:
        t = self.trace
        if self.reason is HyperbolicityReason.NOT_UNIMODULAR:
            return f"determinant {self.det} is not +1 or -1"
        if self.reason is HyperbolicityReason.H1_FAIL:
            return f"H1 fails: (a+d)^2 - 4 = {t * t - 4} is not positive"
        if self.reason is HyperbolicityReason.H1_PASS:
            return f"H1 holds: (a+d)^2 - 4 = {t * t - 4} > 0"
        if self.reason is HyperbolicityReason.H2_FAIL:
            return f"H2 fails: (a+d)^2 + 4 = {t * t + 4} is a perfect square"
        return f"H2 holds: (a+d)^2 + 4 = {t * t + 4} is not a perfect square"


def classify_hyperbolicity(M: Mat2Z) -> HyperbolicityVerdict:
    dt = det(M)
    tr = M.trace
    if dt == 1:
        ok = tr * tr - 4 > 0
        reason = HyperbolicityReason.H1_PASS if ok else HyperbolicityReason.H1_FAIL
        return HyperbolicityVerdict(True, dt, tr, Orientation.PRESERVING, ok, reason)
    if dt == -1:
        ok = not is_perfect_square(tr * tr + 4)
        reason = HyperbolicityReason.H2_PASS if ok else HyperbolicityReason.H2_FAIL
        return HyperbolicityVerdict(True, dt, tr, Orientation.REVERSING, ok, reason)
    return HyperbolicityVerdict(
        False, dt, tr, None, False, HyperbolicityReason.NOT_UNIMODULAR
    )


def is_hyperbolic(M: Mat2Z) -> bool:
    return classify_hyperbolicity(M).is_hyperbolic


def is_involution(M: Mat2Z) -> bool:
    return mat_mul(M, M) == IDENTITY


def iter_unimodular(bound: int, det_value: int):
    """Yield every matrix with ``max|entry| <= bound`` and determinant ``det_value``.

    Walks (a, b, d) and solves for c, so the cost is cubic in the bound
    rather than quartic. Order is lexicographic on (a, b, c, d).
    """
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            if b == 0:
                # a*d = det_value, c free
                for c in rng:
                    for d in rng:
                        if a * d == det_value:
                            yield Mat2Z(a, 0, c, d)
                continue
            found = []
            for d in rng:
                num = a * d - det_value
                if num % b == 0:
                    c = num // b
                    if -bound <= c <= bound:
                        found.append(Mat2Z(a, b, c, d))
            found.sort()
            yield from found
