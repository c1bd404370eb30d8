"""Linear involutions of the 2-torus: classification, enumeration, fixed sets.

A matrix ``A`` with ``A @ A == I`` and ``A != +-I`` always has trace 0 and
determinant -1. Such matrices fall into five families:

=======================  ==========================
LOWER_PLUS               ``[[1, 0], [g, -1]]``
LOWER_MINUS              ``[[-1, 0], [g, 1]]``
UPPER_PLUS               ``[[1, g], [0, -1]]``
UPPER_MINUS              ``[[-1, g], [0, 1]]``
GENERAL                  ``[[al, be], [(1 - al**2) / be, -al]]``
=======================  ==========================

The families overlap at ``g == 0``; the first matching family in the order
above is the canonical one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidParams, NotAnInvolution, TrivialInvolution
from .lattice import IDENTITY, MINUS_IDENTITY, Mat2Z, is_involution


class Family(str, Enum):
    LOWER_PLUS = "lower+"
    LOWER_MINUS = "lower-"
    UPPER_PLUS = "upper+"
    UPPER_MINUS = "upper-"
    GENERAL = "general"

    @property
    def is_triangular(self) -> bool:
        return self is not Family.GENERAL


FAMILY_ORDER = list(Family)


@dataclass(frozen=True)
class InvolutionSpec:
    """A family tag plus its integer parameters.

    Triangular families use ``gamma``; the general family uses
    ``alpha`` and ``beta``.
    """

    family: Family
    gamma: int | None = None
    alpha: int | None = None
    beta: int | None = None

    @classmethod
    def triangular(cls, family: Family | str, gamma: int) -> "InvolutionSpec":
        family = Family(family)
        if not family.is_triangular:
            raise InvalidParams("the general family takes (alpha, beta)")
        return cls(family, gamma=gamma)

    @classmethod
    def general(cls, alpha: int, beta: int) -> "InvolutionSpec":
        return cls(Family.GENERAL, alpha=alpha, beta=beta)

    @property
    def params(self) -> tuple[int, ...]:
        if self.family.is_triangular:
            return (self.gamma,)
        return (self.alpha, self.beta)

    def __str__(self):
        if self.family.is_triangular:
            return f"{self.family.value}(gamma={self.gamma})"
        return f"general(alpha={self.alpha}, beta={self.beta})"


def materialize(spec: InvolutionSpec) -> Mat2Z:
    """Matrix of the involution described by ``spec``.

    The general family requires ``beta != 0``, ``alpha**2 != 1`` and
    ``beta | 1 - alpha**2``. ``alpha == 0`` is accepted: it yields the two
    coordinate swaps ``[[0, +-1], [+-1, 0]]``, which are involutions too.
    """
    fam = spec.family
    if fam.is_triangular:
        g = spec.gamma
        if g is None or spec.alpha is not None or spec.beta is not None:
            raise InvalidParams(f"{fam.value} takes exactly one parameter gamma")
        if fam is Family.LOWER_PLUS:
            return Mat2Z(1, 0, g, -1)
        if fam is Family.LOWER_MINUS:
            return Mat2Z(-1, 0, g, 1)
        if fam is Family.UPPER_PLUS:
            return Mat2Z(1, g, 0, -1)
        return Mat2Z(-1, g, 0, 1)

    al, be = spec.alpha, spec.beta
    if al is None or be is None or spec.gamma is not None:
        raise InvalidParams("general family takes parameters alpha and beta")
    if be == 0:
        raise InvalidParams("beta must be non-zero")
    rest = 1 - al * al
    if rest == 0:
        raise InvalidParams(f"1 - alpha^2 = 0 for alpha={al}; use a triangular family")
    if rest % be:
        raise InvalidParams(f"beta={be} does not divide 1 - alpha^2 = {rest}")
    return Mat2Z(al, be, rest // be, -al)


def _check_nontrivial(A: Mat2Z) -> None:
    if not is_involution(A):
        raise NotAnInvolution(f"{A} squared is not the identity")
    if A == IDENTITY or A == MINUS_IDENTITY:
        raise TrivialInvolution(f"{A} is a trivial involution")


def classify_involution(A: Mat2Z) -> InvolutionSpec:
    _check_nontrivial(A)
    a, b, c, d = A.entries()
    if b == 0:
        # a = -d = +-1 here
        return InvolutionSpec(Family.LOWER_PLUS if a == 1 else Family.LOWER_MINUS, gamma=c)
    if c == 0:
        return InvolutionSpec(Family.UPPER_PLUS if a == 1 else Family.UPPER_MINUS, gamma=b)
    return InvolutionSpec(Family.GENERAL, alpha=a, beta=b)


def enumerate_involutions(entry_bound: int) -> list[Mat2Z]:
    """All non-trivial involutions with ``max|entry| <= entry_bound``.

    Uses ``d == -a`` and ``a**2 + b*c == 1`` so the work is quadratic in the
    bound. Sorted lexicographically on (a, b, c, d).
    """
    B = entry_bound
    if B < 0:
        raise ValueError("entry_bound must be non-negative")
    out = []
    for a in range(-B, B + 1):
        rest = 1 - a * a
        for b in range(-B, B + 1):
            if b == 0:
                if rest == 0:
                    out.extend(Mat2Z(a, 0, c, -a) for c in range(-B, B + 1))
                continue
            if rest % b == 0 and abs(rest // b) <= B:
                out.append(Mat2Z(a, b, rest // b, -a))
    out.sort()
    return out


def enumerate_involutions_brute(entry_bound: int) -> list[Mat2Z]:
    """Quartic scan of every matrix in the box; reference for tests."""
    rng = range(-entry_bound, entry_bound + 1)
    found = []
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    M = Mat2Z(a, b, c, d)
                    if M not in (IDENTITY, MINUS_IDENTITY) and is_involution(M):
                        found.append(M)
    return found


# --- fixed point sets on the torus ---------------------------------------


def _frac_mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


@dataclass(frozen=True)
class FixedCurve:
    """Projection to the torus of the line ``offset + t * direction``."""

    direction: tuple[int, int]
    offset: tuple[Fraction, Fraction]

    def point(self, t) -> tuple[Fraction, Fraction]:
        t = Fraction(t)
        return (
            _frac_mod1(self.offset[0] + t * self.direction[0]),
            _frac_mod1(self.offset[1] + t * self.direction[1]),
        )

    def contains(self, p) -> bool:
        """Exact membership test for a point of the torus (rational coordinates)."""
        p1, p2 = self.direction
        # the normal pairs to an integer on Z^2, so level sets are well defined mod 1
        dx = Fraction(p[0]) - self.offset[0]
        dy = Fraction(p[1]) - self.offset[1]
        return (p2 * dx - p1 * dy).denominator == 1

    def describe(self) -> str:
        p, q = self.direction
        ox, oy = self.offset
        return f"(x, y) = ({ox}, {oy}) + t*({p}, {q})"


def _primitive(u: int, v: int) -> tuple[int, int]:
    g = math.gcd(u, v)
    u, v = u // g, v // g
    if u < 0 or (u == 0 and v < 0):
        u, v = -u, -v
    return u, v


def fixed_point_curves(A: Mat2Z) -> list[FixedCurve]:
    """Connected components of Fix(R) for the torus map ``R`` induced by ``A``.

    ``A - I`` has rank one, so it factors as ``u * n^T`` with ``n`` a
    primitive integer normal of the fixed line. A point ``v`` is fixed on the
    torus iff ``(A - I) v`` is an integer vector, i.e. iff ``n . v`` lies in
    ``(1/g) Z`` with ``g = gcd(u)``. Each of the ``g`` levels of ``n . v``
    modulo 1 is one closed curve because ``n`` is primitive.
    """
    _check_nontrivial(A)
    r1 = (A.a - 1, A.b)
    r2 = (A.c, A.d - 1)
    row = r1 if r1 != (0, 0) else r2
    n1, n2 = _primitive(*row)
    # each row of A - I is an integer multiple of the primitive normal
    u1 = (r1[0] * n1 + r1[1] * n2) // (n1 * n1 + n2 * n2)
    u2 = (r2[0] * n1 + r2[1] * n2) // (n1 * n1 + n2 * n2)
    g = math.gcd(u1, u2)
    direction = _primitive(-n2, n1)

    curves = []
    for j in range(g):
        level = Fraction(j, g)
        if n2 == 0:
            # vertical lines x = level (n = (1, 0))
            offset = (level, Fraction(0))
        else:
            # lowest crossing of the x = 0 circle
            y0 = min(_frac_mod1((level + m) / n2) for m in range(abs(n2)))
            offset = (Fraction(0), y0)
        curves.append(FixedCurve(direction, offset))
    return curves


def is_fixed_on_torus(A: Mat2Z, p) -> bool:
    """True iff the torus point ``p`` is fixed by the map induced by ``A``."""
    x, y = Fraction(p[0]), Fraction(p[1])
    ix, iy = A.apply(x, y)
    return (ix - x).denominator == 1 and (iy - y).denominator == 1
