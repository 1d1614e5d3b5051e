"""Numerical and integrality conditions on a destabilizing character (r, c, d, e).

Every predicate takes the candidate in twisted coordinates and works on exact
Fractions; integer membership means "denominator 1 after reduction".
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernVector, RatLike, TwistParameter, rat, untwist


@dataclass(frozen=True)
class TargetClass:
    """The twisted class v = (-R, 0, D, 0)."""

    R: int
    D: int

    def __post_init__(self) -> None:
        if self.R < 0:
            raise ValueError("R must be >= 0")
        if self.D < 1:
            raise ValueError("D must be >= 1")

    @property
    def vector(self) -> ChernVector:
        return ChernVector.of(-self.R, 0, self.D, 0)


@dataclass(frozen=True)
class CandidateQuad:
    r: int
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self) -> None:
        for name in ("c", "d", "e"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.c <= 0:
            raise ValueError("candidates require c > 0")

    @property
    def vector(self) -> ChernVector:
        return ChernVector.of(self.r, self.c, self.d, self.e)

    def on_lattice(self, tw: TwistParameter) -> bool:
        """True if kc, 2k^2 d, 6k^3 e (or c, 2d, 6e for beta = 0) are integers."""
        _, sc, sd, se = tw.denominators
        return all(_is_int(x * m) for x, m in ((self.c, sc), (self.d, sd), (self.e, se)))


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def alpha0_squared(c: RatLike, e: RatLike) -> Fraction:
    """alpha_0^2 = 6e/c, the alpha-intercept of the wall."""
    c = rat(c)
    if c <= 0:
        raise ValueError("alpha0_squared needs c > 0")
    return 6 * rat(e) / c


def n2_bound(d: Fraction, t: TargetClass) -> Fraction:
    return min(4 * d * d, 4 * (t.D - d) ** 2)


def check_numerical(q: CandidateQuad, t: TargetClass, strict_upper: bool = False) -> bool:
    # N1
    if not 0 < 2 * q.d < 2 * t.D:
        return False
    # N2; the lower bound is always strict, which forces e > 0
    prod = q.c * 6 * q.e
    bound = n2_bound(q.d, t)
    if prod <= 0:
        return False
    if prod > bound or (strict_upper and prod == bound):
        return False
    # N3
    six_e = 6 * q.e
    return -q.c * (2 * t.D - 2 * q.d) / six_e - t.R <= q.r <= q.c * 2 * q.d / six_e


def check_integral_beta0(c: RatLike, d: RatLike, e: RatLike) -> bool:
    c, d, e = rat(c), rat(d), rat(e)
    return (
        _is_int(d - c * c / 2)
        and _is_int(2 * e - c * d + c**3 / 6)
        and _is_int(e - c / 6)
    )


def integral_residues_betak(q: CandidateQuad, beta: RatLike) -> tuple[Fraction, Fraction, Fraction]:
    """The three beta-twisted integrality expressions as published; each must be an integer.

    The published tables for beta = 1/k were generated with exactly these
    expressions. The third one does not equal the untwisted
    2ch3 - ch1 ch2 + ch1^3/6; see :func:`untwisted_residues`.
    """
    b = rat(beta)
    r, c, d, e = q.r, q.c, q.d, q.e
    first = d - c * c / 2 + b * (1 - r) * (b / 2 * r + c)
    second = e - c / 6 + b * (d - Fraction(r, 6)) + b * b / 2 * c + b**3 / 6 * r
    third = (
        2 * e - c * d + c**3 / 6
        + b * (d * (2 - r) + c * c * (3 * r - 1))
        + b * b / 2 * c * (2 + r * (r - 3))
        + b**3 / 6 * r * (r - 1) * (r - 2)
    )
    return first, second, third


def untwisted_residues(q: CandidateQuad, beta: RatLike) -> tuple[Fraction, Fraction, Fraction]:
    """The beta = 0 expressions evaluated on the untwisted character.

    This is the exact integrality test. It agrees with
    :func:`integral_residues_betak` in the first two entries but not in the
    third: there the c^2 coefficient of the beta term is (r - 2)/2, not 3r - 1.
    """
    _, c, d, e = untwist(q.vector, beta)
    return d - c * c / 2, e - c / 6, 2 * e - c * d + c**3 / 6


def check_integral_untwisted(q: CandidateQuad, t: TwistParameter) -> bool:
    return all(_is_int(x) for x in untwisted_residues(q, t.beta))


def check_integral_betak(q: CandidateQuad, t: TwistParameter) -> bool:
    if t.k is None:
        raise ValueError("check_integral_betak needs beta = 1/k")
    return all(_is_int(x) for x in integral_residues_betak(q, t.beta))


def rank_interval(c: RatLike, d: RatLike, e: RatLike, t: TargetClass) -> tuple[int, int]:
    """Integer ranks allowed by N3, as ``(lo, hi)``; ``lo > hi`` means none."""
    c, d, e = rat(c), rat(d), rat(e)
    if c <= 0:
        raise ValueError("rank_interval needs c > 0")
    if e <= 0:
        raise ValueError("rank_interval needs e > 0")
    lo = math.ceil(-c * (2 * t.D - 2 * d) / (6 * e) - t.R)
    hi = math.floor(c * 2 * d / (6 * e))
    return lo, hi
