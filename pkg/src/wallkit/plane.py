"""Pushing plane characters into P^3 and matching tilt walls on P^2 with
walls in the (alpha, s)-slice.

Only numerics live here: a plane wall suggests a numerical wall, nothing is
said about whether it is realized.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .chern import POS_INF, ChernVector, RatLike, rat, twist
from .conditions import alpha0_squared


@dataclass(frozen=True)
class PlaneChern:
    """A Chern character (r, c, d) on P^2."""

    r: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("r", "c", "d"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, r: RatLike, c: RatLike, d: RatLike) -> "PlaneChern":
        return cls(rat(r), rat(c), rat(d))

    def __add__(self, other: "PlaneChern") -> "PlaneChern":
        return PlaneChern(self.r + other.r, self.c + other.c, self.d + other.d)


def pushforward_chern(p: PlaneChern) -> ChernVector:
    """ch of the pushforward along a hyperplane P^2 -> P^3."""
    return ChernVector(Fraction(0), p.r, p.c - p.r / 2, p.d - p.c / 2 + p.r / 6)


@dataclass(frozen=True)
class Dictionary:
    w: PlaneChern
    v: ChernVector
    s_bar: Fraction
    beta_bar: Fraction


def build_dictionary(c: RatLike, d: RatLike) -> Dictionary:
    """Parameters matching the plane class (0, c, d) with the P^3 class (0, 0, c, d - c/2)."""
    c, d = rat(c), rat(d)
    if c == 0:
        raise ValueError("build_dictionary needs c != 0")
    w = PlaneChern(Fraction(0), c, d)
    return Dictionary(w=w, v=pushforward_chern(w), s_bar=d / c, beta_bar=d / c - Fraction(1, 2))


def t_squared(alpha_sq: RatLike, s: RatLike) -> Fraction:
    """t^2 = (2s + 1/3) alpha^2 - 1/12; a valid plane parameter needs t^2 > 0."""
    return (2 * rat(s) + Fraction(1, 3)) * rat(alpha_sq) - Fraction(1, 12)


class PlaneParameter(NamedTuple):
    t_sq: Fraction
    below_slice: bool


def plane_parameter(alpha_sq: RatLike, s: RatLike) -> PlaneParameter:
    t2 = t_squared(alpha_sq, s)
    return PlaneParameter(t2, t2 <= 0)


def alpha_s_for(t_sq: RatLike, alpha_sq: RatLike) -> Fraction:
    """The s with t_squared(alpha_sq, s) == t_sq (may be <= 0)."""
    return ((rat(t_sq) + Fraction(1, 12)) / rat(alpha_sq) - Fraction(1, 3)) / 2


def plane_tilt_slope(p: PlaneChern, b: RatLike, t_sq: RatLike) -> Union[Fraction, float]:
    """(ch2^b - (t^2/2) ch0) / ch1^b on P^2."""
    b, t2 = rat(b), rat(t_sq)
    if t2 <= 0:
        raise ValueError("t^2 must be positive")
    den = p.c - b * p.r
    if den == 0:
        return POS_INF
    return (p.d - b * p.c + (b * b - t2) / 2 * p.r) / den


def plane_wall_t_squared(sub: PlaneChern, b: RatLike) -> Optional[Fraction]:
    """The t^2 at which ``sub`` has plane tilt slope zero, or None if there is none."""
    b = rat(b)
    if sub.r == 0 or sub.c - b * sub.r == 0:
        return None
    t2 = b * b + 2 * (sub.d - b * sub.c) / sub.r
    return t2 if t2 > 0 else None


def induced_alpha0_sq(sub: PlaneChern, beta_bar: RatLike) -> Optional[Fraction]:
    """alpha0^2 of the slice wall induced by a plane subobject, if its twisted ch1 > 0."""
    v = twist(pushforward_chern(sub), beta_bar)
    if v.ch1 <= 0:
        return None
    return alpha0_squared(v.ch1, v.ch3)
