"""Exact Chern character vectors on P^3 and the slope functions built from them.

All quantities are :class:`fractions.Fraction`; the only non-rational value is
``POS_INF`` (``math.inf``), which compares greater than every Fraction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

POS_INF = math.inf


def rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction. Floats are refused."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class ChernVector:
    """(ch0, ch1, ch2, ch3) in units of H^i, with H^3 = 1."""

    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self) -> None:
        for name in ("ch0", "ch1", "ch2", "ch3"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, *values: RatLike) -> "ChernVector":
        if len(values) != 4:
            raise ValueError(f"expected 4 components, got {len(values)}")
        return cls(*(rat(v) for v in values))

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.ch0, self.ch1, self.ch2, self.ch3))

    def __add__(self, other: "ChernVector") -> "ChernVector":
        return ChernVector(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "ChernVector") -> "ChernVector":
        return ChernVector(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "ChernVector":
        return ChernVector(*(-a for a in self))

    def scale(self, factor: RatLike) -> "ChernVector":
        f = rat(factor)
        return ChernVector(*(f * a for a in self))

    def to_json(self) -> list[str]:
        return [rat_str(a) for a in self]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "ChernVector":
        return cls.of(*data)

    def __str__(self) -> str:
        return "(" + ", ".join(rat_str(a) for a in self) + ")"


@dataclass(frozen=True)
class TwistParameter:
    """The twist beta, restricted to 0 or 1/k for a positive integer k.

    ``k is None`` means beta = 0. Note that k = 1 is beta = 1, not beta = 0.
    """

    beta: Fraction
    k: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", rat(self.beta))
        if self.k is None:
            if self.beta != 0:
                raise ValueError("beta must be 0 when k is absent")
        else:
            if self.k < 1:
                raise ValueError("k must be a positive integer")
            if self.beta != Fraction(1, self.k):
                raise ValueError(f"beta={self.beta} does not match 1/k with k={self.k}")

    @classmethod
    def zero(cls) -> "TwistParameter":
        return cls(Fraction(0))

    @classmethod
    def inverse(cls, k: int) -> "TwistParameter":
        return cls(Fraction(1, k), k)

    @classmethod
    def parse(cls, text: str) -> "TwistParameter":
        """Parse ``"0"`` or ``"1/k"``; anything else raises ValueError."""
        text = text.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"beta must be given exactly as '0' or '1/k', got {text!r}")
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse beta {text!r}") from exc
        if value == 0:
            return cls.zero()
        if value.numerator != 1 or value.denominator < 1:
            raise ValueError(f"beta must be 0 or 1/k with k >= 1, got {text!r}")
        return cls.inverse(value.denominator)

    @property
    def scale(self) -> int:
        """k, or 1 when beta = 0; the lattice denominators are (1, s, 2s^2, 6s^3)."""
        return 1 if self.k is None else self.k

    @property
    def denominators(self) -> tuple[int, int, int, int]:
        s = self.scale
        return (1, s, 2 * s * s, 6 * s**3)

    def __str__(self) -> str:
        return rat_str(self.beta)


@dataclass(frozen=True)
class StabilityPoint:
    """A point of the (alpha, s)-slice, with alpha stored as alpha^2."""

    alpha_sq: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha_sq", rat(self.alpha_sq))
        object.__setattr__(self, "s", rat(self.s))
        if self.alpha_sq <= 0 or self.s <= 0:
            raise ValueError("alpha^2 and s must both be positive")

    @property
    def q(self) -> Fraction:
        """(s + 1/6) alpha^2, the quantity that orders the chambers."""
        return (self.s + Fraction(1, 6)) * self.alpha_sq


def twist(ch: ChernVector, beta: RatLike) -> ChernVector:
    """exp(-beta H) ch."""
    b = rat(beta)
    r, c, d, e = ch
    return ChernVector(
        r,
        c - b * r,
        d - b * c + b * b / 2 * r,
        e - b * d + b * b / 2 * c - b**3 / 6 * r,
    )


def untwist(chb: ChernVector, beta: RatLike) -> ChernVector:
    return twist(chb, -rat(beta))


def mumford_slope(chb: ChernVector) -> Union[Fraction, float]:
    if chb.ch0 == 0:
        return POS_INF
    return chb.ch1 / chb.ch0


def tilt_slope(chb: ChernVector, alpha_sq: RatLike) -> Union[Fraction, float]:
    a2 = rat(alpha_sq)
    if a2 <= 0:
        raise ValueError("alpha^2 must be positive")
    if chb.ch1 == 0:
        return POS_INF
    return (chb.ch2 - a2 / 2 * chb.ch0) / chb.ch1


def bridgeland_slope(chb: ChernVector, p: StabilityPoint) -> Union[Fraction, float]:
    den = chb.ch2 - p.alpha_sq / 2 * chb.ch0
    if den == 0:
        return POS_INF
    return (chb.ch3 - (p.s + Fraction(1, 6)) * p.alpha_sq * chb.ch1) / den


def support_matrix(alpha_sq: RatLike, K: RatLike) -> tuple[tuple[Fraction, ...], ...]:
    """The symmetric 4x4 matrix B_{alpha,K} of the support quadratic form."""
    ka = rat(K) * rat(alpha_sq)
    z = Fraction(0)
    return (
        (z, z, -ka, z),
        (z, ka, z, Fraction(-3)),
        (-ka, z, Fraction(4), z),
        (z, Fraction(-3), z, z),
    )


def quadratic_form(chb: ChernVector, alpha_sq: RatLike, K: RatLike) -> Fraction:
    """Support form K a^2 (ch1^2 - 2 ch0 ch2) + 4 ch2^2 - 6 ch1 ch3.

    Only K >= 1 is checked; the coupling K < 6s + 1 belongs to the caller.
    """
    k = rat(K)
    if k < 1:
        raise ValueError("K must be >= 1")
    r, c, d, e = chb
    return k * rat(alpha_sq) * (c * c - 2 * r * d) + 4 * d * d - 6 * c * e


def discriminant(ch: ChernVector) -> Fraction:
    return ch.ch1**2 - 2 * ch.ch0 * ch.ch2
