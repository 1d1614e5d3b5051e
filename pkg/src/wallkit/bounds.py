"""Closed-form bounds on where walls for (-R, 0, D, 0) can occur.

Bounds are reported as alpha0^2 values (walls are indexed by their
alpha-intercept) and, where useful, as the matching value of (s + 1/6) alpha^2,
which is alpha0^2 / 6.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, NamedTuple, Optional

from .chern import RatLike, TwistParameter, rat, rat_str


def _check_degree(D: int) -> None:
    if D < 1:
        raise ValueError("D must be >= 1")


def max_wall_beta0(D: int) -> Fraction:
    """Largest numerical wall alpha_inf^2 for beta = 0 (independent of R).

    Odd D: the character (0, 1, D/2, (D^2 - j)/6) with j = 2 if D = 3 mod 6
    and j = 0 otherwise. Even D: same as D - 1 (also used for D = 2).
    """
    _check_degree(D)
    if D % 2 == 0:
        D -= 1
    return Fraction(D * D - (2 if D % 6 == 3 else 0))


def within_prop_bounds(D: int, alpha_sq: Fraction) -> bool:
    """D - 2 < alpha <= D, evaluated on alpha^2 with alpha > 0."""
    lower_ok = D - 2 < 0 or (D - 2) ** 2 < alpha_sq
    return lower_ok and alpha_sq <= D * D


def gieseker_region_beta0(D: int) -> Fraction:
    """Beyond (s + 1/6) alpha^2 = D^2/6 every Gieseker semistable sheaf is stable (beta = 0)."""
    _check_degree(D)
    return Fraction(D * D, 6)


class Cap(NamedTuple):
    alpha0_sq: Fraction
    region: Fraction


def no_wall_cap(D: int) -> Cap:
    """No wall for R = 0 has alpha0 > 2D; region form (s + 1/6) alpha^2 > 2D^2/3."""
    _check_degree(D)
    return Cap(Fraction(4 * D * D), Fraction(2 * D * D, 3))


def rank_zero_threshold(D: int) -> Fraction:
    """For R = 0, a wall with alpha0^2 > 2D can only come from a rank-zero subobject."""
    _check_degree(D)
    return Fraction(2 * D)


def lower_cutoff(beta: RatLike) -> Cap:
    """(1 - beta)^2 and (1 - beta)^2 / 6.

    Valid only when every Gieseker semistable sheaf of the class has O(1) as a
    subobject in the double-tilted heart; that is the caller's assumption.
    """
    b = rat(beta)
    if not 0 <= b < 1:
        raise ValueError("lower_cutoff needs 0 <= beta < 1")
    a = (1 - b) ** 2
    return Cap(a, a / 6)


GIESEKER_CUTOFF_ASSUMPTION = (
    "assumes every Gieseker semistable sheaf of this class has O(1) as a "
    "subobject in the double-tilted heart; walls are then kept only for "
    "(s + 1/6) alpha^2 > (1 - beta)^2 / 6"
)


@dataclass(frozen=True)
class BoundReport:
    D: int
    beta: Fraction
    max_wall_sq: Optional[Fraction]
    cap_sq: Fraction
    rank_zero_threshold_sq: Fraction
    killing_wall_sq: Optional[Fraction]
    gieseker_region_threshold: Fraction

    def to_dict(self) -> dict[str, Any]:
        def s(x):
            return None if x is None else rat_str(x)

        return {
            "D": self.D,
            "beta": rat_str(self.beta),
            "max_wall_sq": s(self.max_wall_sq),
            "cap_sq": s(self.cap_sq),
            "rank_zero_threshold_sq": s(self.rank_zero_threshold_sq),
            "killing_wall_sq": s(self.killing_wall_sq),
            "gieseker_region_threshold": s(self.gieseker_region_threshold),
        }


def bound_report(D: int, twist: Optional[TwistParameter] = None) -> BoundReport:
    """Collect the bounds for (0, 0, D, 0) at the given twist (default beta = 0).

    For beta = 0 the Gieseker threshold is the sharper D^2/6; otherwise the
    general 2D^2/3 is reported and no maximal wall is known in closed form.
    """
    twist = twist or TwistParameter.zero()
    cap = no_wall_cap(D)
    zero = twist.beta == 0
    return BoundReport(
        D=D,
        beta=twist.beta,
        max_wall_sq=max_wall_beta0(D) if zero else None,
        cap_sq=cap.alpha0_sq,
        rank_zero_threshold_sq=rank_zero_threshold(D),
        killing_wall_sq=Fraction(1) if zero else None,
        gieseker_region_threshold=gieseker_region_beta0(D) if zero else cap.region,
    )
