"""Walls induced by sheaves on a plane.

A subobject of O_H(2)-type on the plane P^2 in P^3 gives a tilt wall on
P^2; the dictionary turns it into a numerical wall in the (alpha, s) slice.
"""
from fractions import Fraction as F

from wallkit import PlaneChern, StabilityPoint, bridgeland_slope, build_dictionary, twist
from wallkit.plane import alpha_s_for, induced_alpha0_sq, plane_wall_t_squared, pushforward_chern

dic = build_dictionary(3, F(3, 2))  # plane cubic class (0, 3, 3/2)
sub = PlaneChern.of(1, 2, 2)        # O(2) on the plane
t2 = plane_wall_t_squared(sub, dic.s_bar)
print("plane wall t^2 =", t2)
print("induced alpha0^2 =", induced_alpha0_sq(sub, dic.beta_bar))

for a2 in (F(1, 2), F(1), F(3, 2)):
    p = StabilityPoint(a2, alpha_s_for(t2, a2))
    lam = bridgeland_slope(twist(pushforward_chern(sub), dic.beta_bar), p)
    print(f"alpha^2 = {a2}, s = {p.s}: lambda = {lam}")
