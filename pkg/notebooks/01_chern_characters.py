"""Twisted Chern characters and the three slope functions.

Twists a few sheaves on P^3, checks that twisting is a group action, and
evaluates the Mumford, tilt and Bridgeland slopes at a point of the
(alpha, s) slice.
"""
from fractions import Fraction as F

from wallkit import ChernVector, StabilityPoint, bridgeland_slope, mumford_slope, tilt_slope
from wallkit import discriminant, quadratic_form, twist, untwist

O = ChernVector.of(1, 0, 0, 0)
O_H2 = ChernVector.of(0, 1, F(3, 2), F(7, 6))  # line bundle O(2) on a plane

for beta in (F(0), F(1, 3), F(1, 2)):
    print(f"beta = {beta}:  ch^beta(O) = {twist(O, beta)}   ch^beta(O_H(2)) = {twist(O_H2, beta)}")

v = ChernVector.of(2, F(1, 3), F(-5, 7), 4)
assert untwist(twist(v, F(3, 5)), F(3, 5)) == v
assert twist(twist(v, F(1, 2)), F(1, 3)) == twist(v, F(5, 6))

p = StabilityPoint(alpha_sq=F(1), s=F(1))
print("mu(O)            =", mumford_slope(O))
print("nu(O_H(2))       =", tilt_slope(O_H2, p.alpha_sq))
print("lambda(O_H(2))   =", bridgeland_slope(O_H2, p))
print("Delta(O_H(2))    =", discriminant(O_H2))
print("Q at K=2, a^2=1  =", quadratic_form(O_H2, 1, 2))
