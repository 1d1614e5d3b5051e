"""Enumerate the numerical walls of the class (0, 0, D, 0).

Runs the untwisted search for D = 3 and D = 4, then a twisted search at
beta = 1/4 cut off at alpha0^2 >= 9/16, which uses worker processes.
"""
from fractions import Fraction as F

from wallkit import EnumerationOptions, TargetClass, TwistParameter, distinct_walls, enumerate_walls
from wallkit.cli import format_catalog

d3 = enumerate_walls(TargetClass(0, 3), TwistParameter.zero(), EnumerationOptions())
print(format_catalog(d3, "table"))

d4 = enumerate_walls(TargetClass(0, 4), TwistParameter.zero(), EnumerationOptions(min_alpha0_sq=F(1)))
print("D = 4 walls above the killing wall:", [str(a) for a in distinct_walls(d4)])

quarter = enumerate_walls(TargetClass(0, 4), TwistParameter.inverse(4),
                          EnumerationOptions(min_alpha0_sq=F(9, 16), workers=4))
print(format_catalog(quarter, "table"))
