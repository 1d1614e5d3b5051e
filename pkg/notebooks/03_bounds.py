"""Closed-form bounds compared with what the enumeration finds."""
from wallkit import EnumerationOptions, TargetClass, TwistParameter, bound_report, distinct_walls
from wallkit import enumerate_walls, max_wall_beta0

print(" D  formula  enumerated  (D-2)^2  D^2")
for D in range(1, 11):
    cat = enumerate_walls(TargetClass(0, D), TwistParameter.zero(), EnumerationOptions())
    print(f"{D:2d}  {str(max_wall_beta0(D)):>7}  {str(distinct_walls(cat)[0]):>10}  "
          f"{(D - 2) ** 2:>7}  {D * D:>3}")

print(bound_report(4).to_dict())
print(bound_report(4, TwistParameter.inverse(2)).to_dict())
