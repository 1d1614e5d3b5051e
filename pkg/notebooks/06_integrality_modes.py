"""Compare the two integrality tests for twisted searches.

The default test reproduces the published tables. The untwisted test is
exact: it also admits characters such as ch^{1/2}(O(1)) that the published
third expression rejects.
"""
from fractions import Fraction as F

from wallkit import CandidateQuad, EnumerationOptions, TargetClass, TwistParameter, distinct_walls
from wallkit import enumerate_walls
from wallkit.conditions import integral_residues_betak, untwisted_residues

q = CandidateQuad(1, F(1, 2), F(1, 8), F(1, 48))
print("published residues:", [str(x) for x in integral_residues_betak(q, F(1, 2))])
print("untwisted residues:", [str(x) for x in untwisted_residues(q, F(1, 2))])

for mode in ("published", "untwisted"):
    cat = enumerate_walls(TargetClass(0, 4), TwistParameter.inverse(2),
                          EnumerationOptions(min_alpha0_sq=F(1, 4), integrality=mode))
    print(f"{mode:9s} {len(cat):3d} candidates, walls {[str(a) for a in distinct_walls(cat)]}")
