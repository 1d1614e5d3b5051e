"""Draw the walls for D = 3 and check every shipped fixture.

Writes walls_d3.svg next to this script.
"""
from pathlib import Path

from wallkit import EnumerationOptions, TargetClass, TwistParameter, bound_report, enumerate_walls
from wallkit import diff_catalogs, load_fixture, render_svg
from wallkit.golden import fixture_index

cat = enumerate_walls(TargetClass(0, 3), TwistParameter.zero(), EnumerationOptions())
out = Path(__file__).with_name("walls_d3.svg")
render_svg(cat, bound_report(3), path=out)
print("wrote", out)

for name in fixture_index():
    fixture = load_fixture(name)
    fresh = enumerate_walls(fixture.target, fixture.twist, fixture.options)
    print(f"{name:10s} {diff_catalogs(fixture, fresh).report()}")
