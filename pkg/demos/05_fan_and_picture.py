"""Exact cones, random point location, and an SVG of the rank 3 fan."""

import sys
from pathlib import Path

from dcamb import build, check_fan
from dcamb.export import framework_to_svg
from dcamb.fan import cones, primitive

g = build(3)
base = cones(g)[g.base]
print("rays of the base cone:", [primitive(r) for r in base.rays])
for line in check_fan(g, samples=5000).lines():
    print(" ", line)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "dcamb3.svg")
out.write_text(framework_to_svg(g))
print("wrote", out)
