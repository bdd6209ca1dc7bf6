"""Assemble the doubled framework, check every axiom, then break it on purpose."""

import dataclasses
from collections import Counter

from dcamb import build, verify_all

for n in range(3, 6):
    g = build(n)
    report = verify_all(g)
    sides = Counter(v.side for v in g.vertices.values())
    print(f"n = {n}: {len(g.vertices)} vertices, {len(g.edges)} edges, sides {dict(sides)}, axioms {'ok' if report.passed else 'FAILED'}")

g = build(3)
print("\nbase vertex:", g.vertices[g.base].name, g.vertices[g.base].labels)

# shift one edge label by delta and watch the transition check point at it
e = g.edges[5]
g.edges[5] = dataclasses.replace(e, label_u=tuple(x + 1 for x in e.label_u))
for line in verify_all(g).lines():
    print(" ", line)
