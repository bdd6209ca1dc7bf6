"""The two cyclic orientations, their sortable elements and the gluing map eta."""

from collections import Counter

from dcamb import Orientation, classify, enumerate_omega_sortables, eta, funny_roots, labels_omega
from dcamb.framework import sorting_name

n = 3
omega, opposite = Orientation(n), Orientation(n).opposite()
sortables = enumerate_omega_sortables(omega)
print(f"{len(sortables)} {omega}-sortable elements for n = {n}")
print("cases:", dict(Counter(str(classify(omega, v)) for v in sortables)))

for v in sortables:
    cls = classify(omega, v)
    name = sorting_name(omega, v)
    if not cls.is_boundary:
        print(f"  {name:<8} case A, labels {sorted(labels_omega(omega, v).values())}")
        continue
    partner = eta(omega, v)
    beta, gamma = funny_roots(omega, v)
    print(f"  {name:<8} {cls}: glued to -{sorting_name(opposite, partner)}, funny roots {beta} and {gamma}")
