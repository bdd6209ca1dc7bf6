"""Principal-coefficient mutation, compared seed by seed against the framework."""

from dcamb import build, compare, exchange_graph
from dcamb.oracle import initial_seed, mutate

s = mutate(initial_seed(3), 0)
print("B after mutating at 1:\n", s.B)
print("c-vectors:", s.c_vectors())
print("g-vectors:", s.g_vectors())

for n in (3, 4, 5):
    og = exchange_graph(n)
    print(f"n = {n}: {len(og.seeds)} seeds;", compare(build(n), og).summary())
