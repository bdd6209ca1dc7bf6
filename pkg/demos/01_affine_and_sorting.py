"""Window notation, root actions and c-sorting in the affine group of rank 4."""

from dcamb.affine import AffinePermutation, act_on_root, inversion_set, length, reduced_word, simple_root
from dcamb.sorting import CoxeterWord, enumerate_sortables, is_sortable, labels, pi_down, sorting_word

n = 4
w = AffinePermutation.from_word(n, [1, 2, 4, 1])
print(f"s1 s2 s4 s1 has window {w.window}, length {length(w)}, reduced word {reduced_word(w)}")
print("inversions:", sorted(inversion_set(w)))
print("w acts on alpha_3 as", act_on_root(w, simple_root(n, 3)))

# a Coxeter element of the finite parabolic {1, 2, 3}: every sortable element gets n-1 labels
c = CoxeterWord(n, (1, 2, 3))
sortables = enumerate_sortables(c)
print(f"\n{len(sortables)} elements are {c}-sortable (the Catalan number C_4)")
for v in sortables[:5]:
    sw = sorting_word(c, v)
    print(f"  {v.window}: sorting word {sw.letters}, labels {labels(c, v)}")

u = AffinePermutation.from_word(n, [2, 1, 3, 2])
print(f"\n{u.window} sortable? {is_sortable(c, u)}; projects down to {pi_down(c, u).window}")
