"""
The affine symmetric group of type A~_{n-1} in window notation.

An element is a bijection f: Z -> Z with f(i + n) = f(i) + n, stored as the
window (f(1), ..., f(n)).  Simple generators s_1, ..., s_n act on the right by
swapping window positions (s_n swaps f(n) and f(n + 1) = f(1) + n) and on the
left by swapping values.

Roots are integer tuples of length n in the basis of simple roots
alpha_1, ..., alpha_n.  Indices are cyclic modulo n and written 1..n.

>>> w = AffinePermutation.from_word(3, [1, 2])
>>> w.window
(2, 3, 1)
>>> length(w), sorted(inversion_set(w))
(2, [(1, 0, 0), (1, 1, 0)])
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Root = tuple[int, ...]


def reduce_index(i: int, n: int) -> int:
    """Representative of i modulo n in 1..n."""
    return (i - 1) % n + 1


@dataclass(frozen=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if n < 3:
            raise ValueError(f"rank must be at least 3, got {n}")
        if sorted(x % n for x in self.window) != list(range(n)):
            raise ValueError(f"window {self.window} does not define an affine permutation")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError(f"window {self.window} has sum {sum(self.window)}, expected {n * (n + 1) // 2}")

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int) -> AffinePermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> AffinePermutation:
        w = cls.identity(n)
        for i in word:
            w = multiply_by_simple(w, i, "right")
        return w

    def __call__(self, x: int) -> int:
        q, r = divmod(x - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return AffinePermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> AffinePermutation:
        n = self.n
        inv = [0] * n
        for i, v in enumerate(self.window, start=1):
            q, r = divmod(v - 1, n)
            inv[r] = i - q * n
        return AffinePermutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        return word_name(reduced_word(self))


def word_name(word: Sequence[int], sign: str = "") -> str:
    """Human name of a word, e.g. ``s1.s2.s1``; the empty word is ``e``."""
    return sign + (".".join(f"s{i}" for i in word) if word else "e")


def multiply_by_simple(w: AffinePermutation, i: int, side: str = "right") -> AffinePermutation:
    n = w.n
    i = reduce_index(i, n)
    win = list(w.window)
    if side == "right":
        if i < n:
            win[i - 1], win[i] = win[i], win[i - 1]
        else:
            win[n - 1], win[0] = win[0] + n, win[n - 1] - n
    elif side == "left":
        for k, v in enumerate(win):
            r = reduce_index(v, n)
            if r == i:
                win[k] = v + 1
            elif r == reduce_index(i + 1, n):
                win[k] = v - 1
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return AffinePermutation(tuple(win))


@lru_cache(maxsize=None)
def length(w: AffinePermutation) -> int:
    """Number of affine inversions, sum over i < j of |floor((f(j) - f(i)) / n)|."""
    n, f = w.n, w.window
    return sum(abs((f[j] - f[i]) // n) for i in range(n) for j in range(i + 1, n))


def right_descents(w: AffinePermutation) -> list[int]:
    n, f = w.n, w.window
    return [i for i in range(1, n + 1) if f[i - 1] > (f[i] if i < n else f[0] + n)]


def left_descents(w: AffinePermutation) -> list[int]:
    return right_descents(w.inverse())


def is_left_descent(w: AffinePermutation, i: int) -> bool:
    # s_i is a left descent iff f^{-1}(i) > f^{-1}(i + 1)
    inv = w.inverse()
    return inv(i) > inv(i + 1)


@lru_cache(maxsize=None)
def reduced_word(w: AffinePermutation) -> tuple[int, ...]:
    """Reduced word obtained by repeatedly stripping the smallest right descent."""
    word = []
    while not w.is_identity():
        s = right_descents(w)[0]
        word.append(s)
        w = multiply_by_simple(w, s, "right")
    return tuple(reversed(word))


def simple_root(n: int, i: int) -> Root:
    i = reduce_index(i, n)
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def delta(n: int) -> Root:
    return (1,) * n


def root_add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def root_sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def root_neg(a: Root) -> Root:
    return tuple(-x for x in a)


def root_scale(k: int, a: Root) -> Root:
    return tuple(k * x for x in a)


def is_positive(a: Root) -> bool:
    return any(a) and all(x >= 0 for x in a)


def is_negative(a: Root) -> bool:
    return any(a) and all(x <= 0 for x in a)


def cartan_entry(n: int, i: int, j: int) -> int:
    i, j = reduce_index(i, n), reduce_index(j, n)
    if i == j:
        return 2
    if reduce_index(i + 1, n) == j or reduce_index(j + 1, n) == i:
        return -1
    return 0


def reflect(i: int, beta: Root) -> Root:
    """s_i(beta) = beta - K(alpha_i, beta) alpha_i."""
    n = len(beta)
    k = i - 1
    pairing = 2 * beta[k] - beta[(k - 1) % n] - beta[(k + 1) % n]
    if not pairing:
        return beta
    out = list(beta)
    out[k] -= pairing
    return tuple(out)


def act_word(word: Sequence[int], beta: Root) -> Root:
    for i in reversed(word):
        beta = reflect(i, beta)
    return beta


def act_on_root(w: AffinePermutation, beta: Root) -> Root:
    return act_word(reduced_word(w), beta)


@lru_cache(maxsize=None)
def inversion_set(w: AffinePermutation) -> frozenset[Root]:
    return inversions_from_word(w.n, reduced_word(w))


def inversions_from_word(n: int, word: Sequence[int]) -> frozenset[Root]:
    """{s_{i_1} ... s_{i_{m-1}} alpha_{i_m}} for a reduced word i_1 ... i_k."""
    return frozenset(act_word(word[:m], simple_root(n, word[m])) for m in range(len(word)))


def weak_leq(x: AffinePermutation, y: AffinePermutation) -> bool:
    """Right weak order: inv(x) is a subset of inv(y)."""
    return length(x) <= length(y) and inversion_set(x) <= inversion_set(y)


@lru_cache(maxsize=None)
def support(w: AffinePermutation) -> frozenset[int]:
    return frozenset(reduced_word(w))


def cover_reflections(w: AffinePermutation) -> frozenset[Root]:
    return frozenset(root_neg(act_on_root(w, simple_root(w.n, s))) for s in right_descents(w))


def _check_proper(n: int, J: Iterable[int]) -> frozenset[int]:
    J = frozenset(reduce_index(j, n) for j in J)
    if len(J) >= n:
        raise ValueError("the full parabolic subgroup is infinite")
    return J


def parabolic_projection(w: AffinePermutation, J: Iterable[int]) -> AffinePermutation:
    """The maximal element of W_J weakly below w; its inversions are inv(w) restricted to W_J."""
    J = _check_proper(w.n, J)
    target = inversion_set(w)
    u = AffinePermutation.identity(w.n)
    grown = True
    while grown:
        grown = False
        for s in sorted(J):
            if act_on_root(u, simple_root(w.n, s)) in target:
                u = multiply_by_simple(u, s, "right")
                grown = True
                break
    return u


@lru_cache(maxsize=None)
def longest_element(n: int, J: frozenset[int]) -> AffinePermutation:
    J = _check_proper(n, J)
    u = AffinePermutation.identity(n)
    while True:
        ascents = [s for s in sorted(J) if s not in right_descents(u)]
        if not ascents:
            return u
        u = multiply_by_simple(u, ascents[0], "right")


@lru_cache(maxsize=None)
def parabolic_elements(n: int, J: frozenset[int]) -> tuple[AffinePermutation, ...]:
    """All elements of the finite parabolic W_J, ordered by BFS from the identity."""
    J = _check_proper(n, J)
    start = AffinePermutation.identity(n)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in sorted(J):
            ws = multiply_by_simple(w, s, "right")
            if ws not in seen:
                seen.add(ws)
                order.append(ws)
                queue.append(ws)
    return tuple(order)


def elements_up_to_length(n: int, max_length: int) -> list[AffinePermutation]:
    """All elements of the affine group with length at most max_length."""
    start = AffinePermutation.identity(n)
    layer = {start}
    out = [start]
    for _ in range(max_length):
        nxt = set()
        for w in layer:
            for s in range(1, n + 1):
                if s not in right_descents(w):
                    nxt.add(multiply_by_simple(w, s, "right"))
        layer = nxt
        out.extend(sorted(nxt, key=lambda w: w.window))
    return out
