"""
Coxeter-sortable elements of finite standard parabolic subgroups.

A Coxeter element is always carried as a word, because the labels read off a
sorting word depend on the letter order of c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from dcamb.affine import (
    AffinePermutation,
    Root,
    act_word,
    is_left_descent,
    length,
    longest_element,
    multiply_by_simple,
    parabolic_elements,
    reduce_index,
    simple_root,
    support,
    weak_leq,
)
from dcamb.errors import InvariantViolation


@dataclass(frozen=True)
class CoxeterWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(reduce_index(i, self.n) for i in self.letters)
        object.__setattr__(self, "letters", letters)
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated letter in Coxeter word {letters}")
        if len(letters) >= self.n:
            raise ValueError("a Coxeter word must live in a finite (proper) parabolic")

    @property
    def letter_set(self) -> frozenset[int]:
        return frozenset(self.letters)

    def reversed(self) -> CoxeterWord:
        return CoxeterWord(self.n, self.letters[::-1])

    def element(self) -> AffinePermutation:
        return AffinePermutation.from_word(self.n, self.letters)

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.letters) or "e"


@dataclass(frozen=True)
class SortingWord:
    letters: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    # letter -> number of sorting-word letters preceding its first omitted occurrence
    skips: dict[int, int] = field(hash=False)

    @property
    def block_boundaries(self) -> tuple[int, ...]:
        out, pos = [], 0
        for b in self.blocks:
            pos += len(b)
            out.append(pos)
        return tuple(out)


def _check_support(c: CoxeterWord, w: AffinePermutation) -> None:
    if w.n != c.n:
        raise ValueError("rank mismatch")
    if not support(w) <= c.letter_set:
        raise ValueError(f"support {sorted(support(w))} is not inside the letters of {c}")


@lru_cache(maxsize=None)
def sorting_word(c: CoxeterWord, w: AffinePermutation) -> SortingWord:
    """Greedy scan of c^infinity, taking a letter whenever it is a left descent of what remains."""
    _check_support(c, w)
    rem = w
    letters: list[int] = []
    blocks: list[tuple[int, ...]] = []
    skips: dict[int, int] = {}
    while True:
        block = []
        for s in c.letters:
            if not rem.is_identity() and is_left_descent(rem, s):
                block.append(s)
                letters.append(s)
                rem = multiply_by_simple(rem, s, "left")
            elif s not in skips:
                skips[s] = len(letters)
        if block:
            blocks.append(tuple(block))
        if rem.is_identity() and len(skips) == len(c.letters):
            break
    return SortingWord(tuple(letters), tuple(blocks), skips)


def is_sortable(c: CoxeterWord, w: AffinePermutation) -> bool:
    blocks = sorting_word(c, w).blocks
    return all(set(a) >= set(b) for a, b in zip(blocks, blocks[1:]))


def _require_sortable(c: CoxeterWord, v: AffinePermutation) -> SortingWord:
    sw = sorting_word(c, v)
    if not is_sortable(c, v):
        raise ValueError(f"{v} is not {c}-sortable")
    return sw


def label(c: CoxeterWord, v: AffinePermutation, r: int) -> Root:
    """C_c^r(v): the sorting-word prefix before the skip of r, applied to alpha_r."""
    r = reduce_index(r, c.n)
    if r not in c.letter_set:
        raise ValueError(f"s{r} is not a letter of {c}")
    sw = _require_sortable(c, v)
    return act_word(sw.letters[: sw.skips[r]], simple_root(c.n, r))


def labels(c: CoxeterWord, v: AffinePermutation) -> dict[int, Root]:
    return {r: label(c, v, r) for r in c.letters}


@lru_cache(maxsize=None)
def enumerate_sortables(c: CoxeterWord) -> tuple[AffinePermutation, ...]:
    return tuple(w for w in parabolic_elements(c.n, c.letter_set) if is_sortable(c, w))


def pi_down(c: CoxeterWord, w: AffinePermutation) -> AffinePermutation:
    """Maximum c-sortable element below w, by brute force over all sortables."""
    _check_support(c, w)
    below = [v for v in enumerate_sortables(c) if weak_leq(v, w)]
    top = max(below, key=length)
    if not all(weak_leq(v, top) for v in below):
        raise InvariantViolation(f"no unique maximal {c}-sortable element below {w}")
    return top


def antipode_finite(c: CoxeterWord, u: AffinePermutation) -> AffinePermutation:
    """The c^{-1}-sortable element whose labels are the negatives of those of u."""
    _require_sortable(c, u)
    w0 = longest_element(c.n, c.letter_set)
    return pi_down(c.reversed(), u * w0)


def first_block_tail(c: CoxeterWord, u: AffinePermutation, reverse: bool = False) -> int:
    """
    Start of the final consecutive run in the first block of the sorting word.

    The letters of a linear word t_1 ... t_{k-1} are numbered by position.  For
    the forward word the run is t_g t_{g+1} ... t_{k-1} and g = k when t_{k-1}
    is absent.  With ``reverse=True`` the word is read as t_{k-1} ... t_1, the
    run is t_{g'} ... t_1 and g' = 0 when t_1 is absent.
    """
    sw = _require_sortable(c, u)
    k = len(c.letters) + 1
    index = {s: (k - p if reverse else p) for p, s in enumerate(c.letters, start=1)}
    first = [index[s] for s in sw.blocks[0]] if sw.blocks else []
    step = -1 if reverse else 1
    g = 0 if reverse else k
    expected = g - step
    for t in reversed(first):
        if t != expected:
            break
        g = t
        expected = t - step
    return g


def restrict(c: CoxeterWord, J: Iterable[int]) -> CoxeterWord:
    J = {reduce_index(j, c.n) for j in J}
    return CoxeterWord(c.n, tuple(s for s in c.letters if s in J))
