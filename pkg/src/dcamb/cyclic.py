"""
Sortable elements for the cyclically oriented n-cycle.

Omega is s_1 <- s_2 <- ... <- s_n <- s_1, so s_i precedes s_{i+1} in every
Coxeter element c(Omega, J).  The reverse orientation flips every edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from dcamb.affine import (
    AffinePermutation,
    Root,
    length,
    parabolic_elements,
    reduce_index,
    reduced_word,
    support,
    weak_leq,
)
from dcamb.errors import InvariantViolation
from dcamb.sorting import CoxeterWord, is_sortable, label


@dataclass(frozen=True)
class Orientation:
    n: int
    reverse: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"the n-cycle needs n >= 3, got {self.n}")

    def opposite(self) -> Orientation:
        return Orientation(self.n, not self.reverse)

    def predecessor(self, i: int) -> int:
        """The letter that must precede s_i in c(Omega, J) when both are present."""
        return reduce_index(i + 1 if self.reverse else i - 1, self.n)

    def __str__(self) -> str:
        return "-Omega" if self.reverse else "Omega"


def is_acyclic(omega: Orientation, J: Iterable[int]) -> bool:
    J = {reduce_index(j, omega.n) for j in J}
    return len(J) < omega.n


@lru_cache(maxsize=None)
def _coxeter_element(omega: Orientation, J: frozenset[int]) -> CoxeterWord:
    remaining = set(J)
    letters = []
    while remaining:
        s = min(i for i in remaining if omega.predecessor(i) not in remaining)
        letters.append(s)
        remaining.remove(s)
    return CoxeterWord(omega.n, tuple(letters))


def coxeter_element(omega: Orientation, J: Iterable[int]) -> CoxeterWord:
    """Word for c(Omega, J): repeatedly emit the smallest letter with no remaining predecessor."""
    J = frozenset(reduce_index(j, omega.n) for j in J)
    if not is_acyclic(omega, J):
        raise ValueError("J induces the directed n-cycle")
    return _coxeter_element(omega, J)


def is_omega_sortable(omega: Orientation, w: AffinePermutation) -> bool:
    J = support(w)
    return is_acyclic(omega, J) and is_sortable(coxeter_element(omega, J), w)


@lru_cache(maxsize=None)
def enumerate_omega_sortables(omega: Orientation) -> tuple[AffinePermutation, ...]:
    """All Omega-sortables, sorted by (length, reduced word)."""
    n = omega.n
    found = set()
    for i in range(1, n + 1):
        J = frozenset(range(1, n + 1)) - {i}
        c = coxeter_element(omega, J)
        found.update(w for w in parabolic_elements(n, J) if is_sortable(c, w))
    return tuple(sorted(found, key=lambda w: (length(w), reduced_word(w))))


@lru_cache(maxsize=None)
def labels_omega(omega: Orientation, v: AffinePermutation) -> dict[int, Root]:
    """C_Omega^r(v) for every r with J(v) + {r} acyclic."""
    if not is_omega_sortable(omega, v):
        raise ValueError(f"{v} is not {omega}-sortable")
    J = support(v)
    out = {}
    for r in range(1, omega.n + 1):
        if is_acyclic(omega, J | {r}):
            out[r] = label(coxeter_element(omega, J | {r}), v, r)
    return out


def pi_down_omega(omega: Orientation, w: AffinePermutation) -> AffinePermutation:
    below = [v for v in enumerate_omega_sortables(omega) if weak_leq(v, w)]
    top = max(below, key=length)
    if not all(weak_leq(v, top) for v in below):
        raise InvariantViolation(f"no unique maximal {omega}-sortable element below {w}")
    return top
