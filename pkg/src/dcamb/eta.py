"""
The gluing bijection between boundary-crossing Omega- and (-Omega)-sortables.

An Omega-sortable v whose support is <s_i> = S - {s_i} has only n - 1 labels.
It factors as v = c[i+1, i+n-1] u, and is glued to

    eta(v) = c[i+n, i+2] (u')^{++}

where u' is the finite antipode of u and ^+ rotates every index by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from dcamb.affine import (
    AffinePermutation,
    Root,
    delta,
    is_negative,
    is_positive,
    length,
    reduce_index,
    root_neg,
    root_sub,
    support,
)
from dcamb.cyclic import Orientation, is_omega_sortable, labels_omega
from dcamb.errors import InvariantViolation
from dcamb.sorting import CoxeterWord, antipode_finite, is_sortable, label


@dataclass(frozen=True)
class VertexClass:
    """Case A (|J(v)| <= n-2) or case B(i) (J(v) = S - {s_i})."""

    missing: int | None = None

    @property
    def is_boundary(self) -> bool:
        return self.missing is not None

    def __str__(self) -> str:
        return f"B({self.missing})" if self.is_boundary else "A"


CASE_A = VertexClass()


def classify(omega: Orientation, v: AffinePermutation) -> VertexClass:
    if not is_omega_sortable(omega, v):
        raise ValueError(f"{v} is not {omega}-sortable")
    J = support(v)
    if len(J) == omega.n - 1:
        (i,) = set(range(1, omega.n + 1)) - J
        return VertexClass(i)
    return CASE_A


def interval_word(n: int, i: int, j: int) -> CoxeterWord:
    """c[i, j]: s_i s_{i+1} ... s_j if i <= j, else s_i s_{i-1} ... s_j (indices mod n)."""
    if abs(i - j) > n - 1:
        raise ValueError(f"c[{i},{j}] would repeat a letter")
    step = 1 if i <= j else -1
    return CoxeterWord(n, tuple(reduce_index(k, n) for k in range(i, j + step, step)))


def rotate(w: AffinePermutation, k: int = 1) -> AffinePermutation:
    """The diagram automorphism s_i -> s_{i+k}, i.e. x -> w(x - k) + k."""
    return AffinePermutation(tuple(w(x - k) + k for x in range(1, w.n + 1)))


def rotate_root(beta: Root, k: int = 1) -> Root:
    n = len(beta)
    return tuple(beta[(j - k) % n] for j in range(n))


def _boundary_index(omega: Orientation, v: AffinePermutation) -> int:
    cls = classify(omega, v)
    if not cls.is_boundary:
        raise ValueError(f"{v} has |J(v)| <= n-2 and is not glued")
    return cls.missing


def factor(omega: Orientation, v: AffinePermutation) -> tuple[int, AffinePermutation]:
    """(i, u) with v = c[i+1, i+n-1] u, lengths adding.  Only for Omega itself."""
    n = omega.n
    i = _boundary_index(omega, v)
    c = interval_word(n, i + 1, i + n - 1).element()
    u = c.inverse() * v
    if length(u) + n - 1 != length(v):
        raise InvariantViolation(f"{v} does not factor through c[{i + 1},{i + n - 1}]")
    inner = interval_word(n, i + 1, i + n - 2)
    if not is_sortable(inner, u):
        raise InvariantViolation(f"cofactor {u} of {v} is not {inner}-sortable")
    return i, u


def eta(omega: Orientation, v: AffinePermutation) -> AffinePermutation:
    if omega.reverse:
        raise ValueError("eta is defined on the Omega side")
    n = omega.n
    i, u = factor(omega, v)
    u_prime = antipode_finite(interval_word(n, i + 1, i + n - 2), u)
    return interval_word(n, i + n, i + 2).element() * rotate(u_prime, 2)


def funny_roots(omega: Orientation, v: AffinePermutation) -> tuple[Root, Root]:
    """
    (beta, gamma) with beta = C^{s_{i-1}}(v) negative and gamma the negated
    C^{s_{i+2}} label of eta(v), positive; gamma - beta = delta.
    """
    n = omega.n
    i = _boundary_index(omega, v)
    beta = label(interval_word(n, i + 1, i + n - 1), v, i - 1)
    gamma = root_neg(label(interval_word(n, i + n, i + 2), eta(omega, v), i + 2))
    if not (is_negative(beta) and is_positive(gamma)):
        raise InvariantViolation(f"sign pattern of ({beta}, {gamma}) at {v}")
    return beta, gamma


def funny_indices(omega: Orientation, v: AffinePermutation) -> tuple[int, int]:
    """
    The run starts (g, g') read off the funny roots, in the numbering
    t_j = s_{i+j} of the inner parabolic.

    beta = -(alpha_{i+1} + ... + alpha_g), gamma = alpha_{g'+2} + ... + alpha_{i+n}.
    """
    beta, gamma = funny_roots(omega, v)
    return sum(1 for x in beta if x), omega.n - 1 - sum(1 for x in gamma if x)


def glue_labels(omega: Orientation, v: AffinePermutation) -> set[Root]:
    """C_Omega(v) together with -C_{-Omega}(eta(v))."""
    own = set(labels_omega(omega, v).values())
    other = {root_neg(b) for b in labels_omega(omega.opposite(), eta(omega, v)).values()}
    return own | other


def check_delta_identity(omega: Orientation, v: AffinePermutation) -> bool:
    beta, gamma = funny_roots(omega, v)
    return root_sub(gamma, beta) == delta(omega.n)
