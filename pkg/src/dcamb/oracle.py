"""
Principal-coefficients seed mutation, independent of the Coxeter combinatorics.

A seed is (B, C, G): the exchange matrix, the c-vectors as columns of C and
the g-vectors as columns of G.  Seeds are identified up to a simultaneous
permutation of their columns.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from dcamb.exact import inverse
from dcamb.fan import dual_basis, primitive
from dcamb.framework import LabeledQuasiGraph, omega_form
from dcamb.verify import exchange_matrix

DEFAULT_MAX_SEEDS = 10**6


class SeedLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Seed:
    B: np.ndarray
    C: np.ndarray
    G: np.ndarray

    @property
    def n(self) -> int:
        return self.B.shape[0]

    def __eq__(self, other) -> bool:
        return all(np.array_equal(a, b) for a, b in zip((self.B, self.C, self.G), (other.B, other.C, other.G)))

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Canonical form: columns ordered by their c-vectors."""
        order = sorted(range(self.n), key=lambda j: tuple(self.C[:, j]))
        B = self.B[np.ix_(order, order)]
        return (
            tuple(map(tuple, B.tolist())),
            tuple(map(tuple, self.C[:, order].T.tolist())),
            tuple(map(tuple, self.G[:, order].T.tolist())),
        )

    def c_vectors(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in self.C[:, j]) for j in range(self.n)]

    def g_vectors(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in self.G[:, j]) for j in range(self.n)]


def initial_seed(n: int) -> Seed:
    if n < 3:
        raise ValueError(f"the n-cycle needs n >= 3, got {n}")
    eye = np.eye(n, dtype=np.int64)
    return Seed(exchange_matrix(n), eye.copy(), eye.copy())


def column_sign(col: np.ndarray) -> int:
    if (col >= 0).all() and col.any():
        return 1
    if (col <= 0).all() and col.any():
        return -1
    raise ValueError(f"c-vector {col.tolist()} is not sign-coherent")


def mutate(s: Seed, k: int) -> Seed:
    """Mutation in direction k (0-based)."""
    n = s.n
    eps = column_sign(s.C[:, k])
    ext = np.vstack([s.B, s.C])
    new = ext.copy()
    for i in range(2 * n):
        for j in range(n):
            if i == k or j == k:
                new[i, j] = -ext[i, j]
            else:
                bik, bkj = ext[i, k], ext[k, j]
                new[i, j] = ext[i, j] + np.sign(bik) * max(bik * bkj, 0)
    J = np.eye(n, dtype=np.int64)
    for j in range(n):
        J[j, k] += max(0, -eps * s.B[j, k])
    J[k, k] = -1
    G = s.G @ J
    return Seed(new[:n], new[n:], G)


def dual_g(s: Seed) -> np.ndarray:
    """G recomputed as the inverse transpose of C."""
    inv = inverse(s.C.tolist())
    return np.array([[int(x) for x in row] for row in inv], dtype=np.int64).T


def check_seed(s: Seed) -> list[str]:
    problems = []
    for j in range(s.n):
        try:
            column_sign(s.C[:, j])
        except ValueError as exc:
            problems.append(str(exc))
    if round(abs(np.linalg.det(s.C))) != 1 or round(abs(np.linalg.det(s.G))) != 1:
        problems.append("C or G is not unimodular")
    if not np.array_equal(s.G.T @ s.C, np.eye(s.n, dtype=np.int64)):
        problems.append("G^T C is not the identity")
    if not np.array_equal(s.B, -s.B.T):
        problems.append("B is not skew-symmetric")
    return problems


@dataclass
class ExchangeGraph:
    n: int
    seeds: dict[tuple, Seed]
    edges: set[frozenset] = field(default_factory=set)

    def degree(self, key: tuple) -> int:
        return sum(1 for e in self.edges if key in e)


def max_seeds_from_env() -> int:
    return int(os.environ.get("DCAMB_MAX_SEEDS", DEFAULT_MAX_SEEDS))


def exchange_graph(n: int, max_seeds: int | None = None) -> ExchangeGraph:
    """BFS closure of the initial seed under all mutations."""
    limit = max_seeds_from_env() if max_seeds is None else max_seeds
    start = initial_seed(n)
    graph = ExchangeGraph(n, {start.key(): start})
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for k in range(n):
            t = mutate(s, k)
            if not np.array_equal(t.G, dual_g(t)):
                raise AssertionError(f"g-vector mutation disagrees with duality at {t.key()}")
            tk = t.key()
            graph.edges.add(frozenset({s.key(), tk}))
            if tk not in graph.seeds:
                if len(graph.seeds) >= limit:
                    raise SeedLimitExceeded(f"more than {limit} seeds")
                graph.seeds[tk] = t
                queue.append(t)
    return graph


@dataclass
class ComparisonReport:
    framework_vertices: int
    oracle_seeds: int
    matched: int = 0
    mismatch: dict | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None and self.matched == self.framework_vertices == self.oracle_seeds

    def summary(self) -> str:
        head = f"{self.framework_vertices} = {self.oracle_seeds}" if self.framework_vertices == self.oracle_seeds else (
            f"{self.framework_vertices} != {self.oracle_seeds}"
        )
        if self.passed:
            return f"{head}, isomorphism verified, c/g/B all match ({self.matched} seeds matched)"
        return f"{head}, MISMATCH: {self.mismatch}"


def _match_columns(labels, seed: Seed) -> list[int] | None:
    cols = {c: j for j, c in enumerate(seed.c_vectors())}
    order = [cols.get(tuple(b)) for b in labels]
    return None if None in order else order


def compare(g: LabeledQuasiGraph, oracle: ExchangeGraph) -> ComparisonReport:
    """Walk the framework from its base vertex, mutating the oracle seed along each edge."""
    report = ComparisonReport(len(g.vertices), len(oracle.seeds))
    labels = g.label_map()
    adjacency: dict[str, list[int]] = {k: [] for k in g.vertices}
    for idx, e in enumerate(g.edges):
        adjacency[e.u].append(idx)
        adjacency[e.v].append(idx)

    image: dict[str, Seed] = {g.base: initial_seed(g.n)}
    queue = deque([g.base])
    while queue:
        key = queue.popleft()
        seed = image[key]
        problem = _check_vertex(labels[key], seed)
        if problem:
            report.mismatch = {"vertex": key, "problem": problem}
            return report
        report.matched += 1
        if seed.key() not in oracle.seeds:
            report.mismatch = {"vertex": key, "problem": "seed missing from the oracle exchange graph"}
            return report
        for idx in adjacency[key]:
            far, beta, _ = g.edges[idx].other(key)
            j = seed.c_vectors().index(tuple(beta))
            nxt = mutate(seed, j)
            if frozenset({seed.key(), nxt.key()}) not in oracle.edges:
                report.mismatch = {"vertex": key, "problem": f"edge {idx} has no oracle counterpart"}
                return report
            if far in image:
                if image[far].key() != nxt.key():
                    report.mismatch = {"vertex": far, "problem": "reached with two different seeds"}
                    return report
                continue
            image[far] = nxt
            queue.append(far)

    if len({s.key() for s in image.values()}) != len(image):
        report.mismatch = {"problem": "two vertices map to the same seed"}
    elif len(g.edges) != len(oracle.edges):
        report.mismatch = {"problem": f"{len(g.edges)} framework edges vs {len(oracle.edges)} oracle edges"}
    return report


def _check_vertex(labels, seed: Seed) -> str | None:
    order = _match_columns(labels, seed)
    if order is None or len(set(order)) != len(labels):
        return f"labels {sorted(labels)} differ from c-vectors {sorted(seed.c_vectors())}"
    for a, b1 in enumerate(labels):
        for b, b2 in enumerate(labels):
            if seed.B[order[a], order[b]] != omega_form(b1, b2):
                return f"b[{order[a]},{order[b]}] = {seed.B[order[a], order[b]]} but omega = {omega_form(b1, b2)}"
    rays = dual_basis(labels)
    for a, ray in enumerate(rays):
        g = tuple(int(x) for x in seed.G[:, order[a]])
        if any(x.denominator != 1 for x in ray) or tuple(int(x) for x in ray) != g:
            return f"g-vector {g} differs from dual ray {primitive(ray)}"
    return None
