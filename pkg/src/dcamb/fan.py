"""
Exact cone geometry for framework label sets.

Points of V* are coordinate vectors x with x_i = <x, alpha_i>, so the pairing
with a root is a plain dot product.  Cone(v) is cut out by <x, beta> >= 0 over
the labels beta of v; its rays are the dual basis (the g-vectors).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from dcamb.affine import AffinePermutation, Root, act_on_root, root_neg, simple_root
from dcamb.cyclic import Orientation, labels_omega
from dcamb.exact import SingularMatrix, determinant, inverse, transpose
from dcamb.framework import GLUED, LabeledQuasiGraph, Vertex
from dcamb.verify import AxiomReport, AxiomResult

Point = tuple[Fraction, ...]

DEFAULT_SEED = 20140901


@dataclass(frozen=True)
class ConeDescription:
    labels: tuple[Root, ...]
    rays: tuple[Point, ...]

    @classmethod
    def from_labels(cls, labels: Iterable[Root]) -> ConeDescription:
        labels = tuple(labels)
        return cls(labels, tuple(dual_basis(labels)))

    def ray_for(self, beta: Root) -> Point:
        return self.rays[self.labels.index(beta)]


def pairing(x: Sequence, beta: Sequence) -> Fraction | int:
    return sum(a * b for a, b in zip(x, beta))


def dual_basis(labels: Sequence[Root]) -> list[Point]:
    """Rows of the inverse of the matrix whose columns are the labels."""
    try:
        inv = inverse(transpose(labels))
    except SingularMatrix as exc:
        raise SingularMatrix(f"labels {list(labels)} are linearly dependent") from exc
    return [tuple(row) for row in inv]


def cone_contains(cone: ConeDescription, x: Sequence, strict: bool = False) -> bool:
    if strict:
        return all(pairing(x, b) > 0 for b in cone.labels)
    return all(pairing(x, b) >= 0 for b in cone.labels)


def primitive(x: Sequence) -> tuple[int, ...]:
    """Primitive integer vector on the ray through x."""
    den = math.lcm(*(Fraction(a).denominator for a in x))
    ints = [int(Fraction(a) * den) for a in x]
    g = math.gcd(*ints)
    return tuple(a // g for a in ints) if g else tuple(ints)


def delta_pairing(x: Sequence) -> Fraction | int:
    return sum(x)


def chamber_interior_point(w: AffinePermutation) -> tuple[int, ...]:
    """w applied to rho, where <rho, alpha_i> = 1; pairs with beta to the height of w^{-1} beta."""
    winv = w.inverse()
    return tuple(sum(act_on_root(winv, simple_root(w.n, i))) for i in range(1, w.n + 1))


def check_simplicial(g: LabeledQuasiGraph) -> AxiomReport:
    labels = g.label_map()
    for key in g.vertices:
        lab = labels[key]
        det = determinant(transpose(lab)) if len(lab) == g.n else 0
        if abs(det) != 1:
            return AxiomReport([AxiomResult("simplicial", False, {"vertex": key, "det": det, "labels": [list(b) for b in lab]})])
    return AxiomReport([AxiomResult("simplicial", True)])


def cones(g: LabeledQuasiGraph) -> dict[str, ConeDescription]:
    labels = g.label_map()
    return {k: ConeDescription.from_labels(labels[k]) for k in g.vertices}


def facet_rays(g: LabeledQuasiGraph, edge_index: int, cone_map: dict[str, ConeDescription] | None = None):
    """Primitive rays shared by the two cones across an edge, as a set."""
    cone_map = cone_map or cones(g)
    e = g.edges[edge_index]
    cu = cone_map[e.u]
    return {primitive(r) for b, r in zip(cu.labels, cu.rays) if b != e.label_u}


def sample_points(n: int, count: int, seed: int, scale: int = 1000, max_den: int = 15) -> list[Point]:
    """Seeded rational points with odd denominators; not filtered for genericity."""
    rng = random.Random(seed)
    odd = list(range(1, max_den + 1, 2))
    return [tuple(Fraction(rng.randint(-scale, scale), rng.choice(odd)) for _ in range(n)) for _ in range(count)]


@dataclass
class FanReport:
    simplicial: bool
    facets_checked: int = 0
    unpaired: list[dict] = field(default_factory=list)
    samples: int = 0
    resampled: int = 0
    uncovered: list[Point] = field(default_factory=list)
    multiply_covered: list[Point] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.simplicial and self.samples > 0 and not self.unpaired and not self.uncovered and not self.multiply_covered

    def lines(self) -> list[str]:
        return [
            f"{'fan_simplicial':<18} {'PASS' if self.simplicial else 'FAIL'}",
            f"{'facet_pairing':<18} {'PASS' if self.simplicial and not self.unpaired else 'FAIL'}"
            f"  ({self.facets_checked} facets)",
            f"{'point_location':<18} {'PASS' if self.samples and not self.uncovered and not self.multiply_covered else 'FAIL'}"
            f"  ({self.samples} samples, {len(self.uncovered)} uncovered, {len(self.multiply_covered)} multiply covered)",
        ]


def _facet_pairing(g: LabeledQuasiGraph, report: FanReport) -> None:
    cone_map = cones(g)
    labels = g.label_map()
    for idx, e in enumerate(g.edges):
        cu, cv = cone_map[e.u], cone_map[e.v]
        beta = e.label_u
        shared_u = {primitive(r) for b, r in zip(cu.labels, cu.rays) if b != e.label_u}
        shared_v = {primitive(r) for b, r in zip(cv.labels, cv.rays) if b != e.label_v}
        opp_u, opp_v = cu.ray_for(e.label_u), cv.ray_for(e.label_v)
        report.facets_checked += 1
        if shared_u != shared_v or len(shared_u) != g.n - 1 or not (pairing(opp_u, beta) > 0 > pairing(opp_v, beta)):
            report.unpaired.append({"edge": idx, "u": e.u, "v": e.v})
    for h in g.half_edges:
        report.unpaired.append({"vertex": h.vertex, "half_edge": list(h.label)})
    for key, lab in labels.items():
        if len(lab) != g.n:
            report.unpaired.append({"vertex": key, "labels": len(lab)})


def locate(g: LabeledQuasiGraph, points: Sequence[Sequence]) -> np.ndarray:
    """
    Per point, the number of cones containing it strictly, or -1 when some
    label of some cone vanishes on it (a non-generic point).
    """
    labels = g.label_map()
    keys = list(g.vertices)
    width = max(len(labels[k]) for k in keys)
    # pad short label sets with a copy of their first label so they do not change membership
    L = np.array([[labels[k][j if j < len(labels[k]) else 0] for j in range(width)] for k in keys], dtype=np.int64)
    P = np.array([_clear_denominators(p) for p in points], dtype=np.int64)
    vals = np.einsum("vjn,sn->svj", L, P)
    degenerate = (vals == 0).any(axis=(1, 2))
    counts = (vals > 0).all(axis=2).sum(axis=1)
    return np.where(degenerate, -1, counts)


def _clear_denominators(p: Sequence) -> list[int]:
    den = math.lcm(*(Fraction(a).denominator for a in p))
    return [int(Fraction(a) * den) for a in p]


def check_fan(g: LabeledQuasiGraph, samples: int = 10000, seed: int = DEFAULT_SEED) -> FanReport:
    report = FanReport(simplicial=check_simplicial(g).passed)
    if not report.simplicial:
        # cones are not even full-dimensional; point counts would mean nothing
        return report
    _facet_pairing(g, report)
    rng_seed = seed
    accepted: list[Point] = []
    counts: list[int] = []
    while len(accepted) < samples:
        batch = sample_points(g.n, samples - len(accepted), rng_seed)
        rng_seed += 1
        located = locate(g, batch)
        for p, c in zip(batch, located):
            if c < 0 or not any(p):
                report.resampled += 1
                continue
            accepted.append(p)
            counts.append(int(c))
    report.samples = len(accepted)
    report.uncovered = [p for p, c in zip(accepted, counts) if c == 0]
    report.multiply_covered = [p for p, c in zip(accepted, counts) if c > 1]
    return report


def _reduce_mod_delta(beta: Root) -> Root:
    last = beta[-1]
    return tuple(x - last for x in beta)


def boundary_trace(vertex: Vertex) -> tuple[frozenset[Root], frozenset[Root]]:
    """
    The two halfspace descriptions of the glued cone on delta-perp: the Omega
    labels and the negated (-Omega) labels, each reduced modulo delta.
    """
    if vertex.side != GLUED:
        raise ValueError(f"{vertex.key} is not a glued vertex")
    n = vertex.omega_elem.n
    own = labels_omega(Orientation(n), vertex.omega_elem).values()
    other = labels_omega(Orientation(n, True), vertex.neg_elem).values()
    return (
        frozenset(_reduce_mod_delta(b) for b in own),
        frozenset(_reduce_mod_delta(root_neg(b)) for b in other),
    )
