"""
The doubled Cambrian framework for the oriented n-cycle.

Vertices come from Camb_Omega and from the antipodal copy of Camb_{-Omega};
each boundary-crossing Omega-sortable v is glued to eta(v).  An Omega-side
cover edge and a (-Omega)-side cover edge are the same edge when they join the
same glued pair and carry the same labels at both ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from dcamb.affine import (
    AffinePermutation,
    Root,
    is_positive,
    root_add,
    root_neg,
    root_scale,
    support,
    weak_leq,
    word_name,
)
from dcamb.cyclic import (
    Orientation,
    coxeter_element,
    enumerate_omega_sortables,
    labels_omega,
)
from dcamb.errors import InvariantViolation
from dcamb.eta import classify, eta
from dcamb.sorting import sorting_word

OMEGA, NEG, GLUED = "omega", "neg", "glued"


@dataclass(frozen=True)
class Vertex:
    key: str
    side: str
    omega_elem: AffinePermutation | None
    neg_elem: AffinePermutation | None
    labels: tuple[Root, ...]

    @property
    def name(self) -> str:
        """Sorting-word name; antipodal elements carry a leading minus."""
        parts = []
        if self.omega_elem is not None:
            parts.append(sorting_name(Orientation(self.omega_elem.n), self.omega_elem))
        if self.neg_elem is not None:
            parts.append(sorting_name(Orientation(self.neg_elem.n, True), self.neg_elem, "-"))
        return "=".join(parts)


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    label_u: Root
    label_v: Root

    def other(self, key: str) -> tuple[str, Root, Root]:
        """(far endpoint, label at key, label at far endpoint)."""
        if key == self.u:
            return self.v, self.label_u, self.label_v
        if key == self.v:
            return self.u, self.label_v, self.label_u
        raise KeyError(key)


@dataclass(frozen=True)
class HalfEdge:
    vertex: str
    label: Root


@dataclass
class LabeledQuasiGraph:
    n: int
    vertices: dict[str, Vertex]
    edges: list[Edge]
    half_edges: list[HalfEdge] = field(default_factory=list)
    base: str | None = None

    def incident(self, key: str) -> Iterator[tuple[int, Edge]]:
        for idx, e in enumerate(self.edges):
            if key in (e.u, e.v):
                yield idx, e

    def incident_labels(self, key: str) -> list[Root]:
        """C(v): one label per incident pair, full edges first."""
        out = [e.other(key)[1] for _, e in self.incident(key)]
        out.extend(h.label for h in self.half_edges if h.vertex == key)
        return out

    def label_map(self) -> dict[str, list[Root]]:
        """incident_labels for every vertex at once."""
        out: dict[str, list[Root]] = {k: [] for k in self.vertices}
        for e in self.edges:
            out[e.u].append(e.label_u)
            out[e.v].append(e.label_v)
        for h in self.half_edges:
            out[h.vertex].append(h.label)
        return out

    def full_degrees(self) -> dict[str, int]:
        out = {k: 0 for k in self.vertices}
        for e in self.edges:
            out[e.u] += 1
            out[e.v] += 1
        return out


def sorting_name(omega: Orientation, v: AffinePermutation, sign: str = "") -> str:
    c = coxeter_element(omega, support(v))
    return word_name(sorting_word(c, v).letters, sign)


def _key(side: str, w: AffinePermutation) -> str:
    return f"{side}:" + ",".join(map(str, w.window))


def edge_flip_root(lo_labels: Iterable[Root], hi_labels: Iterable[Root]) -> Root:
    """The unique positive root labelling the lower end whose negative labels the upper end."""
    hi = set(hi_labels)
    found = {b for b in lo_labels if is_positive(b) and root_neg(b) in hi}
    if len(found) != 1:
        raise InvariantViolation(f"cover carries {len(found)} flip roots: {sorted(found)}")
    return found.pop()


def hasse_covers(elements: tuple[AffinePermutation, ...]) -> list[tuple[int, int]]:
    """Covers (x, y) of the weak order restricted to ``elements``; covers may skip lengths."""
    m = len(elements)
    leq = np.zeros((m, m), dtype=np.int64)
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            if a != b and weak_leq(x, y):
                leq[a, b] = 1
    through = (leq @ leq) > 0
    cover = (leq > 0) & ~through
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]


def _cambrian_edges(omega: Orientation) -> list[tuple[AffinePermutation, AffinePermutation, Root]]:
    elems = enumerate_omega_sortables(omega)
    out = []
    for a, b in hasse_covers(elems):
        lo, hi = elems[a], elems[b]
        beta = edge_flip_root(labels_omega(omega, lo).values(), labels_omega(omega, hi).values())
        out.append((lo, hi, beta))
    return out


def _sorted_labels(roots: Iterable[Root]) -> tuple[Root, ...]:
    return tuple(sorted(roots))


def dc_labels(vertex: Vertex) -> set[Root]:
    return set(vertex.labels)


@lru_cache(maxsize=None)
def _build(n: int) -> LabeledQuasiGraph:
    om, neg = Orientation(n), Orientation(n, True)
    glue = {v: eta(om, v) for v in enumerate_omega_sortables(om) if classify(om, v).is_boundary}
    boundary_neg = {v for v in enumerate_omega_sortables(neg) if len(support(v)) == n - 1}
    if len(set(glue.values())) != len(glue) or set(glue.values()) != boundary_neg:
        raise InvariantViolation("eta is not a bijection onto the boundary (-Omega)-sortables")
    partner = {vp: v for v, vp in glue.items()}

    vertices: dict[str, Vertex] = {}
    key_om: dict[AffinePermutation, str] = {}
    key_neg: dict[AffinePermutation, str] = {}
    for v in enumerate_omega_sortables(om):
        own = set(labels_omega(om, v).values())
        if v in glue:
            vp = glue[v]
            key = _key(GLUED, v)
            lab = own | {root_neg(b) for b in labels_omega(neg, vp).values()}
            vertices[key] = Vertex(key, GLUED, v, vp, _sorted_labels(lab))
            key_neg[vp] = key
        else:
            key = _key(OMEGA, v)
            vertices[key] = Vertex(key, OMEGA, v, None, _sorted_labels(own))
        key_om[v] = key
    for vp in enumerate_omega_sortables(neg):
        if vp in partner:
            continue
        key = _key(NEG, vp)
        lab = {root_neg(b) for b in labels_omega(neg, vp).values()}
        vertices[key] = Vertex(key, NEG, None, vp, _sorted_labels(lab))
        key_neg[vp] = key

    edges: dict[frozenset, Edge] = {}
    for lo, hi, beta in _cambrian_edges(om):
        e = Edge(key_om[lo], key_om[hi], beta, root_neg(beta))
        edges.setdefault(frozenset({(e.u, e.label_u), (e.v, e.label_v)}), e)
    for lo, hi, beta in _cambrian_edges(neg):
        # antipodal copy: the lower end now carries -beta
        e = Edge(key_neg[lo], key_neg[hi], root_neg(beta), beta)
        edges.setdefault(frozenset({(e.u, e.label_u), (e.v, e.label_v)}), e)

    g = LabeledQuasiGraph(n, vertices, list(edges.values()), [], _key(OMEGA, AffinePermutation.identity(n)))
    labels = g.label_map()
    for key, vert in vertices.items():
        inc = labels[key]
        if len(inc) != n or set(inc) != set(vert.labels) or len(vert.labels) != n:
            raise InvariantViolation(f"vertex {vert.name} has incident labels {inc}, expected {vert.labels}")
    return g


def build(n: int) -> LabeledQuasiGraph:
    """DCamb_Omega for the oriented n-cycle; a fresh copy each call."""
    g = _build(n)
    return LabeledQuasiGraph(g.n, dict(g.vertices), list(g.edges), list(g.half_edges), g.base)


def camb_graph(omega: Orientation) -> LabeledQuasiGraph:
    """Camb_Omega alone with its partial labels, padded with half-edges where labels allow."""
    vertices = {}
    for v in enumerate_omega_sortables(omega):
        key = _key(NEG if omega.reverse else OMEGA, v)
        vertices[key] = Vertex(
            key,
            NEG if omega.reverse else OMEGA,
            None if omega.reverse else v,
            v if omega.reverse else None,
            _sorted_labels(labels_omega(omega, v).values()),
        )
    side = NEG if omega.reverse else OMEGA
    edges = [Edge(_key(side, lo), _key(side, hi), b, root_neg(b)) for lo, hi, b in _cambrian_edges(omega)]
    g = LabeledQuasiGraph(omega.n, vertices, edges, [], _key(side, AffinePermutation.identity(omega.n)))
    labels = g.label_map()
    for key, vert in vertices.items():
        used = set(labels[key])
        g.half_edges.extend(HalfEdge(key, b) for b in vert.labels if b not in used)
    return g


def omega_form(beta: Root, gamma: Root) -> int:
    """omega(beta, gamma) with omega(alpha_i, alpha_{i+1}) = 1 = -omega(alpha_{i+1}, alpha_i)."""
    n = len(beta)
    return sum(beta[i] * gamma[(i + 1) % n] - beta[(i + 1) % n] * gamma[i] for i in range(n))


def transition_image(beta: Root, gamma: Root) -> Root:
    """gamma + [sgn(beta) omega(beta, gamma)]_+ beta."""
    sgn = 1 if is_positive(beta) else -1
    return root_add(gamma, root_scale(max(sgn * omega_form(beta, gamma), 0), beta))


def mu_edge(g: LabeledQuasiGraph, key: str, edge_index: int) -> dict[Root, Root]:
    """Matching of labels at ``key`` to labels at the far end of the edge."""
    e = g.edges[edge_index]
    far, beta, far_beta = e.other(key)
    labels = g.label_map()
    far_labels = set(labels[far])
    out = {beta: far_beta}
    for gamma in labels[key]:
        if gamma == beta:
            continue
        img = transition_image(beta, gamma)
        if img not in far_labels:
            raise InvariantViolation(f"transition image {img} of {gamma} missing at {far}")
        out[gamma] = img
    return out
