"""
Framework axioms checked against any labeled quasi-graph.

Every check returns an AxiomResult; a failing result always carries a witness
naming the vertex, edge or labels that broke the axiom.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Any

import numpy as np

from dcamb.affine import is_negative, is_positive, root_neg, simple_root
from dcamb.framework import LabeledQuasiGraph, omega_form, transition_image

omega = omega_form


def exchange_matrix(n: int) -> np.ndarray:
    """B with b_{i,i+1} = 1 and b_{i+1,i} = -1, indices mod n."""
    B = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        B[i, (i + 1) % n] = 1
        B[(i + 1) % n, i] = -1
    return B


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None
    info: dict[str, Any] = field(default_factory=dict)


@dataclass
class AxiomReport:
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __add__(self, other: AxiomReport) -> AxiomReport:
        return AxiomReport(self.results + other.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed, "axioms": [asdict(r) for r in self.results]}, indent=2, default=list)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            line = f"{r.name:<18} {'PASS' if r.passed else 'FAIL'}"
            if r.witness:
                line += f"  witness={r.witness}"
            out.append(line)
        return out


def _pass(name: str, **info) -> AxiomResult:
    return AxiomResult(name, True, None, info)


def _fail(name: str, witness: dict[str, Any], **info) -> AxiomResult:
    return AxiomResult(name, False, witness, info)


def check_sign(g: LabeledQuasiGraph) -> AxiomReport:
    for key, labels in g.label_map().items():
        for beta in labels:
            if not (is_positive(beta) or is_negative(beta)):
                return AxiomReport([_fail("sign", {"vertex": key, "label": list(beta)})])
    return AxiomReport([_pass("sign")])


def check_base(g: LabeledQuasiGraph) -> AxiomReport:
    simples = {simple_root(g.n, i) for i in range(1, g.n + 1)}
    labels = g.label_map()
    hits = [k for k in g.vertices if sorted(labels[k]) == sorted(simples)]
    if not hits:
        return AxiomReport([_fail("base", {"vertex": None, "expected": sorted(map(list, simples))})])
    if g.base is not None and g.base not in hits:
        return AxiomReport([_fail("base", {"vertex": g.base, "labels": [list(b) for b in labels[g.base]]})])
    return AxiomReport([_pass("base", base=g.base or hits[0], unique=len(hits) == 1)])


def transition_failures(g: LabeledQuasiGraph, from_upper: bool = False) -> list[dict[str, Any]]:
    """Failures of the Transition condition, checked from one chosen endpoint of every edge."""
    out = []
    labels = g.label_map()
    for idx, e in enumerate(g.edges):
        key = e.v if from_upper else e.u
        far, beta, far_beta = e.other(key)
        if far_beta != root_neg(beta):
            out.append({"edge": idx, "vertex": key, "far": far, "label": list(beta), "far_label": list(far_beta)})
            continue
        far_labels = set(labels[far])
        for gamma in labels[key]:
            if gamma == beta:
                continue
            img = transition_image(beta, gamma)
            if img not in far_labels:
                out.append(
                    {"edge": idx, "vertex": key, "far": far, "label": list(beta), "gamma": list(gamma), "image": list(img)}
                )
                break
    return out


def check_transition(g: LabeledQuasiGraph) -> AxiomReport:
    fails = transition_failures(g) + transition_failures(g, from_upper=True)
    if fails:
        # an edge whose own two labels disagree is the most direct witness
        witness = next((f for f in fails if "far_label" in f), fails[0])
        return AxiomReport([_fail("transition", witness, failures=len(fails), edges=sorted({f["edge"] for f in fails}))])
    return AxiomReport([_pass("transition", edges=len(g.edges))])


def edge_orientation(g: LabeledQuasiGraph) -> dict[str, set[str]]:
    """Successor sets: each edge points at the endpoint where its label is positive."""
    succ: dict[str, set[str]] = {k: set() for k in g.vertices}
    for e in g.edges:
        if is_positive(e.label_v):
            succ[e.u].add(e.v)
        elif is_positive(e.label_u):
            succ[e.v].add(e.u)
    return succ


def check_descending(g: LabeledQuasiGraph) -> AxiomReport:
    results = []

    labels = g.label_map()
    all_positive = [k for k in g.vertices if all(is_positive(b) for b in labels[k])]
    bad = [k for k in all_positive if k != g.base]
    if bad or not all_positive:
        results.append(_fail("unique_minimum", {"vertex": bad[0] if bad else None}))
    else:
        results.append(_pass("unique_minimum", vertex=all_positive[0]))

    neg_half = [h for h in g.half_edges if is_negative(h.label)]
    if neg_half:
        h = neg_half[0]
        results.append(_fail("full_edge", {"vertex": h.vertex, "label": list(h.label)}))
    else:
        results.append(_pass("full_edge"))

    succ = edge_orientation(g)
    # graphlib wants predecessor sets; reversing keeps cycles as cycles
    try:
        order = list(TopologicalSorter(succ).static_order())
    except CycleError as exc:
        results.append(_fail("descending_chain", {"cycle": list(exc.args[1])}))
    else:
        sinks = [k for k in g.vertices if not succ[k]]
        results.append(_pass("descending_chain", sinks=sinks, depth=len(order)))
    return AxiomReport(results)


def check_complete(g: LabeledQuasiGraph) -> AxiomReport:
    if g.half_edges:
        h = g.half_edges[0]
        return AxiomReport([_fail("completeness", {"vertex": h.vertex, "half_edge": list(h.label)})])
    for key, full in g.full_degrees().items():
        if full != g.n:
            return AxiomReport([_fail("completeness", {"vertex": key, "full_edges": full})])
    return AxiomReport([_pass("completeness")])


def check_regular(g: LabeledQuasiGraph) -> AxiomReport:
    labels = g.label_map()
    for key, vert in g.vertices.items():
        inc = labels[key]
        if len(inc) != g.n or len(set(inc)) != g.n or set(inc) != set(vert.labels):
            return AxiomReport(
                [_fail("regularity", {"vertex": key, "incident": [list(b) for b in inc], "labels": [list(b) for b in vert.labels]})]
            )
    return AxiomReport([_pass("regularity", vertices=len(g.vertices))])


def verify_all(g: LabeledQuasiGraph) -> AxiomReport:
    return (
        check_sign(g)
        + check_base(g)
        + check_transition(g)
        + check_descending(g)
        + check_complete(g)
        + check_regular(g)
    )
