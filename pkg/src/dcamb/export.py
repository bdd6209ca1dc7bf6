"""JSON, DOT and SVG writers for frameworks and exchange graphs, plus the JSON reader."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from dcamb.affine import AffinePermutation
from dcamb.exact import SingularMatrix
from dcamb.fan import ConeDescription, cones, delta_pairing
from dcamb.framework import Edge, HalfEdge, LabeledQuasiGraph, Vertex
from dcamb.oracle import ExchangeGraph


def _window(w: AffinePermutation | None) -> list[int] | None:
    return None if w is None else list(w.window)


def framework_to_dict(g: LabeledQuasiGraph) -> dict[str, Any]:
    vertices = []
    for key, vert in g.vertices.items():
        lab = vert.labels
        entry = {
            "key": key,
            "side": vert.side,
            "word": vert.name,
            "omega_window": _window(vert.omega_elem),
            "neg_window": _window(vert.neg_elem),
            "labels": [list(b) for b in lab],
        }
        if len(lab) == g.n:
            try:
                rays = ConeDescription.from_labels(lab).rays
            except SingularMatrix:
                rays = None
            if rays is not None:
                entry["rays"] = [[[x.numerator, x.denominator] for x in r] for r in rays]
        vertices.append(entry)
    return {
        "n": g.n,
        "base": g.base,
        "vertices": vertices,
        "edges": [{"u": e.u, "v": e.v, "label_u": list(e.label_u), "label_v": list(e.label_v)} for e in g.edges],
        "half_edges": [{"vertex": h.vertex, "label": list(h.label)} for h in g.half_edges],
    }


def framework_to_json(g: LabeledQuasiGraph) -> str:
    return json.dumps(framework_to_dict(g), indent=1) + "\n"


def framework_from_dict(data: dict[str, Any]) -> LabeledQuasiGraph:
    def perm(win):
        return None if win is None else AffinePermutation(tuple(win))

    vertices = {}
    for v in data["vertices"]:
        vertices[v["key"]] = Vertex(
            v["key"], v["side"], perm(v.get("omega_window")), perm(v.get("neg_window")), tuple(map(tuple, v["labels"]))
        )
    edges = [Edge(e["u"], e["v"], tuple(e["label_u"]), tuple(e["label_v"])) for e in data["edges"]]
    half = [HalfEdge(h["vertex"], tuple(h["label"])) for h in data.get("half_edges", [])]
    return LabeledQuasiGraph(data["n"], vertices, edges, half, data.get("base"))


def framework_from_json(text: str) -> LabeledQuasiGraph:
    return framework_from_dict(json.loads(text))


def framework_to_dot(g: LabeledQuasiGraph) -> str:
    lines = [f"graph DCamb_{g.n} {{"]
    for key, vert in g.vertices.items():
        lines.append(f'  "{key}" [label="{vert.name}"];')
    for e in g.edges:
        lines.append(f'  "{e.u}" -- "{e.v}" [label="{list(e.label_u)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def oracle_to_dict(og: ExchangeGraph) -> dict[str, Any]:
    keys = sorted(og.seeds)
    index = {k: i for i, k in enumerate(keys)}
    return {
        "n": og.n,
        "seeds": [
            {"id": index[k], "B": [list(r) for r in k[0]], "c_vectors": [list(c) for c in k[1]], "g_vectors": [list(c) for c in k[2]]}
            for k in keys
        ],
        "edges": sorted(sorted(index[k] for k in e) for e in og.edges),
    }


def oracle_to_json(og: ExchangeGraph) -> str:
    return json.dumps(oracle_to_dict(og), indent=1) + "\n"


def oracle_to_dot(og: ExchangeGraph) -> str:
    data = oracle_to_dict(og)
    lines = [f"graph Exchange_{og.n} {{"]
    for s in data["seeds"]:
        lines.append(f'  {s["id"]} [label="{s["c_vectors"]}"];')
    for a, b in data["edges"]:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# SVG: affine slices <x, delta> = +1 (left chart) and <x, delta> = -1 (right chart).

_SIZE = 360
_ZOOM = 55.0
_REACH = 40.0


def _plane_coords(x) -> tuple[float, float]:
    x1, x2, x3 = (float(t) for t in x)
    return (math.sqrt(3) / 2 * (x2 - x3), x1 - (x2 + x3) / 2)


def _slice_wall(r1, r2, sign: int):
    """Part of the wall spanned by rays r1, r2 on the slice <x, delta> = sign, as a segment."""
    d1, d2 = sign * delta_pairing(r1), sign * delta_pairing(r2)
    if d1 <= 0 and d2 <= 0:
        return None
    if d1 > 0 and d2 > 0:
        return [tuple(a / d1 for a in r1), tuple(a / d2 for a in r2)]
    if d1 <= 0:
        r1, r2, d1, d2 = r2, r1, d2, d1
    start = tuple(a / d1 for a in r1)
    direction = tuple(b - Fraction(d2) / d1 * a for a, b in zip(r1, r2))
    return [start, tuple(s + _REACH * t for s, t in zip(start, direction))]


def _label_anchor(cone: ConeDescription, sign: int) -> tuple[float, float] | None:
    """Centroid of the visible ray points, nudged along rays lying in the slice's direction."""
    pts, dirs = [], []
    for r in cone.rays:
        d = sign * delta_pairing(r)
        if d > 0:
            pts.append(_plane_coords(tuple(a / d for a in r)))
        elif d == 0:
            dirs.append(_plane_coords(r))
        else:
            return None
    if not pts:
        return None
    cx, cy = (sum(c) / len(pts) for c in zip(*pts))
    for dx, dy in dirs:
        norm = math.hypot(dx, dy) or 1.0
        cx, cy = cx + 1.2 * dx / norm, cy + 1.2 * dy / norm
    return cx, cy


def framework_to_svg(g: LabeledQuasiGraph) -> str:
    """
    Two charts of the fan for n = 3.  Walls whose rays all pair nonnegatively
    with delta are black, nonpositively blue, and walls crossing delta-perp dashed.
    """
    if g.n != 3:
        raise ValueError("SVG rendering is only available for n = 3")
    cone_map = cones(g)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{2 * _SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {2 * _SIZE} {_SIZE}" font-family="serif" font-size="9">',
        "<defs>",
    ]
    for chart in range(2):
        parts.append(f'<clipPath id="chart{chart}"><rect x="{chart * _SIZE}" y="0" width="{_SIZE}" height="{_SIZE}"/></clipPath>')
    parts.append("</defs>")
    for chart, sign in enumerate((1, -1)):
        ox, oy = chart * _SIZE + _SIZE / 2, _SIZE / 2
        parts.append(f'<rect x="{chart * _SIZE}" y="0" width="{_SIZE}" height="{_SIZE}" fill="none" stroke="#ccc"/>')
        parts.append(f'<g clip-path="url(#chart{chart})">')
        parts.append(f'<text x="{chart * _SIZE + 8}" y="14" font-size="11">&lt;x, delta&gt; = {sign}</text>')
        for e in g.edges:
            cu = cone_map[e.u]
            r1, r2 = [r for b, r in zip(cu.labels, cu.rays) if b != e.label_u]
            seg = _slice_wall(r1, r2, sign)
            if seg is None:
                continue
            d = [delta_pairing(r1), delta_pairing(r2)]
            if min(d) >= 0:
                style = 'stroke="black"'
            elif max(d) <= 0:
                style = 'stroke="#4d4dff"'
            else:
                style = 'stroke="black" stroke-dasharray="4 3"'
            (ax, ay), (bx, by) = (_plane_coords(p) for p in seg)
            parts.append(
                f'<line x1="{ox + _ZOOM * ax:.2f}" y1="{oy - _ZOOM * ay:.2f}" '
                f'x2="{ox + _ZOOM * bx:.2f}" y2="{oy - _ZOOM * by:.2f}" {style}/>'
            )
        for key, cone in cone_map.items():
            anchor = _label_anchor(cone, sign)
            if anchor is None:
                continue
            cx, cy = anchor
            parts.append(
                f'<text x="{ox + _ZOOM * cx:.2f}" y="{oy - _ZOOM * cy:.2f}" text-anchor="middle">{g.vertices[key].name}</text>'
            )
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
