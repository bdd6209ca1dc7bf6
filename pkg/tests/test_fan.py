from fractions import Fraction

import pytest

import dataclasses

from dcamb.affine import AffinePermutation, act_on_root, elements_up_to_length, simple_root
from dcamb.exact import SingularMatrix, determinant, inverse, matmul
from dcamb.fan import (
    ConeDescription,
    boundary_trace,
    chamber_interior_point,
    check_fan,
    check_simplicial,
    cone_contains,
    cones,
    delta_pairing,
    dual_basis,
    facet_rays,
    locate,
    pairing,
    primitive,
    sample_points,
)
from dcamb.framework import GLUED, HalfEdge, build


def test_exact_linear_algebra():
    m = [[2, 1], [1, 1]]
    assert determinant(m) == 1
    assert matmul(m, inverse(m)) == [[1, 0], [0, 1]]
    assert determinant([[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    with pytest.raises(SingularMatrix):
        inverse([[1, 2], [2, 4]])


def test_dual_basis_of_simples_is_identity():
    rays = dual_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert rays == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_dual_basis_example():
    labels = [(-1, -1, 0), (0, 1, 0), (0, 0, 1)]
    rays = dual_basis(labels)
    assert rays == [(-1, 0, 0), (-1, 1, 0), (0, 0, 1)]
    for e, ray in enumerate(rays):
        assert [pairing(ray, b) for b in labels] == [int(e == f) for f in range(3)]


def test_dependent_labels_raise():
    with pytest.raises(SingularMatrix):
        dual_basis([(1, 0, 0), (0, 1, 0), (1, 1, 0)])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rays_are_exactly_dual(n):
    for key, cone in cones(build(n)).items():
        for e, ray in enumerate(cone.rays):
            assert all(isinstance(x, Fraction) for x in ray)
            assert [pairing(ray, b) for b in cone.labels] == [int(e == f) for f in range(n)]
        assert cone.ray_for(cone.labels[0]) == cone.rays[0]


def test_primitive():
    assert primitive((Fraction(1, 2), Fraction(-3, 2), 0)) == (1, -3, 0)
    assert primitive((0, 0)) == (0, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_simplicial(n):
    assert check_simplicial(build(n)).passed


def test_singular_vertex_fails_simplicial():
    g = build(3)
    e = g.edges[0]
    g.edges[0] = dataclasses.replace(e, label_u=(2, 0, 0))
    result = check_simplicial(g)["simplicial"]
    assert not result.passed and result.witness["det"] in (2, -2)


@pytest.mark.parametrize("n", [3, 4])
def test_facet_rays_shared(n):
    g = build(n)
    cone_map = cones(g)
    for idx in range(len(g.edges)):
        assert len(facet_rays(g, idx, cone_map)) == n - 1


def test_cone_contains():
    cone = ConeDescription.from_labels([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert cone_contains(cone, (1, 2, 3), strict=True)
    assert cone_contains(cone, (0, 2, 3)) and not cone_contains(cone, (0, 2, 3), strict=True)
    assert not cone_contains(cone, (-1, 2, 3))


def test_sampling_is_seeded_with_odd_denominators():
    a = sample_points(4, 50, seed=7)
    assert a == sample_points(4, 50, seed=7)
    assert a != sample_points(4, 50, seed=8)
    assert all(x.denominator % 2 == 1 for p in a for x in p)


def test_locate_flags_wall_points():
    g = build(3)
    counts = locate(g, [(1, 1, 1), (0, 1, 1), (Fraction(1, 3), 5, -7)])
    assert counts[0] == 1
    assert counts[1] == -1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_fan_check_small_samples(n):
    report = check_fan(build(n), samples=2000, seed=11)
    assert report.passed, report.lines()


def test_fan_check_fails_without_a_cone():
    g = build(3)
    key = next(k for k, v in g.vertices.items() if v.name == "s1")
    del g.vertices[key]
    # neighbours keep their labels as half-edges, so only the missing cone matters
    for e in [e for e in g.edges if key in (e.u, e.v)]:
        far, _, far_label = e.other(key)
        g.half_edges.append(HalfEdge(far, far_label))
    g.edges = [e for e in g.edges if key not in (e.u, e.v)]
    report = check_fan(g, samples=3000)
    assert report.simplicial and not report.passed
    assert report.uncovered and report.unpaired


@pytest.mark.parametrize("n", [3, 4])
def test_chamber_point_lies_in_its_chamber(n):
    for w in elements_up_to_length(n, 5):
        x = chamber_interior_point(w)
        for i in range(1, n + 1):
            # <x, w alpha_i> = <rho, alpha_i> = 1
            assert pairing(x, act_on_root(w, simple_root(n, i))) == 1
    assert chamber_interior_point(AffinePermutation.identity(n)) == (1,) * n


@pytest.mark.parametrize("n", [3, 4, 5])
def test_boundary_cones_straddle_delta_perp(n):
    g = build(n)
    for v in g.vertices.values():
        cone = ConeDescription.from_labels(v.labels)
        signs = {(delta_pairing(r) > 0) - (delta_pairing(r) < 0) for r in cone.rays}
        if v.side == GLUED:
            assert signs >= {1, -1}
        elif v.side == "omega":
            assert -1 not in signs
        else:
            assert 1 not in signs


@pytest.mark.parametrize("n", [3, 4, 5])
def test_boundary_traces_agree(n):
    for v in build(n).vertices.values():
        if v.side == GLUED:
            own, other = boundary_trace(v)
            assert own == other and len(own) == n - 1
    with pytest.raises(ValueError):
        boundary_trace(build(3).vertices[build(3).base])
