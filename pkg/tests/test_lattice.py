from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from toric_nash.helpers import ZeroVector
from toric_nash.lattice import (
    HalfOpenBox,
    box_points,
    closed_box_points,
    hilbert_basis,
    interior_box_points,
    iter_grid,
    minimal_elements,
    placing_triangulation,
    polytope_points,
    simplex_levels,
    triangulate_by_rays,
)
from toric_nash.linalg import LatticeVector, as_tuples
from toric_nash.polyhedra import cone_from_rays, faces


def vectors(*coords):
    return [LatticeVector(c) for c in coords]


def test_iter_grid_is_lexicographic():
    blocks = list(iter_grid([0, -1], [1, 1], chunk=2))
    points = [tuple(row) for block in blocks for row in block]
    assert points == [(0, -1), (0, 0), (0, 1), (1, -1), (1, 0), (1, 1)]
    assert list(iter_grid([1], [0])) == []


def test_polytope_points_triangle():
    assert polytope_points([(1, 0, 0), (0, 1, 0), (1, 1, 2)]) == vectors((0, 1, 0), (1, 0, 0), (1, 1, 2))


def test_polytope_points_segment():
    assert polytope_points([(1, 0), (1, 3)]) == vectors((1, 0), (1, 1), (1, 2), (1, 3))


def test_polytope_points_square():
    assert polytope_points([(0, 0), (1, 0), (0, 1), (1, 1)]) == vectors((0, 0), (0, 1), (1, 0), (1, 1))


def test_polytope_points_rational_vertices():
    assert polytope_points([(Fraction(1, 2), 0), (Fraction(7, 2), 0)]) == vectors((1, 0), (2, 0), (3, 0))


def test_box_points_closed_and_half_open():
    rays = ((1, 0), (1, 4))
    closed = as_tuples(box_points(HalfOpenBox(rays)))
    assert closed == [(0, 0), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (2, 4)]
    half_open = as_tuples(box_points(HalfOpenBox(rays, include_zero=False)))
    assert half_open == [(1, 1), (1, 2), (1, 3), (2, 4)]
    fundamental = as_tuples(box_points(HalfOpenBox(rays, include_one=False)))
    assert fundamental == [(0, 0), (1, 1), (1, 2), (1, 3)]
    assert len(fundamental) == 4


def test_box_points_match_brute_force():
    rays = ((1, 0, 0), (0, 1, 0), (-1, -1, 3))
    found = set(as_tuples(box_points(HalfOpenBox(rays, include_one=False))))
    inv = np.linalg.inv(np.array(rays, dtype=float))
    expected = set()
    for x in product(range(-2, 3), repeat=3):
        lam = np.array(x, dtype=float) @ inv
        if all(-1e-9 < l < 1 - 1e-9 for l in lam):
            expected.add(x)
    assert found == expected
    assert len(found) == 3


def test_box_points_of_unit_cube():
    rays = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert as_tuples(box_points(HalfOpenBox(rays))) == list(product((0, 1), repeat=3))
    assert as_tuples(box_points(HalfOpenBox(rays, include_zero=False))) == [(1, 1, 1)]
    assert as_tuples(box_points(HalfOpenBox(rays, include_one=False))) == [(0, 0, 0)]
    assert box_points(HalfOpenBox(rays, include_zero=False, include_one=False)).shape == (0, 3)


def test_fundamental_box_has_one_point_per_coset():
    rays = ((-6, 6, -5, 5), (-4, -4, 3, 2), (-3, 5, 6, -1), (5, 6, -2, 7))
    fundamental = box_points(HalfOpenBox(rays, include_one=False))
    det = round(abs(np.linalg.det(np.array(rays, dtype=float))))
    assert fundamental.shape == (det, 4)
    assert len(set(as_tuples(fundamental))) == det
    closed = box_points(HalfOpenBox(rays))
    assert set(as_tuples(fundamental)) <= set(as_tuples(closed))
    assert closed.shape[0] >= det + 15


def test_minimal_elements_match_pairwise_check():
    rng = np.random.default_rng(3)
    points = np.unique(rng.integers(0, 6, size=(200, 3)), axis=0)
    points = points[points.any(axis=1)]
    normals = np.array([(1, 0, 0), (1, 1, 0), (0, 0, 1)], dtype=np.int64)
    values = points @ normals.T
    expected = [
        not any((values[a] - values[b] >= 0).all() for b in range(len(points)) if b != a)
        for a in range(len(points))
    ]
    assert minimal_elements(points, normals).tolist() == expected


def test_simplex_levels_of_third_cone():
    levels = dict(simplex_levels([(1, 0, 0), (0, 1, 0), (-1, -1, 3)]))
    assert levels[(0, 0, 1)] == Fraction(1)
    assert levels[(0, 0, 0)] == 0
    assert (0, 0, 2) not in levels


def test_placing_triangulation_of_square():
    vs = [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    assert placing_triangulation(vs) == [(0, 1, 2), (1, 2, 3)]
    # placing (1, 1) first still cuts along the (0, 1)-(1, 0) diagonal
    assert placing_triangulation(vs, 'reverse') == [(0, 1, 2), (1, 2, 3)]


def test_placing_triangulation_uses_every_point():
    # segment (0,0)-(3,0) lifted, with interior points
    vs = [(x, 0, 1) for x in range(4)] + [(0, 1, 1)]
    simplices = placing_triangulation(vs)
    assert {i for s in simplices for i in s} == set(range(5))
    assert len(simplices) == 3


def test_placing_triangulation_rejects_zero():
    with pytest.raises(ZeroVector):
        placing_triangulation([(1, 0), (0, 0)])


def test_triangulate_by_rays(odp_cone, example_cone):
    assert triangulate_by_rays(example_cone) == [example_cone]
    pieces = triangulate_by_rays(odp_cone)
    assert len(pieces) == 2
    assert all(p.is_simplicial() for p in pieces)
    shared = set(pieces[0].rays) & set(pieces[1].rays)
    assert len(shared) == 2


def test_triangulation_covers_cone(odp_cone):
    pieces = triangulate_by_rays(odp_cone)
    X = np.array(list(product(range(-3, 4), repeat=3)), dtype=np.int64)
    inside = odp_cone.contains_many(X)
    covered = np.zeros(len(X), dtype=bool)
    interiors = np.zeros(len(X), dtype=int)
    for p in pieces:
        covered |= p.contains_many(X)
        interiors += np.asarray(p.contains_many(X) & (p.facet_array @ X.T > 0).all(axis=0), dtype=int)
    assert (covered == inside).all()
    assert interiors.max() <= 1


def test_hilbert_basis_orthant():
    c = cone_from_rays([(1, 0), (0, 1)], 2)
    assert list(hilbert_basis(c)) == vectors((0, 1), (1, 0))


def test_hilbert_basis_example_cone(example_cone):
    H = hilbert_basis(example_cone)
    assert list(H) == vectors((0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 2))
    assert (1, 1, 1) in H


def test_hilbert_basis_two_segment_cone():
    c = cone_from_rays([(1, 0), (2, 5)], 2)
    assert list(hilbert_basis(c)) == vectors((1, 0), (1, 1), (1, 2), (2, 5))


def test_hilbert_basis_non_full_dimensional():
    c = cone_from_rays([(1, 0, 0), (1, 2, 0)], 3)
    assert list(hilbert_basis(c)) == vectors((1, 0, 0), (1, 1, 0), (1, 2, 0))


def test_hilbert_basis_is_an_antichain(small_corpus):
    for spec in small_corpus[::3]:
        c = spec.to_cone()
        H = list(hilbert_basis(c))
        for h in H:
            for g in H:
                if g != h:
                    assert not c.contains(h - g)


def test_hilbert_basis_generates(odp_cone):
    H = [h.coords for h in hilbert_basis(odp_cone)]
    reachable = {(0, 0, 0)}
    frontier = [(0, 0, 0)]
    while frontier:
        v = frontier.pop()
        for h in H:
            w = tuple(a + b for a, b in zip(v, h))
            if max(abs(x) for x in w) <= 4 and w not in reachable:
                reachable.add(w)
                frontier.append(w)
    X = [x for x in product(range(-4, 5), repeat=3) if odp_cone.contains(x)]
    assert set(X) <= reachable


def test_minimal_elements():
    points = np.array([(1, 1), (2, 1), (1, 2), (3, 3)], dtype=np.int64)
    normals = np.array([(1, 0), (0, 1)], dtype=np.int64)
    assert minimal_elements(points, normals).tolist() == [True, False, False, False]


def test_closed_box_points_of_simplicial_cone(example_cone):
    points = set(as_tuples(closed_box_points(example_cone)))
    assert (1, 1, 1) in points
    assert len(points) == 9


def test_interior_box_points_of_example_cone(example_cone):
    top = faces(example_cone)[-1]
    points = interior_box_points(top)
    assert LatticeVector.of(1, 1, 1) in points
    assert points == vectors((1, 1, 1), (2, 2, 2))


def test_interior_box_points_of_ray_and_regular_cone():
    c = cone_from_rays([(1, 0), (0, 1)], 2)
    ray, top = faces(c)[1], faces(c)[-1]
    assert interior_box_points(ray) == [ray.rays[0]]
    assert interior_box_points(top) == vectors((1, 1))
    assert interior_box_points(faces(c)[0]) == []
