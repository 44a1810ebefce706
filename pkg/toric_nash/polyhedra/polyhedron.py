"""Polyhedra conv(points) + cone(rays) through their homogenization.

A point p is lifted to (p, 1) and a ray r to (r, 0); the polyhedron is the
slice t = 1 of the cone over these lifts, so its facets and faces are read
off the faces of that cone.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Sequence, Tuple

from toric_nash.helpers.errors import EmptyInput
from toric_nash.linalg import DualVector, LatticeVector, exact_array, exact_dot, integral_primitive

from .cone import Cone, Face, cone_from_rays

logger = logging.getLogger(__name__)

__all__ = ['Polyhedron', 'BoundedFace', 'minkowski_hull', 'compact_faces', 'homogenize_point']

Point = Tuple[Fraction, ...]


def homogenize_point(p) -> Tuple[int, ...]:
    return integral_primitive(tuple(p) + (1,))


def _dehomogenize(g) -> Point:
    t = g[-1]
    return tuple(Fraction(x, t) for x in g[:-1])


def _as_point(p) -> Point:
    return tuple(Fraction(x) for x in p)


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """P = conv(gen_points) + cone(gen_rays) = {v : <m, v> >= c for (m, c) in facets}.

    ``equations`` holds the affine hull as pairs (e, c) with <e, v> = c.
    """

    dim_ambient: int
    gen_points: Tuple[Point, ...]
    gen_rays: Tuple[LatticeVector, ...]
    facets: Tuple[Tuple[DualVector, Fraction], ...]
    equations: Tuple[Tuple[DualVector, Fraction], ...]
    homogenization: Cone = field(repr=False)
    facet_index: Tuple[int, ...] = field(repr=False)

    def contains(self, v) -> bool:
        return all(e(v) == c for e, c in self.equations) and all(m(v) >= c for m, c in self.facets)

    @cached_property
    def vertices(self) -> Tuple[Point, ...]:
        return tuple(sorted(_dehomogenize(g) for g in self.homogenization.rays if g[-1] > 0))

    @cached_property
    def recession_rays(self) -> Tuple[LatticeVector, ...]:
        return tuple(LatticeVector(g[:-1]) for g in self.homogenization.rays if g[-1] == 0)

    @property
    def dim(self):
        return self.homogenization.dim - 1

    def is_bounded(self):
        return not self.recession_rays

    def _bounded_face(self, face: Face) -> 'BoundedFace':
        tight = frozenset(k for k, i in enumerate(self.facet_index) if i in face.tight_facets)
        vertices = tuple(sorted(_dehomogenize(g) for g in face.rays))
        return BoundedFace(self, tight, vertices, face.dim - 1)

    @cached_property
    def bounded_faces(self) -> Tuple['BoundedFace', ...]:
        found = [
            self._bounded_face(face)
            for face in self.homogenization.face_lattice
            if face.rays and all(g[-1] > 0 for g in face.rays)
        ]
        return tuple(sorted(found, key=lambda f: (f.dim, f.vertices)))


@dataclass(frozen=True)
class BoundedFace:
    """A compact face of a polyhedron, given by its vertices and tight facets."""

    parent: Polyhedron = field(compare=False, repr=False)
    tight: frozenset
    vertices: Tuple[Point, ...]
    dim: int

    def supporting_functional(self) -> Tuple[DualVector, Fraction]:
        """A facet (m, c) of the parent with <m, .> = c on this face.

        For a face of codimension one in the affine hull it is unique.
        """
        k = min(self.tight)
        return self.parent.facets[k]

    def is_maximal(self) -> bool:
        return not any(
            set(self.vertices) < set(other.vertices) for other in self.parent.bounded_faces
        )


def minkowski_hull(points: Sequence, rays: Sequence) -> Polyhedron:
    """H-representation of conv(points) + cone(rays)."""
    if not points:
        raise EmptyInput('a polyhedron needs at least one point')
    pts = [_as_point(p) for p in points]
    n = len(pts[0])
    lifted = [homogenize_point(p) for p in pts]
    lifted += [tuple(r) + (0,) for r in rays if any(r)]
    cone = cone_from_rays(lifted, n + 1)

    # facets containing no lifted point are the face at infinity t >= 0
    tops = exact_array([g.coords for g in cone.rays if g[-1] > 0], n + 1)
    touched = (exact_dot(tops, cone.facet_array) == 0).any(axis=0)
    facets, facet_index = [], []
    for i, row in enumerate(cone.facet_rows):
        if not touched[i]:
            continue
        facets.append((DualVector(row[:-1]), Fraction(-row[-1])))
        facet_index.append(i)
    equations = tuple((DualVector(row[:-1]), Fraction(-row[-1])) for row in cone.equation_rows)

    polyhedron = Polyhedron(
        dim_ambient=n,
        gen_points=tuple(pts),
        gen_rays=tuple(LatticeVector(tuple(r)) for r in rays if any(r)),
        facets=tuple(facets),
        equations=equations,
        homogenization=cone,
        facet_index=tuple(facet_index),
    )
    assert cone.contains_many(exact_array(lifted, n + 1)).all()
    logger.debug('hull of %d points and %d rays: %d facets', len(pts), len(rays), len(facets))
    return polyhedron


def compact_faces(p: Polyhedron) -> List[BoundedFace]:
    """All nonempty bounded faces of p, by dimension then vertex list."""
    return list(p.bounded_faces)
