import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

from toric_nash.lattice import HilbertBasis, hilbert_basis
from toric_nash.linalg import LatticeVector
from toric_nash.polyhedra import BoundedFace, Cone, Polyhedron, minkowski_hull

logger = logging.getLogger(__name__)

__all__ = ['NewtonPolyhedron', 'newton_polyhedron']


@dataclass(frozen=True, eq=False)
class NewtonPolyhedron:
    """Γ(σ) = conv(Hilbert basis) + σ, the hull of the nonzero lattice points of σ."""

    cone: Cone
    hilbert_basis: HilbertBasis = field(repr=False)
    hull: Optional[Polyhedron] = field(repr=False)
    compact_faces: Tuple[BoundedFace, ...] = field(repr=False)

    @cached_property
    def maximal_compact_faces(self) -> Tuple[BoundedFace, ...]:
        return tuple(f for f in self.compact_faces if f.is_maximal())

    @cached_property
    def boundary_points(self) -> Tuple[LatticeVector, ...]:
        """Lattice points of the compact boundary ∂_cΓ, lexicographic.

        A lattice point on a compact face is not a sum of two nonzero points
        of σ, so it is a Hilbert basis element tight on the face's facets.
        """
        points = set()
        for face in self.maximal_compact_faces:
            tight = [self.hull.facets[k] for k in face.tight]
            points.update(h for h in self.hilbert_basis if all(m(h) == level for m, level in tight))
        return tuple(sorted(points))


def newton_polyhedron(c: Cone) -> NewtonPolyhedron:
    basis = hilbert_basis(c)
    if c.is_zero():
        return NewtonPolyhedron(c, basis, None, ())
    hull = minkowski_hull([h.coords for h in basis], [u.coords for u in c.rays])
    faces = tuple(hull.bounded_faces)
    logger.debug('Newton polyhedron of %s: %d compact faces', c.rays, len(faces))
    return NewtonPolyhedron(c, basis, hull, faces)
