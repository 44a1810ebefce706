"""Regularity, singular locus and the terminal / canonical criteria for toric cones."""
import logging
from dataclasses import dataclass, field
from math import prod
from typing import Tuple, Union

from toric_nash.helpers.errors import NotSimplicial, ZeroVector
from toric_nash.lattice import simplex_levels
from toric_nash.linalg import IntMatrix, snf_divisors
from toric_nash.polyhedra import Cone, Face

logger = logging.getLogger(__name__)

__all__ = [
    'SingularLocus',
    'is_regular',
    'multiplicity',
    'singular_locus',
    'in_sing_locus',
    'is_terminal_cone',
    'is_canonical_cone',
]

ConeLike = Union[Cone, Face]


def _rays_and_dim(f: ConeLike):
    return f.rays, f.dim


def multiplicity(f: ConeLike) -> int:
    """Index of the lattice spanned by the rays in span(f) ∩ N."""
    rays, dim = _rays_and_dim(f)
    if len(rays) != dim:
        raise NotSimplicial('multiplicity needs a simplicial cone, got {} rays in dim {}'.format(len(rays), dim))
    if not rays:
        return 1
    return prod(snf_divisors(IntMatrix.from_rows([u.coords for u in rays])))


def is_regular(f: ConeLike) -> bool:
    rays, dim = _rays_and_dim(f)
    if len(rays) != dim:
        return False
    return multiplicity(f) == 1


@dataclass(frozen=True)
class SingularLocus:
    """The singular faces of a cone; σ_sing is the union of their relative interiors."""

    cone: Cone = field(compare=False, repr=False)
    singular_faces: Tuple[Face, ...]

    def __bool__(self):
        return bool(self.singular_faces)

    def __len__(self):
        return len(self.singular_faces)

    def __iter__(self):
        return iter(self.singular_faces)

    def __contains__(self, face):
        return face in self.singular_faces


def singular_locus(c: Cone) -> SingularLocus:
    return SingularLocus(c, tuple(f for f in c.face_lattice if not is_regular(f)))


def in_sing_locus(c: Cone, v) -> bool:
    if not any(v):
        raise ZeroVector('the zero vector is not a valuation')
    return not is_regular(c.carrier_face(v))


def _levels(c: Cone):
    if not c.is_simplicial():
        raise NotSimplicial('terminality is only defined here for simplicial cones')
    if c.is_zero():
        return [], ()
    generators = tuple(c.restrict(u) for u in c.rays)
    return simplex_levels(generators), generators


def is_terminal_cone(c: Cone) -> bool:
    """No lattice point at level <= 1 besides 0 and the generators."""
    points, generators = _levels(c)
    extra = [p for p, level in points if any(p) and p not in generators]
    if extra:
        logger.debug('cone %s is not terminal: %s', c.rays, extra[0])
    return not extra


def is_canonical_cone(c: Cone) -> bool:
    """No nonzero lattice point strictly below level 1."""
    points, _ = _levels(c)
    return not any(any(p) and level < 1 for p, level in points)
