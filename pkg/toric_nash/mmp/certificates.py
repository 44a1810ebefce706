"""Per-wall nefness evidence for the canonical class of a simplicial fan.

For a wall τ shared by cone(τ, u) and cone(τ, u'), let m be the functional
equal to 1 on every ray of cone(τ, u). The bend <m, u'> - 1 is zero when
the piecewise linear function with value 1 on all rays is linear across τ
and positive when it is strictly convex there; K·γ >= 0 for the curve of τ
exactly when the bend is >= 0.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from toric_nash.helpers.errors import InvariantViolation, NonSimplicialFan
from toric_nash.helpers.tools import rational_to_json
from toric_nash.linalg import LatticeVector, coefficients

from .fan import Fan

logger = logging.getLogger(__name__)

__all__ = ['WallCertificate', 'wall_bend', 'nef_certificate']


@dataclass(frozen=True)
class WallCertificate:
    wall_rays: Tuple[LatticeVector, ...]
    left_cone: int
    right_cone: int
    left_extra_ray: LatticeVector
    right_extra_ray: LatticeVector
    bend: Fraction
    reverse_bend: Fraction
    same_face: Optional[bool] = None

    @property
    def sign(self) -> int:
        return (self.bend > 0) - (self.bend < 0)

    def wall(self, fan: Fan):
        """The wall as a face of the left cone."""
        return fan.max_cones[self.left_cone].face_spanned_by(self.wall_rays)

    def to_dict(self):
        return {
            'wall': [u.to_list() for u in self.wall_rays],
            'cones': [self.left_cone, self.right_cone],
            'bend': rational_to_json(self.bend),
        }


def wall_bend(left_rays, extra) -> Fraction:
    """<m, extra> - 1 for the functional m that is 1 on every left ray."""
    alpha = coefficients([u.coords for u in left_rays], extra.coords)
    if alpha is None:
        raise InvariantViolation('ray {} is outside the span of {}'.format(extra, left_rays))
    return sum(alpha, Fraction(0)) - 1


def nef_certificate(fan: Fan) -> List[WallCertificate]:
    """A certificate for every wall of Δ not lying in the boundary of σ."""
    if not fan.is_simplicial():
        raise NonSimplicialFan('nef certificates need a simplicial fan')
    certificates = []
    for wall in fan.interior_walls:
        sides = fan.walls[wall]
        if len(sides) != 2:
            raise InvariantViolation('interior wall {} bounds {} cones'.format(wall, len(sides)))
        (left, u), (right, u_prime) = sides
        left_rays = fan.max_cones[left].rays
        right_rays = fan.max_cones[right].rays
        bend = wall_bend(left_rays, fan.rays[u_prime])
        reverse = wall_bend(right_rays, fan.rays[u])
        same_face = None
        if fan.cone_faces is not None:
            same_face = fan.cone_faces[left] == fan.cone_faces[right]
        certificates.append(WallCertificate(
            wall_rays=tuple(fan.rays[i] for i in wall),
            left_cone=left,
            right_cone=right,
            left_extra_ray=fan.rays[u],
            right_extra_ray=fan.rays[u_prime],
            bend=bend,
            reverse_bend=reverse,
            same_face=same_face,
        ))
    logger.debug('%d wall certificates', len(certificates))
    return certificates
