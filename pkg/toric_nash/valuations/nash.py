"""Nash, essential and terminal valuations over an affine toric variety.

A valuation is a lattice point v of σ_sing; v <=_σ w when w ∈ v + σ.
Minimal points of σ_sing ∩ N lie in the fundamental boxes of the singular
faces: subtracting a generator with box coordinate above 1 keeps a point
in the relative interior of its face while staying below it.
"""
import logging
from typing import List

from toric_nash.helpers.errors import NotInCone
from toric_nash.lattice import interior_box_points, minimal_elements
from toric_nash.linalg import LatticeVector, exact_array
from toric_nash.polyhedra import Cone
from toric_nash.toric import in_sing_locus, singular_locus

from .newton import NewtonPolyhedron, newton_polyhedron

logger = logging.getLogger(__name__)

__all__ = ['leq_sigma', 'nash_valuations', 'essential_valuations', 'terminal_valuations']


def leq_sigma(c: Cone, v, w) -> bool:
    """v <=_σ w, i.e. w - v ∈ σ."""
    for point in (v, w):
        if not c.contains(point):
            raise NotInCone('{} is not in the cone'.format(tuple(point)))
    return c.contains(tuple(b - a for a, b in zip(v, w)))


def nash_valuations(c: Cone) -> List[LatticeVector]:
    """Min(σ): the <=_σ-minimal lattice points of σ_sing."""
    locus = singular_locus(c)
    if not locus:
        return []
    candidates = sorted({v for face in locus for v in interior_box_points(face)})
    X = exact_array([v.coords for v in candidates], c.rank)
    keep = minimal_elements(X, c.facet_array)
    found = [v for v, k in zip(candidates, keep) if k]
    logger.debug('%d Nash valuations from %d candidates', len(found), len(candidates))
    return found


def essential_valuations(c: Cone) -> List[LatticeVector]:
    """Same set as nash_valuations for toric varieties."""
    return nash_valuations(c)


def terminal_valuations(c: Cone, newton: NewtonPolyhedron = None) -> List[LatticeVector]:
    """Ter(σ): lattice points of ∂_cΓ(σ) lying in σ_sing."""
    if not singular_locus(c):
        return []
    newton = newton or newton_polyhedron(c)
    return [v for v in newton.boundary_points if in_sing_locus(c, v)]
