import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from toric_nash.linalg import LatticeVector, as_tuples, exact_array, exact_dot
from toric_nash.polyhedra import Cone, Face

from .enumeration import HalfOpenBox, box_points, unique_rows
from .triangulation import triangulate_by_rays

logger = logging.getLogger(__name__)

__all__ = ['HilbertBasis', 'hilbert_basis', 'interior_box_points', 'closed_box_points', 'minimal_elements']


@dataclass(frozen=True)
class HilbertBasis:
    cone: Cone = field(compare=False, repr=False)
    elements: Tuple[LatticeVector, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, v):
        return LatticeVector(tuple(v)) in self.elements


def closed_box_points(c: Cone) -> np.ndarray:
    """Union of the closed fundamental boxes over a triangulation of c by rays.

    Points are returned in the coordinates of span(c) ∩ N, deduplicated.
    """
    if c.is_zero():
        return np.zeros((1, 0), dtype=np.int64)
    blocks = []
    for piece in triangulate_by_rays(c):
        base = tuple(c.restrict(u) for u in piece.rays)
        blocks.append(box_points(HalfOpenBox(base)))
    return unique_rows(np.vstack(blocks))


COMPARE_CHUNK = 1 << 22


def _dominated(candidates: np.ndarray, minimal: np.ndarray) -> np.ndarray:
    """Row mask of candidates lying above some row of minimal."""
    hit = np.zeros(candidates.shape[0], dtype=bool)
    if minimal.shape[0] == 0:
        return hit
    step = max(1, COMPARE_CHUNK // (minimal.shape[0] * max(minimal.shape[1], 1)))
    for lo in range(0, candidates.shape[0], step):
        block = candidates[lo:lo + step]
        hit[lo:lo + step] = ((block[:, None, :] - minimal[None, :, :]) >= 0).all(axis=2).any(axis=1)
    return hit


def minimal_elements(points: np.ndarray, order_normals: np.ndarray) -> np.ndarray:
    """Row mask of the points not dominated by another row.

    w dominates v when v - w lies in the pointed cone {x : N x >= 0}; rows
    are assumed pairwise distinct and inside that cone's span. The sum of
    the normals strictly increases along the order, so two points of equal
    height never compare: points are taken one height bucket at a time and
    each bucket is tested against the minimal points of lower height.
    """
    values = exact_dot(points, order_normals)
    heights = values.sum(axis=1) if values.shape[1] else np.zeros(points.shape[0], dtype=np.int64)
    keep = np.zeros(points.shape[0], dtype=bool)
    if points.shape[0] == 0:
        return keep
    order = np.argsort(heights, kind='stable')
    ordered = heights[order]
    starts = [0] + list(np.flatnonzero(ordered[1:] != ordered[:-1]) + 1) + [len(order)]
    for lo, hi in zip(starts[:-1], starts[1:]):
        bucket = order[lo:hi]
        fresh = bucket[~_dominated(values[bucket], values[keep])]
        keep[fresh] = True
    return keep


def hilbert_basis(c: Cone) -> HilbertBasis:
    """Minimal generating set of the semigroup c ∩ N."""
    if c.is_zero():
        return HilbertBasis(c, ())
    inner = closed_box_points(c)
    inner = inner[np.any(inner != 0, axis=1)]
    keep = minimal_elements(inner, exact_array(c.inner_facets, c.dim))
    elements = sorted(LatticeVector(x) for x in as_tuples(c.lattice.embed_many(inner[keep])))
    logger.debug('hilbert basis of %d elements from %d box points', len(elements), inner.shape[0])
    return HilbertBasis(c, tuple(elements))


def interior_box_points(f: Face) -> List[LatticeVector]:
    """Closed-box lattice points of the pieces of f lying in the relative interior of f."""
    if f.is_zero():
        return []
    tau = f.cone
    inner = closed_box_points(tau)
    ambient = tau.lattice.embed_many(inner)
    mask = f.relative_interior_mask(ambient)
    return sorted(LatticeVector(row) for row in as_tuples(ambient[mask]))
