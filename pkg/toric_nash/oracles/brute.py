"""Brute-force reference sets, computed literally from the definitions.

Nothing here reuses the triangulation, box or hull machinery of the main
path; only exact linear algebra and cone membership are shared.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import List, Sequence

import numpy as np

from toric_nash.linalg import DualVector, IntMatrix, LatticeVector, exact_dot, rank, snf_divisors
from toric_nash.polyhedra import Cone, dot

logger = logging.getLogger(__name__)

__all__ = ['HeightSlab', 'brute_min', 'brute_hilbert', 'coverage_gaps', 'cone_points_in_box']


@dataclass(frozen=True)
class HeightSlab:
    """σ ∩ {ℓ <= bound} for a functional ℓ positive on σ minus 0."""

    cone: Cone
    functional: DualVector
    bound: Fraction

    def __post_init__(self):
        assert all(self.functional(u) > 0 for u in self.cone.rays)

    @classmethod
    def of(cls, cone: Cone, bound) -> 'HeightSlab':
        return cls(cone, cone.height, Fraction(bound))

    def bounding_box(self):
        corners = [[Fraction(0)] * self.cone.rank]
        corners += [[self.bound * x / self.functional(u) for x in u] for u in self.cone.rays]
        n = self.cone.rank
        return ([floor(min(p[i] for p in corners)) for i in range(n)],
                [ceil(max(p[i] for p in corners)) for i in range(n)])

    def points(self) -> np.ndarray:
        lower, upper = self.bounding_box()
        X = _grid(lower, upper)
        X = X[self.cone.contains_many(X) & np.any(X != 0, axis=1)]
        heights = exact_dot(X, np.array([self.functional.integral_coords()], dtype=object))[:, 0]
        return X[np.array([h <= self.bound for h in heights], dtype=bool)]


def _grid(lower: Sequence[int], upper: Sequence[int]) -> np.ndarray:
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lower, upper)]
    return np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, len(axes))


def cone_points_in_box(c: Cone, bound: int) -> np.ndarray:
    """Nonzero lattice points of c in [-bound, bound]^n."""
    X = _grid([-bound] * c.rank, [bound] * c.rank)
    return X[c.contains_many(X) & np.any(X != 0, axis=1)]


def _is_singular_face(c: Cone, tight: Sequence[int]) -> bool:
    rays = [u.coords for u in c.rays if all(dot(c.facet_rows[i], u) == 0 for i in tight)]
    if not rays:
        return False
    if len(rays) != rank(rays):
        return True
    return any(d != 1 for d in snf_divisors(IntMatrix.from_rows(rays)))


def _singular_mask(c: Cone, X: np.ndarray) -> np.ndarray:
    """Row mask of points whose carrier face is not a regular cone."""
    if not c.facets or X.shape[0] == 0:
        return np.zeros(X.shape[0], dtype=bool)
    zero = np.asarray(exact_dot(X, c.facet_array) == 0, dtype=bool)
    patterns, inverse = np.unique(zero, axis=0, return_inverse=True)
    singular = np.array([_is_singular_face(c, np.flatnonzero(p)) for p in patterns], dtype=bool)
    return singular[np.ravel(inverse)]


def _undominated(c: Cone, X: np.ndarray) -> np.ndarray:
    values = exact_dot(X, c.facet_array)
    keep = np.ones(X.shape[0], dtype=bool)
    for a in range(X.shape[0]):
        below = (values[a] - values >= 0).all(axis=1)
        below[a] = False
        keep[a] = not below.any()
    return keep


def _as_vectors(X: np.ndarray) -> List[LatticeVector]:
    return sorted(LatticeVector(tuple(int(x) for x in row)) for row in X)


def brute_min(c: Cone, H) -> List[LatticeVector]:
    """Minimal singular lattice points of the slab σ ∩ {ℓ <= H}."""
    if c.is_zero():
        return []
    slab = HeightSlab.of(c, H)
    X = slab.points()
    X = X[_singular_mask(c, X)]
    found = _as_vectors(X[_undominated(c, X)])
    logger.debug('brute force: %d singular points below height %s, %d minimal', X.shape[0], H, len(found))
    return found


def brute_hilbert(c: Cone, B: int) -> List[LatticeVector]:
    """Points of σ ∩ [-B, B]^n that are not another box point plus a nonzero point of σ."""
    if c.is_zero():
        return []
    X = cone_points_in_box(c, B)
    return _as_vectors(X[_undominated(c, X)])


def coverage_gaps(c: Cone, min_set: Sequence, bound: int) -> List[LatticeVector]:
    """Singular lattice points in [-bound, bound]^n lying above no element of min_set."""
    if c.is_zero():
        return []
    X = cone_points_in_box(c, bound)
    X = X[_singular_mask(c, X)]
    if not min_set:
        return _as_vectors(X)
    values = exact_dot(X, c.facet_array)
    mins = exact_dot(np.array([tuple(v) for v in min_set], dtype=object), c.facet_array)
    covered = np.zeros(X.shape[0], dtype=bool)
    for row in mins:
        covered |= np.array((values - row >= 0).all(axis=1), dtype=bool)
    return _as_vectors(X[~covered])
