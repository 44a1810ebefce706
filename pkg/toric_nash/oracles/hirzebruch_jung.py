"""Closed-form compact boundary of a two-dimensional cone.

Walking from one primitive generator to the other, consecutive boundary
points v_{i-1}, v_i, v_{i+1} satisfy v_{i-1} + v_{i+1} = b_i v_i, where the
b_i >= 2 are the Hirzebruch-Jung continued fraction of the cone.
"""
import logging
from typing import List, Tuple

from toric_nash.helpers.errors import NotRank2
from toric_nash.linalg import LatticeVector, exgcd
from toric_nash.polyhedra import Cone

logger = logging.getLogger(__name__)

__all__ = ['hj_walk', 'hj_boundary', 'hj_continued_fraction']


def _det(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def hj_walk(c: Cone) -> Tuple[List[LatticeVector], List[int]]:
    """(boundary points strictly between the generators, continued fraction)."""
    if c.rank != 2:
        raise NotRank2('the continued-fraction walk needs a rank-2 cone, got rank {}'.format(c.rank))
    if len(c.rays) < 2:
        return [], []
    u0, u1 = c.rays
    if _det(u0, u1) < 0:
        u0, u1 = u1, u0
    M = exgcd(u0[0], u0[1])
    x0, y0 = int(M[0, 0]), int(M[0, 1])
    w0 = LatticeVector((-y0, x0))
    assert _det(u0, w0) == 1

    # first lattice point of σ on the line det(u0, .) = 1
    k = _ceil_div(-_det(w0, u1), _det(u0, u1))
    previous, current = u0, w0 + k * u0
    points, fraction = [], []
    while _det(current, u1) != 0:
        points.append(current)
        b = _ceil_div(_det(previous, u1), _det(current, u1))
        fraction.append(b)
        previous, current = current, b * current - previous
    assert current == u1
    return sorted(points), fraction


def hj_boundary(c: Cone) -> List[LatticeVector]:
    """Lattice points on the compact boundary of Γ(σ) other than the generators."""
    return hj_walk(c)[0]


def hj_continued_fraction(c: Cone) -> List[int]:
    return hj_walk(c)[1]
