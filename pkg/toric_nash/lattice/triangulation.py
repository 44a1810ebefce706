"""Placing triangulations of vector configurations.

Vectors are inserted one at a time. A vector outside the current span is
joined to every simplex; a vector inside some simplex triggers a stellar
subdivision of the smallest cell containing it; otherwise it is joined to
every boundary facet it sees (beneath-beyond). Point configurations are
handled by lifting p to (p, 1).
"""
import logging
from collections import Counter
from typing import Dict, List, Sequence, Tuple

from toric_nash.helpers.errors import ZeroVector
from toric_nash.linalg import coefficients, rank
from toric_nash.polyhedra import Cone, cone_from_rays

logger = logging.getLogger(__name__)

__all__ = ['ORDERS', 'insertion_order', 'placing_triangulation', 'triangulate_by_rays']

ORDERS = ('lex', 'reverse')

Simplex = Tuple[int, ...]


def insertion_order(vectors: Sequence[Sequence[int]], order: str = 'lex') -> List[int]:
    if order not in ORDERS:
        raise ValueError('unknown placing order {!r}, expected one of {}'.format(order, ORDERS))
    indices = sorted(range(len(vectors)), key=lambda i: tuple(vectors[i]))
    return indices[::-1] if order == 'reverse' else indices


def _stellar(simplices: List[Simplex], cell: Simplex, new: int) -> List[Simplex]:
    cell_set = set(cell)
    result = []
    for s in simplices:
        if cell_set <= set(s):
            for g in cell:
                result.append(tuple(sorted((set(s) - {g}) | {new})))
        else:
            result.append(s)
    return result


def _beyond(simplices: List[Simplex], alphas: Dict[Simplex, tuple], new: int) -> List[Simplex]:
    facet_count = Counter()
    for s in simplices:
        for j in s:
            facet_count[tuple(x for x in s if x != j)] += 1
    added = []
    for s in simplices:
        for j, a in zip(s, alphas[s]):
            facet = tuple(x for x in s if x != j)
            if a < 0 and facet_count[facet] == 1:
                added.append(tuple(sorted(facet + (new,))))
    return simplices + added


def placing_triangulation(vectors: Sequence[Sequence[int]], order: str = 'lex') -> List[Simplex]:
    """Placing triangulation of cone(vectors), as sorted index tuples.

    Every vector is used as a vertex unless it is a positive multiple of an
    earlier one. The vectors must span a pointed cone.
    """
    vectors = [tuple(v) for v in vectors]
    if any(not any(v) for v in vectors):
        raise ZeroVector('cannot place the zero vector')
    simplices: List[Simplex] = []
    placed: List[int] = []
    for i in insertion_order(vectors, order):
        v = vectors[i]
        if not simplices:
            simplices = [(i,)]
        elif rank([vectors[j] for j in placed] + [v]) > rank([vectors[j] for j in placed]):
            simplices = [tuple(sorted(s + (i,))) for s in simplices]
        else:
            alphas, cell = {}, None
            for s in simplices:
                alpha = coefficients([vectors[j] for j in s], v)
                alphas[s] = alpha
                if all(a >= 0 for a in alpha):
                    cell = tuple(j for j, a in zip(s, alpha) if a > 0)
                    break
            if cell is not None:
                simplices = _stellar(simplices, cell, i)
            else:
                simplices = _beyond(simplices, alphas, i)
        placed.append(i)
    result = sorted(set(simplices))
    logger.debug('placed %d vectors into %d simplices (%s order)', len(vectors), len(result), order)
    return result


def triangulate_by_rays(c: Cone, order: str = 'lex') -> List[Cone]:
    """Simplicial subcones of c spanned by rays of c, covering c."""
    if c.is_simplicial():
        return [c]
    vectors = [u.coords for u in c.rays]
    return [
        cone_from_rays([vectors[j] for j in s], c.rank)
        for s in placing_triangulation(vectors, order)
    ]
