"""Dual description of a rational cone.

The cone is first restricted to the saturated sublattice of its linear span,
where it is full-dimensional. Its facets and their ray incidences are then
computed by cddlib in exact rational arithmetic.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

import cdd
import numpy as np

from toric_nash.helpers.errors import RankMismatch
from toric_nash.linalg import IntMatrix, exact_array, exact_dot, integral_primitive, rank, saturation

logger = logging.getLogger(__name__)

__all__ = ['SpanLattice', 'DualDescription', 'dual_description', 'dot']


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class SpanLattice:
    """The saturated lattice span(σ) ∩ N with an explicit basis.

    ``basis`` has one row per basis vector; ``coordinates`` maps an ambient
    point of the span to its coordinates in that basis (x = y @ basis iff
    y = x @ coordinates).
    """

    ambient_rank: int
    basis: IntMatrix
    coordinates: IntMatrix

    @property
    def dim(self):
        return self.basis.nrows

    def restrict(self, v) -> Tuple[int, ...]:
        return tuple(dot(v, col) for col in self.coordinates.columns()) if self.dim else ()

    def embed(self, y) -> Tuple[int, ...]:
        if not self.dim:
            return (0,) * self.ambient_rank
        return tuple(dot(y, col) for col in self.basis.columns())

    def embed_many(self, Y: np.ndarray) -> np.ndarray:
        """Row-wise embed of an array of span coordinates."""
        if not self.dim:
            return np.zeros((Y.shape[0], self.ambient_rank), dtype=np.int64)
        return exact_dot(Y, exact_array(self.basis.columns(), self.dim))

    def pull_back(self, inner_functional) -> Tuple[int, ...]:
        """Ambient functional agreeing with an inner one on the span."""
        return tuple(dot(row, inner_functional) for row in self.coordinates.rows)


@dataclass(frozen=True)
class DualDescription:
    lattice: SpanLattice
    generators: Tuple[Tuple[int, ...], ...]
    equations: Tuple[Tuple[int, ...], ...]
    inner_facets: Tuple[Tuple[int, ...], ...]
    facets: Tuple[Tuple[int, ...], ...]
    incidence: Tuple[FrozenSet[int], ...]

    @property
    def dim(self):
        return self.lattice.dim

    @property
    def pointed(self):
        return self.dim == 0 or rank(self.inner_facets) == self.dim

    def extreme_generators(self) -> List[Tuple[int, ...]]:
        """Generators spanning an extreme ray (valid for pointed cones)."""
        extreme = []
        for j, g in enumerate(self.generators):
            tight = [m for m, on in zip(self.inner_facets, self.incidence) if j in on]
            if rank(tight) == self.dim - 1:
                extreme.append(g)
        return extreme


NUMBER_TYPE = 'fraction'


def _cdd_facets(inner: Sequence[Tuple[int, ...]], dim: int):
    """Inward facet normals of cone(inner) ⊂ R^dim with the generators on each.

    The V-representation gets the origin as its one vertex, so the slack
    row 1 >= 0 that cddlib reports for it is skipped.
    """
    if dim == 0:
        return []
    rows = [[1] + [0] * dim] + [[0] + list(y) for y in inner]
    mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    mat.rep_type = cdd.RepType.GENERATOR
    poly = cdd.Polyhedron(mat)
    ineq = poly.get_inequalities()
    incidence = poly.get_incidence()
    found = {}
    for i in range(ineq.row_size):
        if i in ineq.lin_set:
            continue
        normal = ineq[i][1:]
        if not any(normal):
            continue
        # input row 0 is the origin
        on = frozenset(j - 1 for j in incidence[i] if j > 0)
        found[integral_primitive(normal)] = on
    return sorted(found.items())


def dual_description(generators: Sequence[Sequence[int]], ambient_rank: int) -> DualDescription:
    """H-representation of cone(generators) ⊂ R^ambient_rank.

    Generators are deduplicated up to positive scaling and sorted
    lexicographically, so the output is deterministic.
    """
    gens = sorted({integral_primitive(g) for g in generators if any(g)})
    if any(len(g) != ambient_rank for g in gens):
        raise RankMismatch('generator rank does not match ambient rank {}'.format(ambient_rank))
    basis, coords, eq_matrix = saturation(gens, ambient_rank)
    if basis.nrows == ambient_rank:
        basis = IntMatrix.identity(ambient_rank)
        coords = IntMatrix.identity(ambient_rank)
        equations = ()
    else:
        equations = tuple(sorted(integral_primitive(col) for col in eq_matrix.columns()))
    lattice = SpanLattice(ambient_rank, basis, coords)

    inner = [lattice.restrict(g) for g in gens]
    described = _cdd_facets(inner, lattice.dim)
    inner_facets = tuple(m for m, _ in described)
    incidence = tuple(on for _, on in described)
    facets = tuple(integral_primitive(lattice.pull_back(m)) for m in inner_facets)
    logger.debug('%d generators in rank %d: dim %d, %d facets',
                 len(gens), ambient_rank, lattice.dim, len(facets))
    return DualDescription(lattice, tuple(gens), equations, inner_facets, facets, incidence)
