import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from toric_nash.helpers.errors import EmptyInput, NotInCone, NotStronglyConvex, RankMismatch, ZeroVector
from toric_nash.linalg import DualVector, LatticeVector, exact_array, exact_dot, primitive, rank

from .double_description import DualDescription, SpanLattice, dot, dual_description

logger = logging.getLogger(__name__)

__all__ = ['Cone', 'Face', 'cone_from_rays', 'faces', 'contains', 'carrier_face', 'height_functional']


@dataclass(frozen=True, eq=False)
class Cone:
    """A strongly convex rational polyhedral cone σ ⊂ N_R.

    ``rays`` are the primitive extreme generators in lexicographic order and
    ``facets`` the primitive inward facet normals, so that
    σ = {v : <m, v> >= 0 for m in facets, <e, v> = 0 for e in equations}.
    """

    rank: int
    rays: Tuple[LatticeVector, ...]
    facets: Tuple[DualVector, ...]
    equations: Tuple[DualVector, ...]
    lattice: SpanLattice = field(repr=False)
    inner_facets: Tuple[Tuple[int, ...], ...] = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.rank == other.rank and self.rays == other.rays

    def __hash__(self):
        return hash((self.rank, self.rays))

    @property
    def dim(self):
        return self.lattice.dim

    def is_full_dimensional(self):
        return self.dim == self.rank

    def is_simplicial(self):
        return len(self.rays) == self.dim

    def is_zero(self):
        return not self.rays

    @cached_property
    def facet_rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(m.integral_coords() for m in self.facets)

    @cached_property
    def equation_rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(e.integral_coords() for e in self.equations)

    @cached_property
    def facet_array(self) -> np.ndarray:
        return exact_array(self.facet_rows, self.rank)

    @cached_property
    def equation_array(self) -> np.ndarray:
        return exact_array(self.equation_rows, self.rank)

    def _check_rank(self, v):
        if len(v) != self.rank:
            raise RankMismatch('point of rank {} for a cone of rank {}'.format(len(v), self.rank))

    def facet_values(self, v) -> Tuple[int, ...]:
        self._check_rank(v)
        return tuple(dot(m, v) for m in self.facet_rows)

    def in_span(self, v) -> bool:
        self._check_rank(v)
        return all(dot(e, v) == 0 for e in self.equation_rows)

    def contains(self, v) -> bool:
        return self.in_span(v) and all(x >= 0 for x in self.facet_values(v))

    def contains_many(self, X: np.ndarray) -> np.ndarray:
        """Row mask of the points of X lying in σ."""
        mask = np.ones(X.shape[0], dtype=bool)
        if self.equations:
            mask &= (exact_dot(X, self.equation_array) == 0).all(axis=1)
        if self.facets:
            mask &= (exact_dot(X, self.facet_array) >= 0).all(axis=1)
        return mask

    @cached_property
    def ray_facet_incidence(self) -> Tuple[FrozenSet[int], ...]:
        """For each facet, the indices of the rays lying on it."""
        return tuple(
            frozenset(j for j, u in enumerate(self.rays) if dot(m, u) == 0)
            for m in self.facet_rows
        )

    def _face(self, ray_indices: FrozenSet[int]) -> 'Face':
        tight = frozenset(i for i, z in enumerate(self.ray_facet_incidence) if ray_indices <= z)
        rays = tuple(self.rays[j] for j in sorted(ray_indices))
        return Face(self, tight, rays, rank(rays) if rays else 0)

    @cached_property
    def face_lattice(self) -> Tuple['Face', ...]:
        top = frozenset(range(len(self.rays)))
        seen = {top: self._face(top)}
        queue = deque([top])
        while queue:
            indices = queue.popleft()
            current = seen[indices]
            for i, zeros in enumerate(self.ray_facet_incidence):
                if i in current.tight_facets:
                    continue
                sub = indices & zeros
                if sub not in seen:
                    seen[sub] = self._face(sub)
                    queue.append(sub)
        return tuple(sorted(seen.values(), key=lambda f: (f.dim, f.ray_indices)))

    def _closure(self, tight) -> FrozenSet[int]:
        on_face = frozenset(range(len(self.rays)))
        for i in tight:
            on_face &= self.ray_facet_incidence[i]
        return on_face

    def face_spanned_by(self, rays: Sequence) -> 'Face':
        """The smallest face containing the given rays of σ."""
        indices = frozenset(self.rays.index(as_ray(u)) for u in rays)
        tight = [i for i, z in enumerate(self.ray_facet_incidence) if indices <= z]
        return self._face(self._closure(tight))

    def carrier_face(self, v) -> 'Face':
        if not self.contains(v):
            raise NotInCone('{} is not in the cone'.format(tuple(v)))
        values = self.facet_values(v)
        return self._face(self._closure(i for i, x in enumerate(values) if x == 0))

    @cached_property
    def height(self) -> DualVector:
        """Sum of the primitive facet normals; strictly positive on σ minus 0."""
        total = [0] * self.rank
        for m in self.facet_rows:
            total = [a + b for a, b in zip(total, m)]
        return DualVector(tuple(total))

    def height_of(self, v) -> int:
        return dot(self.height.integral_coords(), v)

    def restrict(self, v) -> Tuple[int, ...]:
        return self.lattice.restrict(v)

    def to_dict(self):
        return {'lattice_rank': self.rank, 'rays': [u.to_list() for u in self.rays]}


@dataclass(frozen=True)
class Face:
    """A face τ of a cone, given by the parent facets tight on it."""

    parent: Cone = field(compare=False, repr=False)
    tight_facets: FrozenSet[int]
    rays: Tuple[LatticeVector, ...]
    dim: int

    @property
    def ray_indices(self) -> Tuple[int, ...]:
        return tuple(self.parent.rays.index(u) for u in self.rays)

    def is_zero(self):
        return self.dim == 0

    def is_simplicial(self):
        return len(self.rays) == self.dim

    @cached_property
    def cone(self) -> Cone:
        return cone_from_rays(self.rays, self.parent.rank)

    def contains(self, v) -> bool:
        return self.parent.contains(v) and all(
            dot(self.parent.facet_rows[i], v) == 0 for i in self.tight_facets
        )

    def relative_interior_contains(self, v) -> bool:
        if not self.parent.contains(v):
            return False
        values = self.parent.facet_values(v)
        return all((x == 0) == (i in self.tight_facets) for i, x in enumerate(values))

    def relative_interior_mask(self, X: np.ndarray) -> np.ndarray:
        parent = self.parent
        mask = parent.contains_many(X)
        if parent.facets:
            values = exact_dot(X, parent.facet_array)
            pattern = np.array([i in self.tight_facets for i in range(len(parent.facets))])
            mask &= ((values == 0) == pattern).all(axis=1)
        return mask


def as_ray(u) -> LatticeVector:
    return primitive(u)


def cone_from_rays(rays: Sequence, rank: int) -> Cone:
    """Builds σ = cone(rays) and its dual description.

    An empty ray list gives the zero cone.
    """
    if rank < 1:
        raise EmptyInput('lattice rank must be positive, got {}'.format(rank))
    vectors = [LatticeVector(tuple(u)) for u in rays]
    for u in vectors:
        if len(u) != rank:
            raise RankMismatch('ray {} does not have rank {}'.format(u.coords, rank))
        if u.is_zero():
            raise ZeroVector('a cone generator must be nonzero')
    dd: DualDescription = dual_description([u.coords for u in vectors], rank)
    if not dd.pointed:
        raise NotStronglyConvex('rays {} positively span a line'.format([u.coords for u in vectors]))
    extreme = tuple(LatticeVector(g) for g in sorted(dd.extreme_generators()))
    cone = Cone(
        rank=rank,
        rays=extreme,
        facets=tuple(DualVector(m) for m in dd.facets),
        equations=tuple(DualVector(e) for e in dd.equations),
        lattice=dd.lattice,
        inner_facets=dd.inner_facets,
    )
    assert all(cone.contains(u) for u in cone.rays)
    return cone


def faces(c: Cone) -> List[Face]:
    """The face lattice of c, ordered by dimension then ray indices."""
    return list(c.face_lattice)


def contains(c: Cone, v) -> bool:
    return c.contains(v)


def carrier_face(c: Cone, v) -> Face:
    return c.carrier_face(v)


def height_functional(c: Cone) -> DualVector:
    return c.height
