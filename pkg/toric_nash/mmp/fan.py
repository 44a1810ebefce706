import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from toric_nash.lattice import placing_triangulation, polytope_points
from toric_nash.linalg import LatticeVector
from toric_nash.polyhedra import BoundedFace, Cone, dot

logger = logging.getLogger(__name__)

__all__ = ['Fan', 'full_triangulation']

Wall = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Fan:
    """A simplicial subdivision Δ of ``ambient``, given by its maximal cones.

    ``cone_faces`` optionally records, for every maximal cone, the index of
    the compact face of Γ(σ) it is the cone over.
    """

    ambient: Cone
    max_cones: Tuple[Cone, ...]
    rays: Tuple[LatticeVector, ...]
    cone_faces: Optional[Tuple[int, ...]] = field(default=None, repr=False)

    def is_simplicial(self):
        return all(c.is_simplicial() for c in self.max_cones)

    @cached_property
    def cone_ray_indices(self) -> Tuple[Tuple[int, ...], ...]:
        index = {u: i for i, u in enumerate(self.rays)}
        return tuple(tuple(sorted(index[u] for u in c.rays)) for c in self.max_cones)

    @cached_property
    def walls(self) -> Dict[Wall, List[Tuple[int, int]]]:
        """Codimension-one cells of the max cones, each with its (cone, opposite ray) pairs."""
        found = defaultdict(list)
        for k, indices in enumerate(self.cone_ray_indices):
            if len(indices) < 2:
                continue
            for j in indices:
                found[tuple(i for i in indices if i != j)].append((k, j))
        return dict(sorted(found.items()))

    def is_boundary_wall(self, wall: Wall) -> bool:
        """True when the wall lies in a facet of the ambient cone."""
        rays = [self.rays[i].coords for i in wall]
        return any(all(dot(m, u) == 0 for u in rays) for m in self.ambient.facet_rows)

    @property
    def interior_walls(self) -> List[Wall]:
        return [w for w in self.walls if not self.is_boundary_wall(w)]

    def locate_many(self, X: np.ndarray) -> np.ndarray:
        """Row mask of the points of X lying in some maximal cone."""
        mask = np.zeros(X.shape[0], dtype=bool)
        for c in self.max_cones:
            mask |= c.contains_many(X)
        return mask

    def to_dict(self):
        return {
            'rays': [u.to_list() for u in self.rays],
            'max_cones': [list(s) for s in self.cone_ray_indices],
        }


def full_triangulation(face: BoundedFace, order: str = 'lex') -> List[Tuple[LatticeVector, ...]]:
    """Triangulation of a lattice polytope using every lattice point as a vertex."""
    points = polytope_points(face.vertices)
    lifted = [p.coords + (1,) for p in points]
    return [tuple(points[j] for j in s) for s in placing_triangulation(lifted, order)]
