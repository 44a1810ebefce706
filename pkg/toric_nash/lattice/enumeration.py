"""Lattice points of polytopes and of the fundamental boxes of simplicial cones."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor, prod
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from toric_nash.linalg import IntMatrix, LatticeVector, as_tuples, det, exact_array, exact_dot, smith_form, solve_rational
from toric_nash.polyhedra import minkowski_hull

logger = logging.getLogger(__name__)

__all__ = [
    'iter_grid',
    'polytope_points',
    'HalfOpenBox',
    'box_points',
    'unique_rows',
    'integer_adjugate',
    'simplex_levels',
]

GRID_CHUNK = 1 << 18


def iter_grid(lower: Sequence[int], upper: Sequence[int], chunk: int = GRID_CHUNK) -> Iterator[np.ndarray]:
    """Integer points of the box prod [lower_i, upper_i] in lexicographic order, in blocks."""
    sizes = [u - l + 1 for l, u in zip(lower, upper)]
    if any(s <= 0 for s in sizes):
        return
    if not sizes:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    if prod(sizes) <= chunk or len(sizes) == 1:
        axes = [np.arange(l, u + 1, dtype=np.int64) for l, u in zip(lower, upper)]
        yield np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, len(sizes))
        return
    for x0 in range(lower[0], upper[0] + 1):
        for block in iter_grid(lower[1:], upper[1:], chunk):
            head = np.full((block.shape[0], 1), x0, dtype=np.int64)
            yield np.hstack([head, block])


def polytope_points(vertices: Sequence) -> List[LatticeVector]:
    """All lattice points of conv(vertices), in lexicographic order."""
    points = [tuple(Fraction(x) for x in v) for v in vertices]
    n = len(points[0])
    lower = [ceil(min(p[i] for p in points)) for i in range(n)]
    upper = [floor(max(p[i] for p in points)) for i in range(n)]
    hull = minkowski_hull(points, [])
    # normals are integral with integral offsets, since the hull comes from a lattice cone
    normals = exact_array([m.integral_coords() for m, _ in hull.facets], n)
    offsets = np.array([int(c) for _, c in hull.facets], dtype=object)
    eq_normals = exact_array([e.integral_coords() for e, _ in hull.equations], n)
    eq_values = np.array([int(c) for _, c in hull.equations], dtype=object)

    found = []
    for block in iter_grid(lower, upper):
        mask = np.ones(block.shape[0], dtype=bool)
        if len(offsets):
            mask &= (exact_dot(block, normals) >= offsets).all(axis=1)
        if len(eq_values):
            mask &= (exact_dot(block, eq_normals) == eq_values).all(axis=1)
        found.extend(LatticeVector(tuple(int(x) for x in row)) for row in block[mask])
    return found


def integer_adjugate(U: Sequence[Sequence[int]]) -> Tuple[List[List[int]], int]:
    """(A, d) with U @ A = d * I for a square nonsingular integer matrix U (by rows)."""
    M = IntMatrix.from_rows(U)
    d = det(M)
    n = M.nrows
    columns = []
    for k in range(n):
        unit = tuple(int(i == k) for i in range(n))
        x = solve_rational(M, unit)
        columns.append([int(xi * d) for xi in x])
    return [list(row) for row in zip(*columns)], d


@dataclass(frozen=True)
class HalfOpenBox:
    """The parallelepiped {sum λ_i u_i} spanned by independent base rays.

    ``include_zero`` / ``include_one`` say whether λ_i = 0 / λ_i = 1 are
    admitted for every coordinate.
    """

    base_rays: Tuple[Tuple[int, ...], ...]
    include_zero: bool = True
    include_one: bool = True

    @property
    def rank(self):
        return len(self.base_rays[0]) if self.base_rays else 0


def _coset_representatives(U: Sequence[Sequence[int]]) -> np.ndarray:
    """One point of Z^k per coset of the row lattice of U."""
    _, D, T, _, _ = smith_form(IntMatrix.from_rows(U))
    k = len(U)
    orders = [abs(int(D[i, i])) for i in range(k)]
    reps = np.vstack(list(iter_grid([0] * k, [d - 1 for d in orders])))
    return exact_dot(reps, exact_array([[int(x) for x in col] for col in T.T], k))


def unique_rows(X: np.ndarray) -> np.ndarray:
    """Distinct rows of X in lexicographic order."""
    if X.dtype != object:
        return np.unique(X, axis=0)
    return exact_array(sorted(set(as_tuples(X))), X.shape[1])


def box_points(box: HalfOpenBox) -> np.ndarray:
    """Lattice points of the box, as an integer array in lexicographic order.

    The base rays must be a basis of Q^k for k their common length. Each
    coset of the ray lattice meets the box [0, 1)^k exactly once, so the
    points are found by reducing one representative per coset; points with
    some λ_j = 0 are then shifted by the corresponding rays as the box's
    openness requires.
    """
    U = [list(u) for u in box.base_rays]
    k = len(U)
    A, d = integer_adjugate(U)
    sign = 1 if d > 0 else -1
    A_arr = exact_array([[sign * x for x in row] for row in zip(*A)], k)
    U_arr = exact_array(U, k)
    D = abs(d)

    X = _coset_representatives(U)
    lam = exact_dot(X, A_arr)  # D * λ
    q = lam // D
    X = X - exact_dot(q, U_arr.T)
    zero = (lam - q * D) == 0

    if box.include_zero and box.include_one:
        blocks = []
        for size in range(k + 1):
            for J in combinations(range(k), size):
                J = list(J)
                on = zero[:, J].all(axis=1)
                blocks.append(X[on] + U_arr[J].sum(axis=0))
    elif box.include_zero:
        blocks = [X]
    elif box.include_one:
        blocks = [X + exact_dot(zero.astype(np.int64), U_arr.T)]
    else:
        blocks = [X[~zero.any(axis=1)]]
    return unique_rows(np.vstack(blocks))


def simplex_levels(generators: Sequence[Sequence[int]]) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """Lattice points of the simplex conv(0, u_1, ..., u_k) with their level sum λ_i.

    The generators must be a basis of Q^k; the level is the value of the
    functional that is 1 on every generator.
    """
    U = [list(u) for u in generators]
    k = len(U)
    A, d = integer_adjugate(U)
    sign = 1 if d > 0 else -1
    A_arr = np.array([[sign * x for x in row] for row in zip(*A)], dtype=object).reshape(k, k)
    D = abs(d)
    points = box_points(HalfOpenBox(tuple(tuple(u) for u in U)))
    found = []
    for row, lam in zip(points, exact_dot(points, A_arr)):
        total = sum(int(x) for x in lam)
        if total <= D:
            found.append((tuple(int(x) for x in row), Fraction(total, D)))
    return found
