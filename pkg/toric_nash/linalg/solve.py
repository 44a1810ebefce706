from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from toric_nash.helpers.errors import DependentColumns, RankMismatch

from .vectors import IntMatrix, integral_primitive

__all__ = [
    'row_reduce',
    'rank',
    'nullspace',
    'solve_rational',
    'coefficients',
]


def row_reduce(rows: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        p = M[r][col]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Tuple[int, ...]]:
    """Primitive integer basis of {x : row . x = 0 for every row}."""
    reduced, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(integral_primitive(x))
    return basis


def solve_rational(A: IntMatrix, b) -> Optional[Tuple[Fraction, ...]]:
    """Exact solution x of A @ x = b, or None when the system is inconsistent.

    Raises DependentColumns when the columns of A are linearly dependent,
    since the solution would not be unique.
    """
    b = tuple(b)
    if len(b) != A.nrows:
        raise RankMismatch('right-hand side has {} entries for {} rows'.format(len(b), A.nrows))
    k = A.ncols
    augmented = [list(row) + [rhs] for row, rhs in zip(A.rows, b)]
    reduced, pivots = row_reduce(augmented)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise DependentColumns('columns of a {}x{} matrix are dependent'.format(*A.shape))
    x = [Fraction(0)] * k
    for row, p in zip(reduced, pivots):
        x[p] = row[k]
    x = tuple(x)
    assert all(sum(a * xi for a, xi in zip(row, x)) == rhs for row, rhs in zip(A.rows, b))
    return x


def coefficients(vectors: Sequence[Sequence[int]], target) -> Optional[Tuple[Fraction, ...]]:
    """Coordinates of target in the (independent) vectors, or None if outside their span."""
    if not vectors:
        return () if not any(target) else None
    return solve_rational(IntMatrix.from_columns(vectors), target)
