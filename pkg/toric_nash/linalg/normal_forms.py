"""Hermite and Smith normal forms, determinants, and lattice saturation.

Matrices are handled as numpy object arrays so that every entry stays an
arbitrary-precision Python int; no operation here ever rounds.
"""
from functools import reduce
from math import gcd
from typing import List, Tuple

import numpy as np

from .vectors import IntMatrix

__all__ = [
    'exgcd',
    'hnf',
    'smith_form',
    'snf_divisors',
    'det',
    'saturation',
]


def exgcd(a: int, b: int) -> np.ndarray:
    """Extended GCD as a unimodular row operation.

    Returns a 2x2 integer matrix M of determinant 1 with
    M @ [a, b] = [gcd(a, b), 0]. When a divides b, M[0, 1] is 0, so a pivot
    that already divides its row is never disturbed.
    """
    M = np.empty((2, 2), dtype=object)
    if a == 0 and b == 0:
        M[:] = [[1, 0], [0, 1]]
        return M
    if a != 0 and b % a == 0:
        q = b // a
        M[:] = [[1, 0], [-q, 1]] if a > 0 else [[-1, 0], [q, -1]]
        return M

    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    g, x0, y0 = old_r, old_x, old_y
    if g < 0:
        g, x0, y0 = -g, -x0, -y0
    M[:] = [[x0, y0], [-b // g, a // g]]
    return M


def inv_2x2_det1(M: np.ndarray) -> np.ndarray:
    """Matrix inverse of a 2x2 matrix with determinant 1."""
    assert M.shape == (2, 2) and (M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] == 1)
    inv = np.empty((2, 2), dtype=object)
    inv[:] = [[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]]
    return inv


def _eye(n):
    E = np.zeros((n, n), dtype=object)
    for i in range(n):
        E[i, i] = 1
    return E


def hnf(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (H, U) with H = U @ A, U unimodular, H in row echelon form with
    positive pivots, entries above each pivot reduced into [0, pivot) and
    zero rows last. The pivot row at each column is the lowest-magnitude
    entry, ties broken by the topmost row, which makes the form canonical.
    """
    m, n = A.shape
    H = [list(row) for row in A.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub_row(target, source, q):
        H[target] = [x - q * y for x, y in zip(H[target], H[source])]
        U[target] = [x - q * y for x, y in zip(U[target], U[source])]

    r = 0
    for col in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if H[i][col] != 0]
            if not live:
                break
            pivot = min(live, key=lambda i: (abs(H[i][col]), i))
            H[r], H[pivot] = H[pivot], H[r]
            U[r], U[pivot] = U[pivot], U[r]
            for i in range(r + 1, m):
                if H[i][col] != 0:
                    sub_row(i, r, H[i][col] // H[r][col])
            if all(H[i][col] == 0 for i in range(r + 1, m)):
                break
        if H[r][col] == 0:
            continue
        if H[r][col] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            sub_row(i, r, H[i][col] // H[r][col])
        r += 1

    H_mat, U_mat = IntMatrix.from_rows(H), IntMatrix.from_rows(U)
    assert (U_mat @ A).rows == H_mat.rows if m and n else True
    assert abs(det(U_mat)) == 1
    return H_mat, U_mat


def smith_form(A: IntMatrix):
    """Diagonalization by unimodular row and column operations.

    Returns (S, D, T, Sinv, Tinv) as numpy object arrays with A == S @ D @ T,
    D diagonal of the same shape as A, and S, T unimodular with the given
    inverses. The diagonal is not normalized to a divisibility chain; use
    snf_divisors for the invariant factors.
    """
    A_arr = A.as_array()
    D = A_arr.copy()
    nr, nc = D.shape
    S, T = _eye(nr), _eye(nc)
    Sinv, Tinv = _eye(nr), _eye(nc)

    def clear_row(i):
        """Clears the i-th row of D with column operations.

        Assumes rows and columns smaller than i are already clear.
        Returns False if the row was already clear.
        """
        if all(D[i, j] == 0 for j in range(i + 1, nc)):
            return False
        for j in range(i + 1, nc):
            M = exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]] @ M
            T[[i, j]] = inv_2x2_det1(M) @ T[[i, j]]
            Tinv[:, [i, j]] = Tinv[:, [i, j]] @ M
        return True

    def clear_col(i):
        """Clears the i-th column of D with row operations."""
        if all(D[j, i] == 0 for j in range(i + 1, nr)):
            return False
        for j in range(i + 1, nr):
            M = exgcd(D[i, i], D[j, i])
            D[[i, j]] = M @ D[[i, j]]
            S[:, [i, j]] = S[:, [i, j]] @ inv_2x2_det1(M)
            Sinv[[i, j]] = M @ Sinv[[i, j]]
        return True

    for i in range(min(nr, nc)):
        clear_col(i)
        while True:
            if not clear_row(i):
                break
            if not clear_col(i):
                break

    if nr and nc:
        assert (S @ D @ T == A_arr).all()
        assert (Tinv @ T == _eye(nc)).all()
        assert (S @ Sinv == _eye(nr)).all()
    return S, D, T, Sinv, Tinv


def _divisibility_chain(values: List[int]) -> List[int]:
    # diag(a, b) is equivalent to diag(gcd(a, b), lcm(a, b))
    d = sorted(abs(v) for v in values)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def snf_divisors(A: IntMatrix) -> List[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of A."""
    if A.nrows == 0 or A.ncols == 0:
        return []
    _, D, _, _, _ = smith_form(A)
    diagonal = [D[i, i] for i in range(min(D.shape)) if D[i, i] != 0]
    return _divisibility_chain(diagonal)


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A.require_square()
    n = A.nrows
    if n == 0:
        return 1
    M = [list(row) for row in A.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def saturation(rows, ambient_rank):
    """Saturated sublattice spanned by the given integer rows.

    Returns (basis, coordinates, equations): basis is an r x n matrix whose
    rows are a Z-basis of span(rows) ∩ Z^n; coordinates is an n x r matrix C
    with x @ C = y whenever x = y @ basis; equations is an n x (n - r) matrix
    whose columns vanish exactly on the span.
    """
    rows = [tuple(r) for r in rows if any(r)]
    if not rows:
        eye = IntMatrix.identity(ambient_rank)
        return IntMatrix(()), IntMatrix(tuple(() for _ in range(ambient_rank))), eye
    _, D, T, _, Tinv = smith_form(IntMatrix.from_rows(rows))
    live = [i for i in range(min(D.shape)) if D[i, i] != 0]
    dead = [i for i in range(ambient_rank) if i not in live]
    basis = IntMatrix.from_array(T[live])
    coordinates = IntMatrix.from_array(Tinv[:, live])
    if dead:
        equations = IntMatrix.from_array(Tinv[:, dead])
    else:
        equations = IntMatrix(tuple(() for _ in range(ambient_rank)))
    return basis, coordinates, equations
