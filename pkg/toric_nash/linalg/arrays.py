"""numpy kernels over exact integers.

Arrays use int64 while every product provably fits, otherwise object dtype
holding Python ints, so results never wrap around.
"""
from typing import Sequence

import numpy as np

__all__ = ['exact_array', 'exact_dot', 'as_tuples']

_INT64_SAFE = 1 << 62


def _magnitude(array: np.ndarray) -> int:
    if array.size == 0:
        return 0
    return int(max(abs(int(array.max())), abs(int(array.min()))))


def exact_array(rows: Sequence[Sequence[int]], ncols: int = None) -> np.ndarray:
    rows = [tuple(r) for r in rows]
    if not rows:
        return np.zeros((0, ncols or 0), dtype=np.int64)
    bound = max((abs(x) for r in rows for x in r), default=0)
    dtype = np.int64 if bound < (1 << 31) else object
    return np.array(rows, dtype=dtype).reshape(len(rows), len(rows[0]))


def exact_dot(X: np.ndarray, A: np.ndarray) -> np.ndarray:
    """X @ A.T without overflow."""
    if X.shape[0] == 0 or A.shape[0] == 0:
        return np.zeros((X.shape[0], A.shape[0]), dtype=np.int64)
    if X.dtype != object and A.dtype != object:
        if _magnitude(X) * _magnitude(A) * max(X.shape[1], 1) < _INT64_SAFE:
            return X @ A.T
    return X.astype(object) @ A.astype(object).T


def as_tuples(X: np.ndarray):
    return [tuple(int(x) for x in row) for row in X]
