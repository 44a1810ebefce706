import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Tuple

import numpy as np

from toric_nash.helpers.errors import NotSquare, RankMismatch, ZeroVector

__all__ = [
    'LatticeVector',
    'DualVector',
    'IntMatrix',
    'as_lattice_vector',
    'primitive',
    'content',
    'integral_primitive',
]


def _as_int(value):
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ValueError('non-integral lattice coordinate {}'.format(value))
        return value.numerator
    return operator.index(value)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(operator.index(value))


@dataclass(frozen=True, order=True)
class LatticeVector:
    """A point of the lattice N = Z^n. Ordering is lexicographic on coords."""

    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(_as_int(c) for c in self.coords))

    @classmethod
    def of(cls, *coords):
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)

    @property
    def rank(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def _check(self, other):
        if len(other) != len(self.coords):
            raise RankMismatch(
                'rank {} does not match rank {}'.format(len(other), len(self.coords))
            )

    def __add__(self, other):
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other)))

    def __sub__(self, other):
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other)))

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        return LatticeVector(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def to_list(self):
        return list(self.coords)

    def __repr__(self):
        return 'LatticeVector{}'.format(self.coords)


def as_lattice_vector(v) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return v
    return LatticeVector(tuple(v))


@dataclass(frozen=True)
class DualVector:
    """A functional on N with exact rational coordinates (an element of M_Q)."""

    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(_as_fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *coords):
        return cls(tuple(coords))

    @property
    def rank(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def evaluate(self, v) -> Fraction:
        """Exact pairing <m, v>."""
        if len(v) != len(self.coords):
            raise RankMismatch(
                'rank {} does not match rank {}'.format(len(v), len(self.coords))
            )
        return sum((m * x for m, x in zip(self.coords, v)), Fraction(0))

    __call__ = evaluate

    def __add__(self, other):
        return DualVector(tuple(a + b for a, b in zip(self.coords, other)))

    def scaled(self, factor):
        return DualVector(tuple(factor * a for a in self.coords))

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coords)

    def integral_coords(self) -> Tuple[int, ...]:
        """Coordinates as ints; only valid for integral functionals."""
        assert self.is_integral(), self
        return tuple(c.numerator for c in self.coords)

    def primitive(self) -> 'DualVector':
        """Positive multiple with coprime integer coordinates."""
        return DualVector(integral_primitive(self.coords))

    def __repr__(self):
        return 'DualVector({})'.format(', '.join(str(c) for c in self.coords))


def content(coords: Iterable[int]) -> int:
    return reduce(gcd, (abs(c) for c in coords), 0)


def primitive(v) -> LatticeVector:
    """Divides v by the gcd of its coordinates, keeping its direction."""
    v = as_lattice_vector(v)
    g = content(v.coords)
    if g == 0:
        raise ZeroVector('the zero vector spans no ray')
    return LatticeVector(tuple(c // g for c in v.coords))


def integral_primitive(coords: Sequence) -> Tuple[int, ...]:
    """Clears denominators of a rational vector and divides out the content."""
    fracs = [_as_fraction(c) for c in coords]
    denom = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fracs), 1)
    ints = [int(f * denom) for f in fracs]
    g = content(ints)
    if g == 0:
        raise ZeroVector('the zero functional has no primitive multiple')
    return tuple(c // g for c in ints)


@dataclass(frozen=True)
class IntMatrix:
    """A rectangular matrix of arbitrary-precision integers, stored by rows."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x) for x in row) for row in self.rows)
        if len({len(row) for row in rows}) > 1:
            raise ValueError('matrix rows have different lengths')
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls(())
        return cls(tuple(zip(*columns)))

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_array(cls, array):
        return cls(tuple(tuple(int(x) for x in row) for row in array))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self):
        return self.nrows == self.ncols

    def require_square(self):
        if not self.is_square():
            raise NotSquare('expected a square matrix, got {}x{}'.format(*self.shape))

    def columns(self):
        return tuple(zip(*self.rows))

    def transpose(self):
        return IntMatrix(self.columns())

    def as_array(self):
        """numpy object array, so entries stay Python ints."""
        array = np.empty(self.shape, dtype=object)
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                array[i, j] = x
        return array

    def __matmul__(self, other):
        return IntMatrix.from_array(self.as_array() @ other.as_array())

    def __repr__(self):
        return 'IntMatrix({})'.format([list(r) for r in self.rows])
