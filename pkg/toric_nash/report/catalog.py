"""Built-in named cones."""
import re
from math import gcd
from typing import List

from toric_nash.helpers.errors import InvalidConeSpec

from .cone_spec import ConeSpec

__all__ = ['FIXED_ENTRIES', 'catalog_entry', 'list_catalog']

FIXED_ENTRIES = {
    # cone over the unit square: the ordinary double point in dimension three
    'odp': ((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)),
    # terminal but singular; (1, 1, 1) is a Nash valuation that is not terminal
    'paper-example': ((1, 0, 0), (0, 1, 0), (1, 1, 2)),
    # the 1/3(1, 1, 1) quotient
    'third-111': ((1, 0, 0), (0, 1, 0), (-1, -1, 3)),
}

LISTED = [
    'regular-2', 'regular-3', 'A1', 'A2', 'A3', 'A4',
    'quotient-5-2', 'quotient-7-3', 'odp', 'paper-example', 'third-111',
]


def _regular(n: int):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def catalog_entry(name: str) -> ConeSpec:
    """Looks up "regular-n", "An", "quotient-r-a" or a fixed entry."""
    if name in FIXED_ENTRIES:
        rays = FIXED_ENTRIES[name]
        return ConeSpec(name, len(rays[0]), rays)
    match = re.fullmatch(r'regular-(\d+)', name)
    if match and int(match.group(1)) >= 1:
        n = int(match.group(1))
        return ConeSpec(name, n, _regular(n))
    match = re.fullmatch(r'A(\d+)', name)
    if match and int(match.group(1)) >= 1:
        n = int(match.group(1))
        return ConeSpec(name, 2, ((1, 0), (1, n + 1)))
    match = re.fullmatch(r'quotient-(\d+)-(\d+)', name)
    if match:
        r, a = int(match.group(1)), int(match.group(2))
        if not 0 < a < r or gcd(r, a) != 1:
            raise InvalidConeSpec('catalog', 'quotient-r-a needs 0 < a < r and gcd(r, a) = 1')
        return ConeSpec(name, 2, ((0, 1), (r, -a)))
    raise InvalidConeSpec('catalog', 'unknown catalog entry {!r}'.format(name))


def list_catalog() -> List[ConeSpec]:
    return [catalog_entry(name) for name in LISTED]
