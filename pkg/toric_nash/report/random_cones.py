import logging
from typing import List, Optional, Sequence

import numpy as np
from tqdm.auto import tqdm

from toric_nash.helpers.errors import ToricError
from toric_nash.lattice import triangulate_by_rays
from toric_nash.toric import multiplicity

from .cone_spec import ConeSpec

logger = logging.getLogger(__name__)

__all__ = ['random_cones']

MAX_ATTEMPTS = 10000


def random_cones(
    count: int,
    ranks: Sequence[int] = (2, 3, 4),
    max_coord: int = 8,
    max_rays: int = 5,
    seed: int = 0,
    max_det: Optional[int] = None,
    quiet: bool = True,
) -> List[ConeSpec]:
    """A reproducible corpus of full-dimensional strongly convex cones.

    Rays are sampled in [-max_coord, max_coord]^n; samples spanning a line,
    spanning a proper subspace, or (when max_det is set) with a simplicial
    piece of multiplicity above max_det are rejected.
    """
    rng = np.random.default_rng(seed)
    specs = []
    for i in tqdm(range(count), desc='sampling cones', disable=quiet):
        n = ranks[i % len(ranks)]
        for _ in range(MAX_ATTEMPTS):
            k = int(rng.integers(n, max(n, max_rays) + 1))
            rays = rng.integers(-max_coord, max_coord + 1, size=(k, n))
            rays = [tuple(int(x) for x in r) for r in rays if r.any()]
            if len(rays) < n:
                continue
            spec = ConeSpec('random-{}-{}'.format(seed, i), n, tuple(rays))
            try:
                cone = spec.to_cone()
            except ToricError:
                continue
            if not cone.is_full_dimensional():
                continue
            if max_det is not None and any(multiplicity(p) > max_det for p in triangulate_by_rays(cone)):
                continue
            specs.append(ConeSpec(spec.name, n, tuple(u.coords for u in cone.rays)))
            break
        else:
            raise RuntimeError('no admissible cone of rank {} after {} samples'.format(n, MAX_ATTEMPTS))
    logger.info('generated %d random cones (seed %d)', len(specs), seed)
    return specs
