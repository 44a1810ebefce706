import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from toric_nash.helpers.errors import InvariantViolation
from toric_nash.linalg import LatticeVector, exact_array, exact_dot
from toric_nash.polyhedra import Cone
from toric_nash.toric import SingularLocus, in_sing_locus, is_terminal_cone, singular_locus

from .nash import nash_valuations, terminal_valuations
from .newton import NewtonPolyhedron, newton_polyhedron

logger = logging.getLogger(__name__)

__all__ = ['ValuationReport', 'analyze']


@dataclass(frozen=True)
class ValuationReport:
    cone: Cone
    min_set: Tuple[LatticeVector, ...]
    ter_set: Tuple[LatticeVector, ...]
    singular_faces: SingularLocus
    is_regular_variety: bool
    is_terminal_variety: Optional[bool]
    newton: Optional[NewtonPolyhedron] = field(default=None, compare=False, repr=False)

    @property
    def essential_set(self):
        return self.min_set

    def check(self):
        """Raises InvariantViolation unless Ter ⊆ Min, both inside σ_sing, Min an antichain."""
        c = self.cone
        missing = sorted(set(self.ter_set) - set(self.min_set))
        if missing:
            raise InvariantViolation('terminal valuations {} are not Nash valuations'.format(missing))
        outside = [v for v in self.min_set + self.ter_set if not in_sing_locus(c, v)]
        if outside:
            raise InvariantViolation('valuations {} are not in the singular locus'.format(outside))
        if self.min_set and c.facets:
            values = exact_dot(exact_array([v.coords for v in self.min_set], c.rank), c.facet_array)
            above = (values[:, None, :] - values[None, :, :] >= 0).all(axis=2)
            np.fill_diagonal(above, False)
            if above.any():
                i, j = np.argwhere(above)[0]
                raise InvariantViolation('Nash valuations {} and {} are comparable'.format(
                    self.min_set[j], self.min_set[i]))
        return self


def analyze(c: Cone, with_newton: bool = False) -> ValuationReport:
    """Min(σ), Ter(σ) and the singularity summary of X(σ)."""
    locus = singular_locus(c)
    newton = None
    if locus or with_newton:
        newton = newton_polyhedron(c)
    report = ValuationReport(
        cone=c,
        min_set=tuple(nash_valuations(c)),
        ter_set=tuple(terminal_valuations(c, newton)) if locus else (),
        singular_faces=locus,
        is_regular_variety=not locus,
        is_terminal_variety=is_terminal_cone(c) if c.is_simplicial() else None,
        newton=newton,
    )
    logger.debug('cone %s: |Min| = %d, |Ter| = %d', [u.to_list() for u in c.rays],
                len(report.min_set), len(report.ter_set))
    return report.check()
