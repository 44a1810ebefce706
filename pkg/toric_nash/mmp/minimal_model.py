"""The toric minimal model over X(σ).

Δ is the fan of cones over a full triangulation of the compact faces of
Γ(σ). Its rays are the lattice points of ∂_cΓ(σ), every maximal cone is
terminal because the triangulation is full, and K is relatively nef because
Γ(σ) is convex.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from toric_nash.lattice import iter_grid
from toric_nash.linalg import LatticeVector
from toric_nash.polyhedra import Cone, cone_from_rays, dot
from toric_nash.toric import in_sing_locus, is_terminal_cone
from toric_nash.valuations import NewtonPolyhedron, newton_polyhedron, terminal_valuations

from .certificates import WallCertificate, nef_certificate
from .fan import Fan, full_triangulation

logger = logging.getLogger(__name__)

__all__ = [
    'MinimalModelResult',
    'minimal_model_fan',
    'bend_signature',
    'ModelVerification',
    'verify_minimal_model',
]

SUPPORT_SAMPLE_BOUND = 4


@dataclass(frozen=True)
class MinimalModelResult:
    fan: Fan
    certificates: Tuple[WallCertificate, ...]
    exceptional_rays: Tuple[LatticeVector, ...]
    all_terminal: bool
    all_nef: bool
    is_q_factorial: bool
    order: str = 'lex'
    newton: Optional[NewtonPolyhedron] = field(default=None, compare=False, repr=False)

    @property
    def exceptional_curves(self) -> int:
        return len(self.certificates)


def minimal_model_fan(c: Cone, order: str = 'lex', newton: NewtonPolyhedron = None) -> MinimalModelResult:
    newton = newton or newton_polyhedron(c)
    if c.is_zero():
        fan = Fan(c, (c,), (), (0,))
    else:
        simplices = {}
        for k, face in enumerate(newton.maximal_compact_faces):
            for s in full_triangulation(face, order):
                simplices[tuple(sorted(s))] = k
        keys = sorted(simplices)
        max_cones = tuple(cone_from_rays(s, c.rank) for s in keys)
        rays = tuple(sorted({u for s in keys for u in s}))
        fan = Fan(c, max_cones, rays, tuple(simplices[s] for s in keys))

    certificates = tuple(nef_certificate(fan))
    exceptional = tuple(u for u in fan.rays if u not in c.rays)
    result = MinimalModelResult(
        fan=fan,
        certificates=certificates,
        exceptional_rays=exceptional,
        all_terminal=all(is_terminal_cone(mc) for mc in fan.max_cones),
        all_nef=all(cert.bend >= 0 for cert in certificates),
        is_q_factorial=fan.is_simplicial(),
        order=order,
        newton=newton,
    )
    assert result.is_q_factorial
    logger.debug('minimal model of %s: %d max cones, %d exceptional rays',
                 [u.to_list() for u in c.rays], len(fan.max_cones), len(exceptional))
    return result


def bend_signature(result: MinimalModelResult):
    """Bend signs per pair of compact faces; independent of the triangulation."""
    signature = set()
    for cert in result.certificates:
        pair = tuple(sorted((result.fan.cone_faces[cert.left_cone], result.fan.cone_faces[cert.right_cone])))
        signature.add((pair, cert.sign))
    return tuple(sorted(signature))


@dataclass(frozen=True)
class ModelVerification:
    """Outcome of verify_minimal_model; truthy iff every check passed."""

    result: MinimalModelResult = field(repr=False)
    failures: Tuple[Tuple[str, str], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def failed_checks(self) -> List[str]:
        return sorted({name for name, _ in self.failures})


def _check_walls(fan: Fan, failures):
    for wall, sides in fan.walls.items():
        expected = 1 if fan.is_boundary_wall(wall) else 2
        if len(sides) != expected:
            failures.append(('walls', 'wall {} bounds {} cones, expected {}'.format(
                [fan.rays[i].to_list() for i in wall], len(sides), expected)))
            continue
        if expected == 2:
            # the two opposite rays must lie strictly on opposite sides of the wall
            (left, u), (_, u_prime) = sides
            tight = [m for m in fan.max_cones[left].facet_rows
                     if all(dot(m, fan.rays[i]) == 0 for i in wall)]
            if not tight or dot(tight[0], fan.rays[u_prime]) >= 0:
                failures.append(('walls', 'cones overlap across wall {}'.format(
                    [fan.rays[i].to_list() for i in wall])))


def _check_support(c: Cone, fan: Fan, failures):
    missing_rays = [u for u in c.rays if u not in fan.rays]
    if missing_rays:
        failures.append(('support', 'rays {} of σ are not rays of Δ'.format([u.to_list() for u in missing_rays])))
    outside = [u for u in fan.rays if not c.contains(u)]
    if outside:
        failures.append(('support', 'rays {} of Δ are outside σ'.format([u.to_list() for u in outside])))
    bound = min(SUPPORT_SAMPLE_BOUND, max(abs(x) for u in fan.rays for x in u))
    for block in iter_grid([-bound] * c.rank, [bound] * c.rank):
        inside = block[c.contains_many(block)]
        uncovered = inside[~fan.locate_many(inside)]
        if len(uncovered):
            failures.append(('support', 'point {} of σ lies in no max cone'.format(
                [int(x) for x in uncovered[0]])))
            return


def verify_minimal_model(c: Cone, order: str = 'lex', result: MinimalModelResult = None) -> ModelVerification:
    """Checks support, simpliciality, terminality, nefness, rays and Ter(σ) consistency."""
    result = result or minimal_model_fan(c, order)
    fan = result.fan
    failures = []
    if c.is_zero():
        return ModelVerification(result, ())

    _check_support(c, fan, failures)
    _check_walls(fan, failures)
    for mc in fan.max_cones:
        if not mc.is_simplicial():
            failures.append(('simplicial', 'max cone {} is not simplicial'.format([u.to_list() for u in mc.rays])))
        elif not is_terminal_cone(mc):
            failures.append(('terminal', 'max cone {} is not terminal'.format([u.to_list() for u in mc.rays])))
    for cert in result.certificates:
        wall = [u.to_list() for u in cert.wall_rays]
        if cert.bend < 0:
            failures.append(('nef', 'negative bend {} at wall {}'.format(cert.bend, wall)))
        if (cert.bend > 0) != (cert.reverse_bend > 0) or (cert.bend < 0) != (cert.reverse_bend < 0):
            failures.append(('nef', 'bend sign depends on the side at wall {}'.format(wall)))
        if cert.same_face is not None and (cert.bend == 0) != cert.same_face:
            failures.append(('flat_walls', 'bend {} at wall {} disagrees with face structure'.format(cert.bend, wall)))

    boundary = result.newton.boundary_points
    if tuple(fan.rays) != tuple(boundary):
        failures.append(('rays', 'rays of Δ differ from the lattice points of the compact boundary'))
    singular_exceptional = [u for u in result.exceptional_rays if in_sing_locus(c, u)]
    if singular_exceptional != terminal_valuations(c, result.newton):
        failures.append(('exceptional', 'singular exceptional rays {} differ from Ter(σ)'.format(
            [u.to_list() for u in singular_exceptional])))

    for name, detail in failures:
        logger.warning('minimal model check %s failed: %s', name, detail)
    return ModelVerification(result, tuple(failures))
