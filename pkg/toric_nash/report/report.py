import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import pandas as pd
from tqdm.auto import tqdm

from toric_nash.helpers.errors import ToricError
from toric_nash.helpers.tools import rational_to_json
from toric_nash.lattice import hilbert_basis
from toric_nash.mmp import bend_signature, minimal_model_fan, verify_minimal_model
from toric_nash.oracles import brute_hilbert, brute_min, coverage_gaps, hj_walk
from toric_nash.toric import is_canonical_cone, multiplicity
from toric_nash.valuations import analyze

from .cone_spec import ConeSpec
from .schema import validate_report

logger = logging.getLogger(__name__)

__all__ = [
    'SECTIONS',
    'BEND_CONVENTION',
    'Report',
    'build_report',
    'OracleReport',
    'run_oracles',
    'analyze_batch',
    'summary_table',
]

SECTIONS = ('min', 'ter', 'mmp')

BEND_CONVENTION = 'bend = <m, u\'> - 1 with m = 1 on the left cone; bend >= 0 iff K.gamma >= 0'


def _vectors(vs):
    return [list(v) for v in vs]


@dataclass
class Report:
    """One analyzed cone; ``to_dict`` is the machine-readable form."""

    name: str
    cone: Dict
    regularity: Dict
    singular_faces: List[Dict]
    min_set: Optional[List] = None
    ter_set: Optional[List] = None
    fan: Optional[Dict] = None
    hirzebruch_jung: Optional[Dict] = None
    verification: Optional[Dict] = None
    timings: Optional[Dict[str, float]] = None

    @property
    def passed(self) -> bool:
        return self.verification is None or self.verification['passed']

    def to_dict(self) -> Dict:
        doc = {
            'name': self.name,
            'cone': self.cone,
            'regularity': self.regularity,
            'singular_faces': self.singular_faces,
        }
        for key in ('min_set', 'ter_set', 'fan', 'hirzebruch_jung', 'verification', 'timings'):
            value = getattr(self, key)
            if value is not None:
                doc[key] = value
        return validate_report(doc)

    def render(self) -> str:
        reg = self.regularity
        lines = [
            '** Results **',
            'cone: {}'.format(self.name),
            '   rays: {}'.format(self.cone['extreme_rays']),
            '   dim: {} in lattice rank {}'.format(self.cone['dim'], self.cone['lattice_rank']),
            '   regular: {}  simplicial: {}'.format(reg['is_regular'], reg['is_simplicial']),
        ]
        if reg['is_simplicial']:
            lines.append('   terminal: {}  canonical: {}  multiplicity: {}'.format(
                reg['is_terminal'], reg['is_canonical'], reg['multiplicity']))
        else:
            lines.append('   terminal: not simplicial - predicate undefined')
        lines.append('singular faces: {}'.format(len(self.singular_faces)))
        for face in self.singular_faces:
            lines.append('   rays {}  dim {}  multiplicity {}'.format(face['rays'], face['dim'], face['multiplicity']))
        if self.min_set is not None:
            lines.append('Min (Nash = essential valuations): {}'.format(self.min_set))
        if self.ter_set is not None:
            lines.append('Ter (terminal valuations): {}'.format(self.ter_set))
        if self.hirzebruch_jung is not None:
            lines.append('Hirzebruch-Jung continued fraction: {}'.format(self.hirzebruch_jung['continued_fraction']))
        if self.fan is not None:
            fan = self.fan
            lines.append('Minimal model:')
            lines.append('   rays: {}'.format(fan['rays']))
            lines.append('   max cones: {}'.format(fan['max_cones']))
            lines.append('   exceptional rays: {}'.format(fan['exceptional_rays']))
            lines.append('   exceptional curves: {}'.format(fan['exceptional_curves']))
            for wall in fan['walls']:
                lines.append('   wall {} between cones {}: bend {}'.format(wall['wall'], wall['cones'], wall['bend']))
            lines.append('   all terminal: {}  all nef: {}  Q-factorial: {}'.format(
                fan['all_terminal'], fan['all_nef'], fan['is_q_factorial']))
        if self.verification is not None:
            v = self.verification
            lines.append('Verification: {}'.format('passed' if v['passed'] else 'FAILED'))
            for failure in v['failures']:
                lines.append('   {}: {}'.format(failure['check'], failure['detail']))
            if v.get('reverse_order_agrees') is not None:
                lines.append('   reverse placing order agrees: {}'.format(v['reverse_order_agrees']))
        if self.timings:
            lines.append('Timings: ' + ', '.join('{} {:.3f}s'.format(k, t) for k, t in sorted(self.timings.items())))
        return '\n'.join(lines)


def build_report(
    spec: ConeSpec,
    sections: Sequence[str] = SECTIONS,
    check_reverse_order: bool = True,
    timings: bool = False,
) -> Report:
    """Runs the requested analyses on one cone.

    Raises ToricError for invalid input and InvariantViolation when an
    internal consistency check fails.
    """
    clock = {}
    start = time.perf_counter()
    c = spec.to_cone()
    result = analyze(c)
    clock['valuations'] = time.perf_counter() - start

    simplicial = c.is_simplicial()
    report = Report(
        name=spec.name,
        cone={
            'lattice_rank': spec.lattice_rank,
            'rays': _vectors(spec.rays),
            'extreme_rays': _vectors(c.rays),
            'dim': c.dim,
            'facets': [list(m) for m in c.facet_rows],
            'equations': [list(e) for e in c.equation_rows],
        },
        regularity={
            'is_regular': result.is_regular_variety,
            'is_simplicial': simplicial,
            'is_terminal': result.is_terminal_variety,
            'is_canonical': is_canonical_cone(c) if simplicial else None,
            'multiplicity': multiplicity(c) if simplicial else None,
        },
        singular_faces=[
            {
                'rays': list(f.ray_indices),
                'dim': f.dim,
                'multiplicity': multiplicity(f) if f.is_simplicial() else None,
            }
            for f in result.singular_faces
        ],
    )
    if 'min' in sections:
        report.min_set = _vectors(result.min_set)
    if 'ter' in sections:
        report.ter_set = _vectors(result.ter_set)
    if c.rank == 2 and c.dim == 2:
        boundary, fraction = hj_walk(c)
        report.hirzebruch_jung = {'boundary': _vectors(boundary), 'continued_fraction': fraction}

    if 'mmp' in sections:
        start = time.perf_counter()
        model = minimal_model_fan(c, 'lex', newton=result.newton)
        verification = verify_minimal_model(c, result=model)
        fan = model.fan
        report.fan = {
            'rays': _vectors(fan.rays),
            'max_cones': [list(s) for s in fan.cone_ray_indices],
            'walls': [cert.to_dict() for cert in model.certificates],
            'exceptional_rays': _vectors(model.exceptional_rays),
            'exceptional_curves': model.exceptional_curves,
            'all_terminal': model.all_terminal,
            'all_nef': model.all_nef,
            'is_q_factorial': model.is_q_factorial,
            'bend_convention': BEND_CONVENTION,
        }
        failures = [{'check': name, 'detail': detail} for name, detail in verification.failures]
        agrees = None
        if check_reverse_order and not c.is_zero():
            reverse = minimal_model_fan(c, 'reverse', newton=result.newton)
            agrees = _orders_agree(model, reverse)
            if not agrees:
                failures.append({'check': 'triangulation', 'detail': 'reverse placing order changes rays, Ter or bend signs'})
        report.verification = {
            'passed': not failures,
            'failures': failures,
            'reverse_order_agrees': agrees,
        }
        clock['minimal_model'] = time.perf_counter() - start

    if timings:
        report.timings = clock
    return report


def _orders_agree(model, reverse) -> bool:
    return (
        model.fan.rays == reverse.fan.rays
        and model.exceptional_rays == reverse.exceptional_rays
        and bend_signature(model) == bend_signature(reverse)
    )


@dataclass
class OracleReport:
    """Differences between the main path and the brute-force references."""

    name: str
    height: Fraction
    box: int
    diffs: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.diffs

    def add(self, check: str, expected, actual):
        expected, actual = [list(v) for v in expected], [list(v) for v in actual]
        missing = [v for v in expected if v not in actual]
        extra = [v for v in actual if v not in expected]
        if missing or extra:
            self.diffs.append({'check': check, 'missing': missing, 'extra': extra})

    def to_dict(self):
        return {
            'name': self.name,
            'height': rational_to_json(self.height),
            'box': self.box,
            'passed': self.passed,
            'diffs': self.diffs,
        }

    def render(self) -> str:
        lines = ['** Oracle results **', 'cone: {}  height {}  box {}'.format(self.name, self.height, self.box)]
        if self.passed:
            lines.append('   zero diffs')
        for diff in self.diffs:
            lines.append('   {}:'.format(diff['check']))
            for v in diff['missing']:
                lines.append('      - {} (reference only)'.format(v))
            for v in diff['extra']:
                lines.append('      + {} (main path only)'.format(v))
        return '\n'.join(lines)


def run_oracles(
    spec: ConeSpec,
    height=None,
    height_factor: int = 2,
    box: int = 6,
    coverage_bound: Optional[int] = 12,
    golden: Optional[Dict] = None,
) -> OracleReport:
    c = spec.to_cone()
    result = analyze(c)
    base = max([c.height_of(v) for v in result.min_set] or [c.height_of(u) for u in c.rays] or [1])
    H = Fraction(height) if height is not None else Fraction(height_factor * base)
    oracle = OracleReport(spec.name, H, box)

    oracle.add('min', brute_min(c, H), [v for v in result.min_set if c.height_of(v) <= H])
    basis_in_box = [h for h in hilbert_basis(c) if max(abs(x) for x in h) <= box]
    brute = brute_hilbert(c, box)
    if all(x >= 0 for u in c.rays for x in u):
        oracle.add('hilbert', brute, basis_in_box)
    else:
        # summands of a box point may leave the box, so only inclusion is checked
        oracle.add('hilbert', [h for h in brute if h in basis_in_box], basis_in_box)
    if coverage_bound:
        oracle.add('coverage', [], coverage_gaps(c, result.min_set, coverage_bound))
    if c.rank == 2 and c.dim == 2:
        boundary, _ = hj_walk(c)
        oracle.add('hj_min', boundary, result.min_set)
        oracle.add('hj_ter', boundary, result.ter_set)
    if golden is not None:
        for key, actual in (('min_set', result.min_set), ('ter_set', result.ter_set)):
            if key in golden:
                oracle.add('golden_' + key, golden[key], actual)
    return oracle


def _analyze_one(args):
    spec, sections, check_reverse_order, timings = args
    try:
        return build_report(spec, sections, check_reverse_order, timings), None
    except ToricError as e:
        return None, '{}: {}'.format(type(e).__name__, e)


def analyze_batch(
    specs: Sequence[ConeSpec],
    sections: Sequence[str] = SECTIONS,
    check_reverse_order: bool = True,
    timings: bool = False,
    num_workers: int = 0,
    quiet: bool = False,
):
    """Reports for many cones, in input order; invalid cones yield (None, message)."""
    jobs = [(spec, tuple(sections), check_reverse_order, timings) for spec in specs]
    if num_workers and num_workers > 1:
        with ProcessPoolExecutor(max_workers=num_workers) as pool:
            results = list(tqdm(pool.map(_analyze_one, jobs), total=len(jobs), disable=quiet))
    else:
        results = [_analyze_one(job) for job in tqdm(jobs, disable=quiet)]
    for spec, (report, error) in zip(specs, results):
        if error is not None:
            logger.warning('cone %s rejected: %s', spec.name, error)
        elif not report.passed:
            logger.error('cone %s failed verification', spec.name)
    return results


def summary_table(specs: Sequence[ConeSpec], results) -> pd.DataFrame:
    rows = []
    for spec, (report, error) in zip(specs, results):
        row = {'name': spec.name, 'rank': spec.lattice_rank, 'rays': len(spec.rays)}
        if report is None:
            row['error'] = error
        else:
            row['|Min|'] = len(report.min_set) if report.min_set is not None else None
            row['|Ter|'] = len(report.ter_set) if report.ter_set is not None else None
            row['max cones'] = len(report.fan['max_cones']) if report.fan else None
            row['verified'] = report.passed
        rows.append(row)
    return pd.DataFrame(rows)
