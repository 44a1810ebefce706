"""Command line entry point: ``python -m toric_nash.analyze``.

Exit codes: 0 success, 1 oracle mismatch, 2 invalid input, 3 invariant
violation or unexpected failure.
"""
import argparse
import logging
import os
import sys
from fractions import Fraction

import yaml

from toric_nash.helpers import (
    DEFAULT_CONFIG_PATH,
    InvalidConeSpec,
    InvariantViolation,
    ToricError,
    default_out_dir,
    dump_json,
    get_config,
    mkdir_if_missing,
    read_json,
    write_json,
)
from toric_nash.report import (
    SECTIONS,
    analyze_batch,
    build_report,
    catalog_entry,
    list_catalog,
    load_cone_documents,
    parse_inline_rays,
    random_cones,
    run_oracles,
    summary_table,
)

logger = logging.getLogger('toric_nash')

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_INVARIANT = 3

SEED_FROM_CONFIG = object()  # non-str so argparse does not run it through type=int


def parse_args(argv=None):
    parser = argparse.ArgumentParser(
        description='Nash and terminal valuations over an affine toric variety, with a certified minimal model.'
    )
    parser.add_argument(
        'input',
        nargs='?',
        default=None,
        help='Cone document (JSON or YAML) to analyze; "-" or nothing reads standard input.',
    )
    parser.add_argument(
        '--config',
        type=str,
        default=DEFAULT_CONFIG_PATH,
        help='Path to the YAML configuration file. Default: configs/default_config.yaml',
    )

    source = parser.add_argument_group('input')
    source.add_argument('--rays', type=str, help='Inline rays, e.g. "1,0,0;0,1,0;1,1,2".')
    source.add_argument('--catalog', type=str, help='Analyze a built-in cone, e.g. "A3" or "paper-example".')
    source.add_argument('--list-catalog', action='store_true', help='List the built-in cones and exit.')
    source.add_argument('--batch', type=str, help='Document holding a list of cones.')
    source.add_argument(
        '--seed',
        type=int,
        nargs='?',
        const=SEED_FROM_CONFIG,
        help='Analyze the random corpus generated from this seed (no value: engine.seed of the config).',
    )
    source.add_argument('--count', type=int, help='Corpus size for --seed (default: corpus.count).')

    sections = parser.add_argument_group('sections')
    sections.add_argument('--min', action='store_true', help='Report Min(σ).')
    sections.add_argument('--ter', action='store_true', help='Report Ter(σ).')
    sections.add_argument('--mmp', action='store_true', help='Report the minimal model fan and its certificates.')
    sections.add_argument('--all', action='store_true', help='Report everything (default).')
    sections.add_argument('--no-reverse', action='store_true', help='Skip the reversed placing order check.')

    oracle = parser.add_argument_group('oracles')
    oracle.add_argument('--oracle', action='store_true', help='Diff the main path against brute-force references.')
    oracle.add_argument('--height', type=Fraction, help='Slab height H for brute_min (default: factor times max height).')
    oracle.add_argument('--box', type=int, help='Coordinate box B for brute_hilbert.')
    oracle.add_argument('--golden', type=str, help='Golden report to diff min_set and ter_set against.')

    output = parser.add_argument_group('output')
    output.add_argument('--json', action='store_true', help='Machine-readable output.')
    output.add_argument('--out', type=str, help='Write the output to this path instead of standard output.')
    output.add_argument('--timings', action='store_true', help='Include timings in the report.')
    output.add_argument('--workers', type=int, help='Process pool size for batch runs.')
    output.add_argument('--quiet', action='store_true', help='Only warnings and errors on the log; no progress bar.')
    return parser.parse_args(argv)


def _selected_sections(args):
    chosen = tuple(s for s in SECTIONS if getattr(args, s))
    return SECTIONS if args.all or not chosen else chosen


def _load_specs(args):
    if args.rays:
        return [parse_inline_rays(args.rays)]
    if args.catalog:
        return [catalog_entry(args.catalog)]
    path = args.batch or args.input
    if path in (None, '-'):
        return load_cone_documents(sys.stdin.read())
    if not os.path.isfile(path):
        raise InvalidConeSpec('input', 'no file found at "{}"'.format(path))
    with open(path, 'r') as f:
        return load_cone_documents(f.read())


def _emit(text, out_path):
    if out_path:
        mkdir_if_missing(os.path.dirname(out_path))
        with open(out_path, 'w') as f:
            f.write(text)
        logger.info('output written to %s', out_path)
    else:
        sys.stdout.write(text)


def _run_oracles(specs, config, args):
    params = config.oracle
    golden = None
    if args.golden:
        if not os.path.isfile(args.golden):
            raise InvalidConeSpec('golden', 'no file found at "{}"'.format(args.golden))
        golden = read_json(args.golden)
    reports = [
        run_oracles(
            spec,
            height=args.height,
            height_factor=params.height_factor,
            box=args.box or params.box,
            coverage_bound=params.coverage_bound,
            golden=golden,
        )
        for spec in specs
    ]
    if args.json:
        _emit(dump_json([r.to_dict() for r in reports]), args.out)
    else:
        _emit('\n\n'.join(r.render() for r in reports) + '\n', args.out)
    failed = [r.name for r in reports if not r.passed]
    if failed:
        logger.error('oracle mismatch on %s', ', '.join(failed))
        return EXIT_MISMATCH
    return EXIT_OK


def _run_many(specs, config, args, sections, check_reverse, timings):
    results = analyze_batch(
        specs,
        sections,
        check_reverse_order=check_reverse,
        timings=timings,
        num_workers=args.workers if args.workers is not None else config.engine.num_workers,
        quiet=args.quiet,
    )
    if args.json:
        docs = [
            report.to_dict() if report is not None else {'name': spec.name, 'error': error}
            for spec, (report, error) in zip(specs, results)
        ]
        _emit(dump_json(docs), args.out)
    else:
        table = summary_table(specs, results)
        _emit('** Results **\n' + table.to_string(index=False) + '\n', args.out)
    if any(report is not None and not report.passed for report, _ in results):
        return EXIT_INVARIANT
    if args.seed is None and any(report is None for report, _ in results):
        return EXIT_INVALID
    return EXIT_OK


def run(args) -> int:
    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s')
    try:
        config = get_config(args.config)
    except (OSError, TypeError, KeyError, yaml.YAMLError) as e:
        logger.error('cannot load config %s: %s', args.config, e)
        return EXIT_INVALID
    level = logging.WARNING if args.quiet else getattr(logging, config.engine.log_level.upper(), logging.INFO)
    logging.getLogger().setLevel(level)

    if args.list_catalog:
        lines = ['** Catalog **']
        lines += ['{:<16} rays {}'.format(spec.name, [list(r) for r in spec.rays]) for spec in list_catalog()]
        lines.append('families: regular-n, An, quotient-r-a')
        _emit('\n'.join(lines) + '\n', args.out)
        return EXIT_OK

    sections = _selected_sections(args)
    check_reverse = config.engine.check_reverse_order and not args.no_reverse
    timings = args.timings or config.output.timings
    args.json = args.json or config.output.json

    try:
        if args.seed is not None:
            if args.seed == SEED_FROM_CONFIG:
                args.seed = config.engine.seed
            corpus = config.corpus
            specs = random_cones(
                args.count or corpus.count,
                ranks=corpus.ranks,
                max_coord=corpus.max_coord,
                max_rays=corpus.max_rays,
                seed=args.seed,
                max_det=corpus.max_det,
                quiet=args.quiet,
            )
        else:
            specs = _load_specs(args)

        if args.oracle:
            return _run_oracles(specs, config, args)
        if args.seed is not None or args.batch or len(specs) > 1:
            return _run_many(specs, config, args, sections, check_reverse, timings)

        report = build_report(specs[0], sections, check_reverse_order=check_reverse, timings=timings)
        doc = report.to_dict()
        _emit(dump_json(doc) if args.json else report.render() + '\n', args.out)
        out_dir = config.output.out_dir or default_out_dir()
        if out_dir and not args.out:
            write_json(doc, os.path.join(out_dir, '{}.json'.format(report.name)))
        return EXIT_OK if report.passed else EXIT_INVARIANT
    except ToricError as e:
        logger.error('%s: %s', type(e).__name__, e)
        return EXIT_INVALID
    except InvariantViolation as e:
        logger.error('invariant violation: %s', e)
        return EXIT_INVARIANT
    except Exception:
        logger.exception('unexpected failure')
        return EXIT_INVARIANT


def main(argv=None) -> int:
    return run(parse_args(argv))


if __name__ == '__main__':
    sys.exit(main())
