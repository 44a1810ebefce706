from fractions import Fraction

import pytest

from toric_nash.helpers import InvalidConeSpec, InvariantViolation, dump_json
from toric_nash.lattice import triangulate_by_rays
from toric_nash.report import (
    ConeSpec,
    analyze_batch,
    build_report,
    catalog_entry,
    list_catalog,
    load_cone_documents,
    parse_cone_spec,
    parse_inline_rays,
    random_cones,
    run_oracles,
    summary_table,
    validate_report,
)
from toric_nash.toric import multiplicity


@pytest.mark.parametrize('doc, field', [
    ([[1, 0]], 'document'),
    ({'rays': [[1, 0]], 'colour': 'red'}, 'colour'),
    ({'name': 'x'}, 'rays'),
    ({'rays': []}, 'rays'),
    ({'name': '', 'rays': [[1, 0]]}, 'name'),
    ({'rays': [[1, 0], [1, 1, 1]]}, 'rays[1]'),
    ({'rays': [[1, 0], [0, 0]]}, 'rays[1]'),
    ({'rays': [[True, 0]]}, 'rays[0]'),
    ({'rays': [[1, 0]], 'lattice_rank': 0}, 'lattice_rank'),
])
def test_parse_cone_spec_names_the_field(doc, field):
    with pytest.raises(InvalidConeSpec) as info:
        parse_cone_spec(doc)
    assert info.value.field == field


def test_parse_cone_spec():
    spec = parse_cone_spec({'name': 'example', 'lattice_rank': 3, 'rays': [[1, 0, 0], [0, 1, 0], [1, 1, 2]]})
    assert spec == ConeSpec('example', 3, ((1, 0, 0), (0, 1, 0), (1, 1, 2)))
    assert parse_cone_spec({'rays': [[1, 0]]}).name == 'cone'


def test_parse_inline_rays():
    spec = parse_inline_rays('1,0,0; 0,1,0 ;1,1,2')
    assert spec.rays == ((1, 0, 0), (0, 1, 0), (1, 1, 2))
    assert spec.name == 'inline'
    with pytest.raises(InvalidConeSpec) as info:
        parse_inline_rays('1,0;1,x')
    assert info.value.field == 'rays[1]'


def test_load_cone_documents():
    yaml_text = '- rays: [[1, 0], [1, 4]]\n- name: square\n  rays: [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]\n'
    specs = load_cone_documents(yaml_text)
    assert [s.name for s in specs] == ['cone-0', 'square']
    single = load_cone_documents('{"name": "A1", "rays": [[1, 0], [1, 2]]}')
    assert single == [ConeSpec('A1', 2, ((1, 0), (1, 2)))]
    with pytest.raises(InvalidConeSpec):
        load_cone_documents('rays: [[1, 0], [1')


def test_catalog_entries():
    names = [spec.name for spec in list_catalog()]
    assert 'paper-example' in names and 'odp' in names
    assert catalog_entry('A3').rays == ((1, 0), (1, 4))
    assert catalog_entry('quotient-5-2').rays == ((0, 1), (5, -2))
    assert catalog_entry('regular-4').to_cone().is_simplicial()
    for spec in list_catalog():
        spec.to_cone()


@pytest.mark.parametrize('name', ['quotient-4-2', 'quotient-3-3', 'A0', 'nope'])
def test_catalog_rejects(name):
    with pytest.raises(InvalidConeSpec) as info:
        catalog_entry(name)
    assert info.value.field == 'catalog'


def test_random_cones_are_reproducible():
    first = random_cones(8, ranks=[2, 3], max_coord=4, seed=5, max_det=10)
    assert first == random_cones(8, ranks=[2, 3], max_coord=4, seed=5, max_det=10)
    assert first == random_cones(8, ranks=[2, 3], max_coord=4, seed=5, max_det=10, quiet=False)
    assert [s.lattice_rank for s in first] == [2, 3] * 4
    for spec in first:
        c = spec.to_cone()
        assert c.is_full_dimensional()
        assert all(multiplicity(p) <= 10 for p in triangulate_by_rays(c))


def test_build_report_of_example_cone():
    doc = build_report(catalog_entry('paper-example')).to_dict()
    assert doc['cone']['extreme_rays'] == [[0, 1, 0], [1, 0, 0], [1, 1, 2]]
    assert doc['regularity'] == {
        'is_regular': False,
        'is_simplicial': True,
        'is_terminal': True,
        'is_canonical': True,
        'multiplicity': 2,
    }
    assert doc['singular_faces'] == [{'rays': [0, 1, 2], 'dim': 3, 'multiplicity': 2}]
    assert doc['min_set'] == [[1, 1, 1]]
    assert doc['ter_set'] == []
    assert doc['fan']['max_cones'] == [[0, 1, 2]]
    assert doc['fan']['walls'] == [] and doc['fan']['exceptional_rays'] == []
    assert doc['verification'] == {'passed': True, 'failures': [], 'reverse_order_agrees': True}
    assert 'hirzebruch_jung' not in doc


def test_build_report_of_a3():
    report = build_report(catalog_entry('A3'))
    assert report.hirzebruch_jung == {'boundary': [[1, 1], [1, 2], [1, 3]], 'continued_fraction': [2, 2, 2]}
    assert report.min_set == report.ter_set == [[1, 1], [1, 2], [1, 3]]
    assert [wall['bend'] for wall in report.fan['walls']] == [0, 0, 0]
    assert report.passed


def test_build_report_sections():
    report = build_report(catalog_entry('A2'), sections=('min',))
    doc = report.to_dict()
    assert 'min_set' in doc
    assert 'ter_set' not in doc and 'fan' not in doc and 'verification' not in doc


def test_report_json_is_deterministic():
    spec = catalog_entry('odp')
    assert dump_json(build_report(spec).to_dict()) == dump_json(build_report(spec).to_dict())


def test_render_of_non_simplicial_cone():
    text = build_report(catalog_entry('odp')).render()
    assert text.startswith('** Results **')
    assert 'terminal: not simplicial - predicate undefined' in text
    assert 'Min (Nash = essential valuations): [[1, 1, 2]]' in text
    assert 'Verification: passed' in text


def test_validate_report_rejects_malformed_documents():
    with pytest.raises(InvariantViolation):
        validate_report({'name': 'x'})
    doc = build_report(catalog_entry('A1')).to_dict()
    doc['min_set'] = [['a']]
    with pytest.raises(InvariantViolation):
        validate_report(doc)


def test_oracles_agree_on_catalog():
    for spec in list_catalog():
        oracle = run_oracles(spec, box=5, coverage_bound=6)
        assert oracle.passed, (spec.name, oracle.diffs)


def test_oracle_height_defaults_to_twice_the_max_height():
    oracle = run_oracles(catalog_entry('paper-example'))
    assert oracle.height == 6
    assert oracle.to_dict()['height'] == 6
    low = run_oracles(catalog_entry('A3'), height=Fraction(5, 2), coverage_bound=None)
    assert low.passed
    assert low.to_dict()['height'] == '5/2'


def test_corrupted_golden_is_reported():
    golden = {'min_set': [[1, 1, 2]], 'ter_set': []}
    oracle = run_oracles(catalog_entry('paper-example'), golden=golden)
    assert not oracle.passed
    assert oracle.diffs == [{'check': 'golden_min_set', 'missing': [[1, 1, 2]], 'extra': [[1, 1, 1]]}]
    text = oracle.render()
    assert text.startswith('** Oracle results **')
    assert '- [1, 1, 2] (reference only)' in text


def test_analyze_batch_and_summary_table():
    specs = [catalog_entry('paper-example'), ConeSpec('line', 2, ((1, 0), (-1, 0))), catalog_entry('A2')]
    results = analyze_batch(specs, quiet=True)
    assert results[1][0] is None
    assert results[1][1].startswith('NotStronglyConvex')
    table = summary_table(specs, results)
    assert list(table['name']) == ['paper-example', 'line', 'A2']
    assert table.loc[0, '|Min|'] == 1
    assert table.loc[2, '|Ter|'] == 2
    assert table.loc[2, 'max cones'] == 3
    assert bool(table.loc[0, 'verified'])
