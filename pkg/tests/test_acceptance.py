"""End-to-end runs of the command line and of the report pipeline."""
import io
import json
import time

import pytest
import yaml

from toric_nash.analyze import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, main
from toric_nash.helpers import OUT_DIR_ENV
from toric_nash.report import ConeSpec, build_report, catalog_entry
from toric_nash.toric import in_sing_locus
from toric_nash.valuations import analyze


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.delenv(OUT_DIR_ENV, raising=False)
    monkeypatch.chdir(tmp_path)


def test_example_cone(capsys):
    assert main(['--catalog', 'paper-example']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('** Results **')
    assert 'Min (Nash = essential valuations): [[1, 1, 1]]' in out
    assert 'Ter (terminal valuations): []' in out
    assert 'Verification: passed' in out


def test_json_output(capsys):
    assert main(['--catalog', 'A3', '--json']) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc['min_set'] == doc['ter_set'] == [[1, 1], [1, 2], [1, 3]]
    assert doc['hirzebruch_jung']['continued_fraction'] == [2, 2, 2]
    assert len(doc['fan']['max_cones']) == 4


@pytest.mark.parametrize('rays', ['1,0;-1,0', '1,0;1', '0,0', '1,a'])
def test_invalid_rays(rays):
    assert main(['--rays', rays]) == EXIT_INVALID


def test_line_is_reported(caplog):
    assert main(['--rays', '1,0;-1,0']) == EXIT_INVALID
    assert 'NotStronglyConvex' in caplog.text


@pytest.mark.parametrize('name, expected', [('regular-3', []), ('third-111', [[0, 0, 1]])])
def test_catalog_cones(name, expected, capsys):
    assert main(['--catalog', name, '--json']) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc['min_set'] == doc['ter_set'] == expected


def test_oracle_run_on_a3(capsys):
    assert main(['--oracle', '--catalog', 'A3', '--json']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)[0]['passed'] is True


def test_unknown_catalog_entry():
    assert main(['--catalog', 'quotient-4-2']) == EXIT_INVALID


def test_list_catalog(capsys):
    assert main(['--list-catalog']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'paper-example' in out and 'odp' in out


def test_oracle_run(capsys):
    assert main(['--oracle', '--catalog', 'paper-example', '--height', '10']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('** Oracle results **')
    assert 'zero diffs' in out


def test_corrupted_golden_is_a_mismatch(tmp_path, capsys):
    golden = tmp_path / 'golden.json'
    main(['--catalog', 'paper-example', '--json', '--out', str(golden)])
    doc = json.loads(golden.read_text())
    doc['min_set'] = [[1, 1, 2]]
    golden.write_text(json.dumps(doc))
    assert main(['--oracle', '--catalog', 'paper-example', '--golden', str(golden)]) == EXIT_MISMATCH
    assert 'golden_min_set' in capsys.readouterr().out


def test_missing_golden():
    assert main(['--oracle', '--catalog', 'A1', '--golden', 'nowhere.json']) == EXIT_INVALID


def test_input_file_and_out(tmp_path):
    source = tmp_path / 'odp.yaml'
    source.write_text(yaml.safe_dump({'name': 'square', 'rays': [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]}))
    target = tmp_path / 'reports' / 'square.json'
    assert main([str(source), '--json', '--out', str(target)]) == EXIT_OK
    doc = json.loads(target.read_text())
    assert doc['name'] == 'square'
    assert doc['regularity']['is_terminal'] is None
    assert doc['min_set'] == [[1, 1, 2]]


def test_missing_input_file():
    assert main(['missing.json']) == EXIT_INVALID


def test_standard_input(monkeypatch, capsys):
    monkeypatch.setattr('sys.stdin', io.StringIO('{"rays": [[1, 0], [1, 2]]}'))
    assert main(['--min', '--json']) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc['min_set'] == [[1, 1]]
    assert 'fan' not in doc


def test_out_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path / 'runs'))
    assert main(['--catalog', 'A2', '--quiet']) == EXIT_OK
    doc = json.loads((tmp_path / 'runs' / 'A2.json').read_text())
    assert doc['min_set'] == [[1, 1], [1, 2]]


def test_batch(tmp_path, capsys):
    batch = tmp_path / 'batch.json'
    batch.write_text(json.dumps([
        {'name': 'a1', 'rays': [[1, 0], [1, 2]]},
        {'name': 'example', 'rays': [[1, 0, 0], [0, 1, 0], [1, 1, 2]]},
    ]))
    assert main(['--batch', str(batch), '--quiet']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('** Results **')
    assert 'a1' in out and 'example' in out


def test_batch_with_invalid_cone(tmp_path):
    batch = tmp_path / 'batch.json'
    batch.write_text(json.dumps([{'name': 'a1', 'rays': [[1, 0], [1, 2]]}, {'name': 'line', 'rays': [[1, 0], [-1, 0]]}]))
    assert main(['--batch', str(batch), '--quiet', '--json']) == EXIT_INVALID


def _write_config(path, **overrides):
    config = {
        'exp_name': 'test',
        'comment': 'small corpus',
        'engine': {'seed': 0, 'num_workers': 0, 'check_reverse_order': True, 'log_level': 'WARNING'},
        'corpus': {'count': 4, 'ranks': [2, 3], 'max_coord': 4, 'max_rays': 4, 'max_det': 10},
    }
    config.update(overrides)
    path.write_text(yaml.safe_dump(config))
    return str(path)


def test_random_corpus_from_config(tmp_path, capsys):
    config = _write_config(tmp_path / 'config.yaml')
    assert main(['--config', config, '--seed', '3', '--quiet']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count('random-3-') == 4


def test_bare_seed_uses_engine_seed(tmp_path, capsys):
    config = _write_config(tmp_path / 'config.yaml')
    assert main(['--config', config, '--seed', '--quiet']) == EXIT_OK
    assert capsys.readouterr().out.count('random-0-') == 4


def test_bad_config(tmp_path):
    assert main(['--config', str(tmp_path / 'missing.yaml'), '--catalog', 'A1']) == EXIT_INVALID
    config = _write_config(tmp_path / 'config.yaml', engine={'seed': 0, 'workers': 2})
    assert main(['--config', config, '--catalog', 'A1']) == EXIT_INVALID


@pytest.mark.parametrize('n', range(1, 31))
def test_an_family(n):
    report = build_report(catalog_entry('A{}'.format(n)), check_reverse_order=n <= 10)
    expected = [[1, k] for k in range(1, n + 1)]
    assert report.min_set == report.ter_set == expected
    assert len(report.fan['max_cones']) == n + 1
    assert all(wall['bend'] == 0 for wall in report.fan['walls'])
    assert report.hirzebruch_jung['continued_fraction'] == [2] * n
    assert report.passed


def test_random_corpus_reports(small_corpus):
    for spec in small_corpus:
        report = build_report(spec)
        assert report.passed, (spec.rays, report.verification)
        assert report.verification['reverse_order_agrees'] is True
        assert set(map(tuple, report.ter_set)) <= set(map(tuple, report.min_set))
        report.to_dict()


@pytest.mark.slow
def test_inclusion_chain_on_acceptance_corpus(acceptance_corpus):
    assert len(acceptance_corpus) == 200
    start = time.perf_counter()
    for spec in acceptance_corpus:
        result = analyze(spec.to_cone())
        assert set(result.ter_set) <= set(result.min_set), spec.rays
    assert time.perf_counter() - start < 60


def test_rank4_cone_with_large_boxes():
    c = ConeSpec('wide', 4, ((-6, 6, -5, 5), (-4, -4, 3, 2), (-3, 5, 6, -1), (5, 6, -2, 7))).to_cone()
    result = analyze(c)
    assert result.min_set
    assert set(result.ter_set) <= set(result.min_set)
    assert all(in_sing_locus(c, v) for v in result.min_set)
