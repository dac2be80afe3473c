"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests the command-line front end. Requires "pytest" to run.
"""

import json
import pytest
from homquiver import cli
from homquiver import exchange
from homquiver import homology
from homquiver import presets
from homquiver import serre


def test_basis():
    report = cli.run_command(['basis', 'sl2_principal'])
    assert report.exit_code == cli.EXIT_OK
    assert report.results['dimension'] == 5
    assert 'b*a' in report.results['basis']


def test_usage_error():
    report = cli.run_command(['frobnicate'])
    assert report.exit_code == cli.EXIT_USAGE
    assert report.errors


def test_unknown_preset():
    report = cli.run_command(['resolve', 'no_such_algebra', 'L1'])
    assert report.exit_code == cli.EXIT_FAILURE
    assert "unknown preset" in report.errors[0]


def test_unknown_vertex():
    report = cli.run_command(['resolve', 'sl2_principal', 'L9'])
    assert report.exit_code == cli.EXIT_FAILURE


def test_resolve():
    report = cli.run_command(['resolve', 'sl3_singular', 'L3'])
    assert report.results['terms'] == ['P3', 'P2', 'P3']
    assert report.results['pd'] == 2
    assert report.statuses['resolution'] == 'finite'


def test_resolve_file(tmp_path):
    alg, _ = presets.load_preset('sl2_principal')
    file_name = str(tmp_path / "sl2.alg")
    exchange.export_algebra_file(alg, file_name)
    report = cli.run_command(['resolve', file_name, '2'])
    assert report.results['terms'] == ['P2', 'P1', 'P2']


def test_ext():
    report = cli.run_command(['ext', 'sl3_singular', 'L3', 'L3', '--max', '3'])
    assert report.results['ext'] == {'0': 1, '1': 0, '2': 1, '3': 0}


def test_pd():
    report = cli.run_command(['pd', 'sl2_principal'])
    assert report.results['pd'] == {'L1': 1, 'L2': 2}


def test_pd_truncated():
    report = cli.run_command(['pd', 'sl2_principal', '--cap', '0'])
    assert report.exit_code == cli.EXIT_OK
    assert report.results['pd']['L2'] == "undetermined beyond cap"


def test_gldim():
    report = cli.run_command(['gldim', 'sl3_singular_monomial'])
    assert report.results['gl_dim'] == 2


def test_ext_quiver():
    report = cli.run_command(['ext-quiver', 'sl3_singular', '--max', '2'])
    assert report.results['ext_quiver']['max_degree'] == 2


def test_serre():
    report = cli.run_command(['serre', 'sl3_singular', '--simples', 'L3', '--check-fullness'])
    assert report.results['subcategory']['simples'] == ['3']
    assert report.results['fullness']['verdict'] == serre.NOT_FULL


def test_initial_segments():
    report = cli.run_command(['initial-segments', 'sl2_principal'])
    assert report.results['initial_segments'] == [[], ['1'], ['1', '2']]


def test_guichardet_json(capsys):
    code = cli.main(['guichardet', 'sl3_singular', '--json'])
    assert code == cli.EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['results']['guichardet']['verdict'] is False
    assert data['exit_code'] == 0
    assert 'segment {3} fails at degree 2 on (L3, L3)' in data['notes']


def test_guichardet_notes():
    report = cli.run_command(['guichardet', 'sl3_singular'])
    assert 'segment {3} fails at degree 2 on (L3, L3)' in report.notes
    assert cli.run_command(['guichardet', 'sl2_principal']).notes == []


@pytest.mark.parametrize("mode,key", [
    ('thm777', 'thm777'),
    ('pdcor', 'pdcor'),
    ('coideals', 'coideals'),
    ('afunction', 'a_function'),
    ('gldim', 'gl_dim_regular'),
])
def test_coxeter(mode, key):
    report = cli.run_command(['coxeter', '--type', 'A2', '--parabolic', 's1', '--eval', mode])
    assert report.exit_code == cli.EXIT_OK
    assert key in report.results
    assert report.results['group']['order'] == 6


def test_coxeter_thm777():
    report = cli.run_command(['coxeter', '--type', 'A2', '--parabolic', 's1', '--eval', 'thm777'])
    assert report.results['thm777'] == [1, 2, 2]


def test_coxeter_unsupported():
    report = cli.run_command(['coxeter', '--type', 'E8'])
    assert report.exit_code == cli.EXIT_FAILURE


def test_liecoh():
    report = cli.run_command(['liecoh', '--preset', 'heisenberg', '--check', 'top', '--check', 'poincare'])
    assert report.exit_code == cli.EXIT_OK
    assert report.results['cohomology'] == [1, 2, 2, 1]
    assert report.results['check_poincare']['passed'] is True


def test_liecoh_skipped_check():
    with pytest.warns(UserWarning):
        report = cli.run_command(['liecoh', '--preset', 'borel_sl2', '--check', 'poincare'])
    assert report.exit_code == cli.EXIT_OK
    assert report.notes == ["check poincare skipped"]


def test_liecoh_degree():
    report = cli.run_command(['liecoh', '--preset', 'abelian_n', '--n', '4', '--degree', '2'])
    assert report.results['cohomology'] == {'2': 6}
    report = cli.run_command(['liecoh', '--preset', 'sl2_lie', '--degree', '7'])
    assert report.exit_code == cli.EXIT_FAILURE


def test_preset_self_test():
    report = cli.run_command(['preset', 'sl2_principal', '--self-test', '--dump'])
    assert report.exit_code == cli.EXIT_OK
    assert all(row['ok'] for row in report.results['self_test'])
    assert report.results['annotations']['kind'] == 'quiver'
    assert report.results['text'].startswith("# Principal block")


def test_cross_validate():
    report = cli.run_command(['cross-validate', 'sl3_singular'])
    assert report.exit_code == cli.EXIT_OK
    assert report.results['cross_validation']['matches'] is True


def test_main_text_output(capsys):
    assert cli.main(['gldim', 'sl2_principal']) == cli.EXIT_OK
    assert "gl_dim: 2" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ['--cap', '0', 'resolve', 'sl2_principal', 'L2'],
    ['resolve', 'sl2_principal', 'L2', '--cap', '0'],
])
def test_cap_position(argv):
    report = cli.run_command(argv)
    assert report.exit_code == cli.EXIT_OK
    assert report.results['status'] == homology.TRUNCATED


@pytest.mark.parametrize("argv", [
    ['--json', 'gldim', 'sl2_principal'],
    ['gldim', 'sl2_principal', '--json'],
])
def test_json_position(capsys, argv):
    assert cli.main(argv) == cli.EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['results']['gl_dim'] == 2


def test_flags_default():
    report = cli.run_command(['gldim', 'sl2_principal'])
    assert not report.json
    assert report.results['gl_dim'] == 2


@pytest.mark.parametrize("argv", [
    ['guichardet', 'sl3_singular'],
    ['ext-quiver', 'sl3_singular', '--max', '2'],
    ['liecoh', '--preset', 'heisenberg', '--check', 'top', '--check', 'euler'],
])
def test_json_reruns(argv):
    first = cli.run_command(argv).to_json()
    second = cli.run_command(argv).to_json()
    assert first == second
    assert json.loads(first)['exit_code'] == cli.EXIT_OK
