import csv
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from src.main import cli
from src.models.command import CommandConfig


@pytest.fixture
def runner():
    return CliRunner()


def labels(p1, q1, p2, q2):
    return ['--p1', str(p1), '--q1', str(q1), '--p2', str(p2), '--q2', str(q2)]


def test_decompose_text(runner):
    result = runner.invoke(cli, ['decompose', *labels(1, 0, 0, 1)])
    assert result.exit_code == 0
    assert '(1,1) x1' in result.output
    assert 'oracle agreement: ok' in result.output


def test_decompose_json(runner, tmp_path):
    out = tmp_path / 'octet.json'
    result = runner.invoke(cli, ['decompose', *labels(1, 1, 1, 1), '--json', str(out)])
    assert result.exit_code == 0
    assert result.output == ''
    data = json.loads(out.read_text())
    assert data['factors'] == [[1, 1], [1, 1]]
    octet = next(t for t in data['terms'] if (t['p'], t['q']) == (1, 1))
    assert octet['multiplicity'] == 2
    assert octet['c4prime_eigenvalues'] == ['3/4', '0']


def test_decompose_csv(runner, tmp_path):
    out = tmp_path / 'triplets.csv'
    result = runner.invoke(cli, ['decompose', *labels(1, 0, 1, 0), '--csv', str(out)])
    assert result.exit_code == 0
    with open(out, newline='') as f:
        rows = list(csv.reader(f))
    assert rows[0][:7] == ['p1', 'q1', 'p2', 'q2', 'p', 'q', 'multiplicity']
    assert len(rows) == 3


@pytest.mark.parametrize('args', [
    ['decompose', '--p1', '-1', '--q1', '0', '--p2', '0', '--q2', '0'],
    ['decompose', '--p1', '1'],
    ['decompose', *labels(1, 1, 1, 1), '--lambdas', '1', 'x', '0', '0'],
    ['verify', 'so42', '--nmax', '11'],
    ['verify', 'so42', '--nmax', '5', '--margin', '3'],
    ['verify', 'nothing'],
])
def test_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_verify_identities(runner):
    result = runner.invoke(cli, ['verify', 'identities', '--nmax', '3'])
    assert result.exit_code == 0
    assert 'identities' in result.output
    assert 'states=455' in result.output
    assert 'exact-pass' in result.output


def test_verify_json(runner, tmp_path):
    out = tmp_path / 'so42.json'
    result = runner.invoke(cli, ['verify', 'so42', '--nmax', '5', '--margin', '4', '--json', str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text()) == [
        {'identity': 'so42', 'nmax': 5, 'states_checked': 13, 'status': 'exact-pass'}]


def test_battery_single_pair(runner):
    result = runner.invoke(cli, ['battery', '--bound', '0'])
    assert result.exit_code == 0
    assert result.output.strip() == '(0,0) x (0,0) = (0,0)  [agree, distinct]'


def test_battery_json(runner, tmp_path):
    out = tmp_path / 'battery.json'
    result = runner.invoke(cli, ['battery', '--bound', '1', '--json', str(out)])
    assert result.exit_code == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 9
    assert all(row['agreement'] and row['dimension_check'] for row in rows)


def test_oracle(runner, tmp_path):
    result = runner.invoke(cli, ['oracle', *labels(1, 1, 1, 1)])
    assert result.exit_code == 0
    assert result.output.strip() == '(1,1) x (1,1) = (0,0) + (0,3) + 2(1,1) + (2,2) + (3,0)'
    out = tmp_path / 'oracle.json'
    runner.invoke(cli, ['oracle', *labels(1, 0, 0, 1), '--json', str(out)])
    assert json.loads(out.read_text()) == {
        'factors': [[1, 0], [0, 1]],
        'terms': [{'p': 0, 'q': 0, 'multiplicity': 1}, {'p': 1, 'q': 1, 'multiplicity': 1}],
    }


def test_spectrum(runner, tmp_path):
    result = runner.invoke(cli, ['spectrum', *labels(1, 1, 1, 1), '--p', '1', '--q', '1'])
    assert result.exit_code == 0
    assert '3/4  multiplicity 1' in result.output
    out = tmp_path / 'spectrum.json'
    runner.invoke(cli, ['spectrum', *labels(1, 1, 1, 1), '--p', '1', '--q', '1',
                        '--lambdas', '2', '0', '0', '0', '--json', str(out)])
    data = json.loads(out.read_text())
    assert data['multiplicity'] == 2
    assert [pair['value'] for pair in data['eigenpairs']] == ['3/2', '0']


def test_spectrum_of_absent_irrep(runner):
    result = runner.invoke(cli, ['spectrum', *labels(1, 0, 1, 0), '--p', '1', '--q', '1'])
    assert result.exit_code == 0
    assert 'does not occur' in result.output


def test_command_config_validation():
    config = CommandConfig('decompose', labels=(1, 1, 1, 1), lambdas=(1, '1/2', 0, 0))
    assert config.lambdas == (Fraction(1), Fraction(1, 2), Fraction(0), Fraction(0))
    assert config.format == 'text'
    assert CommandConfig('verify', json_path='x.json').to_dict()['format'] == 'json'
    with pytest.raises(ValueError):
        CommandConfig('decompose', labels=(1, -1, 0, 0))
    with pytest.raises(ValueError):
        CommandConfig('decompose', lambdas=(1, 0, 0))
    with pytest.raises(ValueError):
        CommandConfig('verify', nmax=11)


def test_decompose_with_singlet(runner):
    result = runner.invoke(cli, ['decompose', *labels(0, 0, 2, 1)])
    assert result.exit_code == 0
    assert '(2,1) x1' in result.output
    assert result.output.count(' x1 ') + result.output.count(' x2 ') == 1


@pytest.mark.slow
def test_battery_default_bound(runner, tmp_path):
    out = tmp_path / 'battery.json'
    result = runner.invoke(cli, ['battery', '--json', str(out)])
    assert result.exit_code == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 36
    octet = next(row for row in rows if row['factors'] == [[1, 1], [1, 1]])
    assert octet['distinct'] is True
    for row in rows:
        assert row['distinct'], row['factors']
        assert row['findings'] == [], row['factors']


@pytest.mark.slow
def test_decompose_json_marks_inexact_eigenvalues(runner, tmp_path):
    out = tmp_path / 'inexact.json'
    result = runner.invoke(cli, ['decompose', *labels(2, 1, 1, 1), '--json', str(out)])
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    term = next(t for t in data['terms'] if (t['p'], t['q']) == (2, 1))
    assert term['exact'] is False
    assert term['digits'] == 50
    assert len(term['error_bound']) == len(term['c4prime_eigenvalues']) == 2
