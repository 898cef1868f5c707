import json
import math
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

CONNECTION = str(
    Path(__file__).resolve().parent / 'fixtures' / 'dirac_dependence.json'
)


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


def run_json(*args, **options):
    return json.loads(run(*args, **options).strip().splitlines()[-1])


def exit_code(*args, **options):
    with pytest.raises(CommandError) as error:
        run(*args, **options)
    return error.value.returncode


def test_commutators_report():
    data = run_json('commutators')

    alpha = data['commutators']['alpha']
    assert data['dirac'] == 'd1'
    assert set(data['commutators']) == {
        'alpha', 'beta', 'alpha*', 'beta*', 'u', 'v', 'u*', 'v*',
    }
    assert alpha['11']['modes'][0]['terms'][0]['re'] == -1.0
    assert alpha['12']['modes'] == []
    assert alpha['21']['modes'][0]['p'] == 0
    assert alpha['21']['modes'][0]['q'] == -1


def test_spectrum_csv():
    content = run('spectrum', dirac='d1', cutoff=2, format='csv')

    lines = content.strip().splitlines()
    assert lines[0] == 'eigenvalue,multiplicity,family'
    assert lines[1] == '1.5,2,+'
    assert len(lines) == 7


def test_spectrum_markdown():
    content = run('spectrum', dirac='d3', cutoff=1, format='markdown')

    assert 'eigenvalue' in content
    assert '|' in content


@pytest.mark.parametrize('dirac, expected', [
    ('d1', -2.0), ('d2', 0.0), ('d3', -4.0),
])
def test_cs_action_dirac_dependence(dirac, expected):
    data = run_json(
        'cs_action', CONNECTION, dirac=dirac, psi=str(math.pi / 3)
    )

    assert data['value_number'][0] == pytest.approx(expected)
    assert data['engine_number'][0] == pytest.approx(expected, abs=1e-9)
    assert data['delta'] < 1e-9


def test_cs_action_haar_average():
    d1 = run_json('cs_action', CONNECTION, dirac='d1')
    d3 = run_json('cs_action', CONNECTION, dirac='d3')

    assert d1['value_number'][0] == pytest.approx(-2.0)
    assert d3['value_number'] is None
    assert d3['value']['rendered'] == '-c^-2'


def test_cs_action_reports_theorem_sum():
    d1 = run_json('cs_action', CONNECTION, dirac='d1')
    d3 = run_json('cs_action', CONNECTION, dirac='d3', psi=str(math.pi / 3))

    assert d1['theorem']['rendered'] == d1['value']['rendered']
    assert d1['theorem_phase_gap'] == pytest.approx(0.0, abs=1e-12)
    assert d3['theorem']['rendered'] == '-2c^-2'
    assert d3['theorem_phase_gap'] == pytest.approx(0.0, abs=1e-12)


def test_cs_action_from_stdin():
    with open(CONNECTION, encoding='utf-8') as file:
        payload = file.read()

    data = run_json('cs_action', '-', stdin=StringIO(payload))

    assert data['pairs'] == 1
    assert data['value_number'][0] == pytest.approx(-2.0)


def test_partition_report():
    data = run_json('partition', theta=0.5, level=1, cutoff=1)

    expected = math.pi * complex(-1, 1) / math.sqrt(2)
    assert data['value'] == pytest.approx([expected.real, expected.imag])
    assert data['closed'] == pytest.approx(data['value'])
    assert data['rewritten'] == pytest.approx(data['value'])
    assert data['classical'] == pytest.approx(math.sqrt(2) / 2)
    assert data['degenerate'] == 2
    assert data['identity_chain'][0]['sine'] == pytest.approx([0.0, 0.5])


def test_partition_at_zero_level():
    content = run('partition', level=0)

    data = json.loads(content.strip().splitlines()[-1])
    assert 'k = 0' in content
    assert data == {
        'k': 0, 'theta': pytest.approx((math.sqrt(5) - 1) / 2), 'N': 3,
        'classical': pytest.approx(1.0),
    }


def test_partition_is_deterministic():
    options = {'theta': 0.3141, 'level': 2, 'cutoff': 5, 'format': 'csv'}

    assert run('partition', **options) == run('partition', **options)


def test_report_written_to_file(tmp_path):
    target = tmp_path / 'spectrum.json'

    content = run('spectrum', out=str(target))

    assert str(target) in content
    data = json.loads(target.read_text(encoding='utf-8'))
    assert data['rows'][0]['multiplicity'] == 2


def test_missing_connection_file_is_parse_error(tmp_path):
    assert exit_code('cs_action', str(tmp_path / 'missing.json')) == 2


def test_broken_json_is_parse_error():
    assert exit_code('cs_action', '-', stdin=StringIO('{"theta": ')) == 2


@pytest.mark.parametrize('options', [
    {'tolerance': 1e-3},
    {'psi': '2.0'},
    {'xi': '-1'},
    {'format': 'xml'},
    {'dirac': 'd4'},
])
def test_invalid_options_are_validation_errors(options):
    assert exit_code('spectrum', **options) == 3


def test_invalid_connection_document_is_validation_error():
    document = json.dumps({'theta': 0.5, 'pairs': [{'a': {}}]})

    assert exit_code('cs_action', '-', stdin=StringIO(document)) == 3


def test_non_self_adjoint_connection_is_validation_error():
    with open(CONNECTION, encoding='utf-8') as file:
        payload = json.load(file)
    pair = payload['pairs'][0]
    pair['a'], pair['b'] = pair['b'], pair['a']

    code = exit_code('cs_action', '-', stdin=StringIO(json.dumps(payload)))

    assert code == 3


def test_resonance_is_numeric_error():
    assert exit_code('partition', theta=0.5, cutoff=2) == 4


def test_context_mismatch_exit_code():
    assert exit_code('cs_action', CONNECTION, theta=0.3) == 5
