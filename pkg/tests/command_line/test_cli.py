import asyncio
import io
import json
from argparse import Namespace
from pathlib import Path

import pytest
from cli.core.commands.verify import VerifyCommand
from cli.core.config import get_main_config
from cli.core.schemas import TolerancesSchema
from main import main

STATES_DIR = Path(__file__).parents[2] / 'app_cli' / 'states'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_state(path, n_qubits, amplitudes):
    data = {'version': 1, 'n_qubits': n_qubits, 'amplitudes': amplitudes}
    path.write_text(json.dumps(data))
    return str(path)


def test_compute_builtin_json(capsys):
    code, out, _ = run(capsys, 'compute', '--state', 'ghz4', '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert document['label'] == 'ghz4'
    assert document['n_qubits'] == 4
    [report] = document['reports']
    assert report['distinguished_qubit'] == 'A4'
    assert report['tau4'] == pytest.approx(1.0)
    assert report['i48'] == pytest.approx([1 / 192, 0.0])
    assert len(report['two_qubit_invariants']) == 14


def test_compute_builtin_text(capsys):
    code, out, _ = run(capsys, 'compute', '--state', 'cluster4')
    assert code == 0
    assert '[A4 distinguished]' in out
    assert '  tau4 = 1\n' in out


def test_compute_all_distinguished_qubits(capsys):
    code, out, _ = run(
        capsys, 'compute', '--state', 'ghz4', '--distinguished', 'all', '--format', 'json'
    )
    assert code == 0
    document = json.loads(out)
    assert [r['distinguished_qubit'] for r in document['reports']] == ['A1', 'A2', 'A3', 'A4']
    assert document['delta_spread'] == 0.0
    assert document['i48_spread'] == 0.0


def test_compute_three_qubit_state(capsys):
    code, out, _ = run(capsys, 'compute', '--state', 'ghz3')
    assert code == 0
    assert 'tau3 = 1\n' in out


def test_compute_example_state_file(capsys):
    code, out, _ = run(
        capsys, 'compute', '--file', str(STATES_DIR / 'cluster4.json'), '--format', 'json'
    )
    assert code == 0
    document = json.loads(out)
    assert document['label'] == 'cluster4'
    assert document['reports'][0]['tau4'] == pytest.approx(1.0)


def test_compute_normalizes_file_state(capsys, tmp_path):
    amplitudes = [[0.0, 0.0] for _ in range(16)]
    amplitudes[0] = amplitudes[15] = [2.0, 0.0]
    path = write_state(tmp_path / 'ghz.json', 4, amplitudes)
    code, out, _ = run(capsys, 'compute', '--file', path, '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert document['label'] == 'ghz.json'
    assert document['original_norm'] == pytest.approx(8**0.5)
    assert document['reports'][0]['tau4'] == pytest.approx(1.0)


def test_compute_degenerate_file_state(capsys, tmp_path):
    path = write_state(tmp_path / 'zero.json', 4, [[0.0, 0.0] for _ in range(16)])
    code, out, _ = run(capsys, 'compute', '--file', path, '--format', 'json')
    assert code == 0
    document = json.loads(out)
    assert document['degenerate']
    assert document['reports'][0]['tau4'] == 0.0


def test_compute_malformed_file(capsys, tmp_path):
    path = write_state(tmp_path / 'short.json', 4, [[0.0, 0.0] for _ in range(15)])
    code, out, err = run(capsys, 'compute', '--file', path)
    assert code == 2
    assert out == ''
    assert 'expected 16 amplitudes for 4 qubits, got 15' in err


def test_compute_unknown_state(capsys):
    code, _, err = run(capsys, 'compute', '--state', 'bell')
    assert code == 2
    assert 'invalid choice' in err


def test_compute_json_fields_are_stable(capsys, tmp_path):
    zero = write_state(tmp_path / 'zero.json', 4, [[0.0, 0.0] for _ in range(16)])
    invocations = [
        ('--state', 'ghz4'),
        ('--state', 'ghz3'),
        ('--file', zero),
        ('--state', 'cluster4', '--distinguished', 'all'),
    ]
    document_keys, report_keys = set(), set()
    for extra in invocations:
        code, out, _ = run(capsys, 'compute', *extra, '--format', 'json')
        assert code == 0
        document = json.loads(out)
        document_keys.add(tuple(document))
        report_keys.update(tuple(report) for report in document['reports'])
    assert document_keys == {
        (
            'label',
            'n_qubits',
            'original_norm',
            'degenerate',
            'reports',
            'tau3',
            'i3',
            'delta_spread',
            'i48_spread',
        )
    }
    assert report_keys == {
        (
            'distinguished_qubit',
            'i3_0',
            'i3_1',
            'p_0',
            'p_1',
            't',
            'three_qubit_moduli',
            'i48',
            'j',
            'delta',
            'tau4',
            'two_qubit_invariants',
            'degenerate',
        )
    }


def test_verify_outputs_json_lines(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'all', '--trials', '3', '--seed', '1')
    assert code == 0
    outcomes = [json.loads(line) for line in out.splitlines()]
    assert [o['name'] for o in outcomes] == ['transformation', 'lu', 'homogeneity', 'cross_triple']
    assert all(o['pass'] and o['trials'] == 3 and o['seed'] == 1 for o in outcomes)


def test_verify_is_reproducible(capsys):
    argv = ('verify', '--suite', 'transformation', '--trials', '20', '--seed', '7')
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]


def test_verify_failure_exit_code():
    tolerances = TolerancesSchema(rel=1e-300, abs_floor=1e-300, invariance_rel=1e-300)
    conf = get_main_config().model_copy(
        update={'verify': get_main_config().verify.model_copy(update={'tolerances': tolerances})}
    )
    args = Namespace(suite='homogeneity', trials=5, seed=1, rel=None)
    out = io.StringIO()
    assert asyncio.run(VerifyCommand(args=args, conf=conf, out=out).run()) == 1
    assert json.loads(out.getvalue())['pass'] is False


def test_verify_rejects_inconsistent_tolerance(capsys):
    code, _, err = run(capsys, 'verify', '--suite', 'lu', '--trials', '1', '--rel', '1e-300')
    assert code == 2
    assert 'abs_floor must not exceed rel' in err


def test_verify_rejects_zero_trials(capsys):
    code, _, err = run(capsys, 'verify', '--trials', '0')
    assert code == 2
    assert 'trials ≥ 1 required' in err


def test_catalog(capsys):
    code, out, _ = run(capsys, 'catalog')
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert 'ghz4 τ4=1 [DERIVED] (|0000> + |1111>)/sqrt(2)' in lines
    assert any(line.startswith('product4 τ4=0 [TRIVIAL]') for line in lines)
    assert any(line.startswith('ghz3 τ3=1 [DERIVED]') for line in lines)


def test_compute_w4_text(capsys):
    code, out, _ = run(capsys, 'compute', '--state', 'w4')
    assert code == 0
    assert '  tau4 = 0\n' in out


def test_verify_lu_is_byte_identical(capsys):
    argv = ('verify', '--suite', 'lu', '--trials', '10', '--seed', '3')
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_verify_acceptance_run(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'all', '--trials', '200', '--seed', '1')
    assert code == 0
    outcomes = [json.loads(line) for line in out.splitlines()]
    assert len(outcomes) == 4
    assert all(outcome['pass'] for outcome in outcomes)


def test_catalog_is_stable(capsys):
    first = run(capsys, 'catalog')[1]
    assert first == run(capsys, 'catalog')[1]
    assert any(line.startswith('w4 τ4=0 [DERIVED]') for line in first.splitlines())
