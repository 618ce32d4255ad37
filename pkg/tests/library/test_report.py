import numpy as np
import pytest
from tangle_shared.enums import QubitLabel
from tangle_shared.exceptions import InvalidPermutationError, UnnormalizedStateError
from tangle_shared.invariants import (
    ThreeQubitInvariants,
    full_report,
    reports_for_all,
    two_qubit_invariant_list,
)
from tangle_shared.qubits import QubitPermutation, make_state, permute_qubits, random_state
from tangle_shared.schemas.report import InvariantReportSchema
from tangle_shared.verify.residual import relative_spread


def test_two_qubit_invariant_list(ghz4, w4, product4):
    invariants = dict(two_qubit_invariant_list(ghz4))
    assert len(invariants) == 14
    assert invariants['D^0000 - D^0100'] == pytest.approx(0.5)
    assert invariants['D^0001 - D^0101'] == 0
    assert dict(two_qubit_invariant_list(w4))['D_(A3)0(A4)0^00'] == pytest.approx(-0.25)
    assert all(value == 0 for _, value in two_qubit_invariant_list(product4))


def test_two_qubit_invariant_labels(cluster4):
    labels = [item.label for item in two_qubit_invariant_list(cluster4)]
    assert labels[:4] == [
        'D_(A3)0(A4)0^00',
        'D_(A3)0(A4)1^00',
        'D_(A3)1(A4)0^00',
        'D_(A3)1(A4)1^00',
    ]
    assert 'D_(A3)1^001 - D_(A3)1^011' in labels
    assert 'D_(A4)0^001 - D_(A4)0^011' in labels


@pytest.mark.parametrize('label', ['A4', 'A1', QubitLabel.A3])
def test_ghz4_report(ghz4, label):
    report = full_report(ghz4, label)
    assert report.distinguished_qubit == QubitLabel(label)
    assert report.tau4 == pytest.approx(1.0)
    assert report.delta == pytest.approx(0, abs=1e-15)
    assert report.t == pytest.approx(1 / 24)
    assert not report.degenerate


def test_product4_report_is_zero(product4):
    for report in reports_for_all(product4):
        values = report.three_qubit_invariants.as_dict().values()
        assert all(value == 0 for value in values)
        assert report.i48 == report.j == report.delta == 0
        assert report.tau4 == 0.0


def test_report_relabels_distinguished_qubit():
    state = random_state(4, 31)
    report = full_report(state, 'A2')
    relabeled = permute_qubits(state, QubitPermutation.to_last('A2'))
    assert report.three_qubit_invariants == ThreeQubitInvariants.from_state(relabeled)


def test_report_i48_consistency():
    report = full_report(random_state(4, 12), 'A4')
    t, i3_0, i3_1, p_0, p_1 = report.t, report.i3_0, report.i3_1, report.p_0, report.p_1
    assert report.i48 == pytest.approx(3 * t**2 + i3_0 * i3_1 - 4 * p_0 * p_1, rel=1e-12)
    assert report.tau4 >= 0.0


@pytest.mark.parametrize('seed', range(5))
def test_delta_agrees_across_distinguished_qubits(seed):
    reports = reports_for_all(random_state(4, seed))
    assert [report.distinguished_qubit for report in reports] == list(QubitLabel)
    assert relative_spread([report.delta for report in reports], 1e-12) <= 1e-9


def test_degenerate_state_report():
    report = full_report(make_state(4, np.zeros(16)), 'A1')
    assert report.degenerate
    assert report.tau4 == 0.0


def test_unnormalized_state_report(ghz4):
    with pytest.raises(UnnormalizedStateError):
        full_report(ghz4.scaled(3.0), 'A4')


def test_invalid_label(ghz4):
    with pytest.raises(InvalidPermutationError, match='A7'):
        full_report(ghz4, 'A7')


def test_report_schema(cluster4):
    schema = InvariantReportSchema.from_report(full_report(cluster4, 'A4'))
    assert schema.distinguished_qubit == 'A4'
    assert schema.t == pytest.approx((1 / 24, 0))
    assert schema.three_qubit_moduli['t'] == pytest.approx(1 / 24)
    assert len(schema.two_qubit_invariants) == 14
