import numpy as np
import pytest

from fourierqc.circuit import CircuitError, from_ops
from fourierqc.protocols import (
    BELL_VARIANTS,
    QSS_VARIANTS,
    TELEPORT_VARIANTS,
    apply,
    basis_state,
    bell_pair,
    branch_tables_agree,
    check_normalized,
    fidelity,
    from_bitstring,
    ghz,
    measure,
    qss,
    qubit_state,
    sample,
    secret_sharing,
    state_distance,
    teleport,
    teleportation,
)


def random_qubit(rng):
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def test_bitstring_is_ket_order():
    psi = from_bitstring("10")  # q1 = 1, q0 = 0
    assert psi[2] == 1


@pytest.mark.parametrize("variant", BELL_VARIANTS)
def test_bell_variants(variant):
    out = apply(bell_pair(variant), basis_state(2))
    assert state_distance(out, np.array([1, 0, 0, 1]) / np.sqrt(2)) < 1e-12


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("variant", BELL_VARIANTS)
def test_ghz_variants(n, variant):
    out = apply(ghz(n, variant), basis_state(n))
    expect = np.zeros(2**n)
    expect[[0, -1]] = 1 / np.sqrt(2)
    assert state_distance(out, expect) < 1e-12


def test_resource_errors():
    with pytest.raises(ValueError):
        bell_pair("z")
    with pytest.raises(ValueError):
        ghz(5)
    with pytest.raises(ValueError):
        teleportation("e")
    with pytest.raises(ValueError):
        secret_sharing(2)


def test_measure_branch_order_and_post_states():
    bell = apply(bell_pair(), basis_state(2))
    branches = measure(bell, [0])
    assert [b.outcome for b in branches] == [(0,), (1,)]
    assert np.allclose(branches[0].state, [1, 0])
    assert np.allclose(branches[1].state, [0, 1])
    assert all(abs(b.probability - 0.5) < 1e-12 for b in branches)


def test_measure_drops_impossible_outcomes():
    assert [b.bitstring for b in measure(from_bitstring("101"), [0, 2])] == ["11"]


def test_measure_rejects_bad_qubits():
    with pytest.raises(ValueError):
        measure(basis_state(2), [0, 0])
    with pytest.raises(ValueError):
        measure(basis_state(2), [2])


def test_sample_is_seeded():
    bell = apply(bell_pair(), basis_state(2))
    a = sample(bell, [0, 1], 1000, seed=7)
    assert a == sample(bell, [0, 1], 1000, seed=7)
    assert set(a) == {"00", "11"} and sum(a.values()) == 1000


def test_normalization_checked():
    with pytest.raises(ValueError):
        qubit_state(1, 1)
    with pytest.raises(ValueError):
        check_normalized(np.array([0.5, 0]))
    with pytest.raises(ValueError):
        teleport(np.array([1, 1]))


def test_apply_width_mismatch():
    with pytest.raises(CircuitError):
        apply(from_ops(1, [("h", 0)]), basis_state(2))


def test_fidelity_ignores_phase():
    psi = qubit_state(0.6, 0.8j)
    assert abs(fidelity(np.exp(0.3j) * psi, psi) - 1) < 1e-15


def test_teleport_classical_table_is_textbook():
    # outcome (m0, m1): X^m1 then Z^m0
    table = teleportation("a").corrections
    assert table == {(0, 0): "I", (1, 0): "Z", (0, 1): "X", (1, 1): "XZ"}
    assert teleportation("b").corrections == table
    assert teleportation("b").suffix("Z").unitary() @ np.array([0, 1]) == pytest.approx([0, -1])


@pytest.mark.parametrize("parties", [3, 4])
def test_qss_classical_table(parties):
    table = secret_sharing(parties, "a").corrections
    for outcome, pauli in table.items():
        m0, m1, helpers = outcome[0], outcome[1], outcome[2:]
        expect = ("X" if m1 else "") + ("Z" if (m0 + sum(helpers)) % 2 else "")
        assert pauli == (expect or "I")


@pytest.mark.parametrize("variant", TELEPORT_VARIANTS)
def test_teleport_all_branches(variant):
    rng = np.random.default_rng(1)
    for _ in range(5):
        psi = random_qubit(rng)
        res = teleport(psi, variant)
        assert len(res.branches) == 4
        assert all(abs(b.probability - 0.25) < 1e-12 for b in res.branches)
        assert res.min_fidelity >= 1 - 1e-12


@pytest.mark.parametrize("variant", ["c", "d"])
def test_coherent_teleport_needs_no_correction(variant):
    res = teleport(qubit_state(0.6, 0.8), variant)
    assert {b.correction for b in res.branches} == {"I"}


@pytest.mark.parametrize("parties", [3, 4])
@pytest.mark.parametrize("variant", QSS_VARIANTS)
def test_qss_branches(parties, variant):
    rng = np.random.default_rng(2)
    psi = random_qubit(rng)
    res = qss(psi, parties, variant)
    assert len(res.branches) == 2**parties
    assert abs(res.total_probability - 1) < 1e-10
    assert res.min_fidelity >= 1 - 1e-10
    assert branch_tables_agree(res, qss(psi, parties, "a"))


def test_branch_tables_disagree_on_different_inputs():
    a = teleport(qubit_state(1, 0))
    b = teleport(qubit_state(0, 1))
    assert not branch_tables_agree(a, b)


def test_result_json_shape():
    import json

    rows = json.loads(teleport(qubit_state(1, 0)).to_json())
    assert [r["outcome"] for r in rows] == ["00", "01", "10", "11"]
    assert set(rows[0]) == {"outcome", "probability", "correction", "post_state", "fidelity"}
