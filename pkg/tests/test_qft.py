import numpy as np
import pytest

from fourierqc import gates as g
from fourierqc.linalg import dist_up_to_phase, is_unitary
from fourierqc.qft import (
    QftSpec,
    bit_reversal,
    iqft_circuit,
    iqft_matrix,
    negation_permutation,
    qft_circuit,
    qft_matrix,
    qft_squared_circuit,
)

# printed 4x4 transform and its inverse
F4 = np.array([[1, 1, 1, 1], [1, 1j, -1, -1j], [1, -1, 1, -1], [1, -1j, -1, 1j]]) / 2
F4_INV = np.array([[1, 1, 1, 1], [1, -1j, -1, 1j], [1, -1, 1, -1], [1, 1j, -1, -1j]]) / 2


def fft_oracle(n):
    dim = 2**n
    # ifft uses e^{+2 pi i uv/N}/N
    return np.fft.ifft(np.eye(dim), axis=0) * np.sqrt(dim)


@pytest.mark.parametrize("n", range(0, 11))
def test_matrix_matches_fft_oracle(n):
    assert np.allclose(qft_matrix(n), fft_oracle(n), atol=1e-12)


def test_printed_literals():
    assert np.array_equal(qft_matrix(1), g.H)
    assert np.max(np.abs(qft_matrix(2) - F4)) < 1e-12
    assert np.max(np.abs(iqft_matrix(2) - F4_INV)) < 1e-12
    assert np.array_equal(qft_matrix(0), np.ones((1, 1)))


def test_bounds():
    with pytest.raises(ValueError):
        qft_matrix(13)
    with pytest.raises(ValueError):
        qft_matrix(-1)
    with pytest.raises(ValueError):
        qft_circuit(0)
    with pytest.raises(ValueError):
        QftSpec(13)
    with pytest.raises(ValueError):
        qft_squared_circuit(5)


@pytest.mark.parametrize("n", range(1, 9))
def test_f_to_the_fourth_is_identity(n):
    f = qft_matrix(n)
    f2 = f @ f
    assert np.allclose(f2, negation_permutation(n), atol=1e-9)
    assert np.allclose(f2 @ f2, np.eye(2**n), atol=1e-9)
    assert is_unitary(f, 1e-10)


@pytest.mark.parametrize("n", range(1, 9))
def test_circuits_match_matrix(n):
    assert dist_up_to_phase(qft_circuit(n).unitary(), qft_matrix(n))[0] < 1e-9
    assert dist_up_to_phase(iqft_circuit(n).unitary(), iqft_matrix(n))[0] < 1e-9


@pytest.mark.parametrize("n", range(1, 7))
def test_swapless_circuit_is_reversal_times_transform(n):
    c = qft_circuit(n, include_final_swaps=False)
    assert np.allclose(bit_reversal(n) @ c.unitary(), qft_matrix(n), atol=1e-10)


def test_ladder_uses_named_phase_gates_then_inline():
    names = [op.name for op in qft_circuit(5).ops]
    assert {"s", "t", "u", "p(pi/16)", "swap", "h"} <= set(names)
    inv = [op.name for op in iqft_circuit(4).ops]
    assert {"sdg", "tdg", "udg"} <= set(inv)


def test_qft2_layout():
    names = [(op.name, op.targets, op.controls) for op in qft_circuit(2).ops]
    assert names == [("h", (1,), ()), ("s", (1,), (0,)), ("h", (0,), ()), ("swap", (0, 1), ())]


@pytest.mark.parametrize("n, ops", [(2, 4), (3, 10), (4, 18)])
@pytest.mark.parametrize("inverse", [False, True])
def test_swap_free_square(n, ops, inverse):
    c = qft_squared_circuit(n, inverse)
    assert len(c) == ops
    assert all(op.name != "swap" for op in c.ops)
    f = iqft_matrix(n) if inverse else qft_matrix(n)
    assert dist_up_to_phase(c.unitary(), f @ f)[0] < 1e-10


def test_two_qubit_square_is_cnot_both_ways():
    assert np.allclose(F4 @ F4, g.CNOT, atol=1e-12)
    assert np.allclose(F4_INV @ F4_INV, g.CNOT, atol=1e-12)
    assert [op.name for op in qft_squared_circuit(2).ops] == ["h", "s", "s", "h"]


def test_plain_ladder_twice_is_not_cnot():
    # dropping the swaps without mirroring the second copy gives a different gate
    ladder = qft_circuit(2, include_final_swaps=False)
    dist, _ = dist_up_to_phase((ladder + ladder).unitary(), g.CNOT)
    assert abs(dist - np.sqrt(3)) < 1e-9
