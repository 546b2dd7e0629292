import numpy as np
import pytest

from fourierqc import gates as g
from fourierqc.linalg import dist_up_to_phase, flip_h, flip_v, is_unitary

S2 = 1 / np.sqrt(2)


def test_every_catalog_gate_is_unitary_and_sized():
    for name, gd in g.catalog().items():
        assert gd.matrix.shape == (2**gd.arity, 2**gd.arity), name
        assert is_unitary(gd.matrix, 1e-12), name


def test_catalog_matrices_are_read_only():
    m = g.catalog()["h"].matrix
    with pytest.raises(ValueError):
        m[0, 0] = 0


def test_derived_gates_equal_literals_exactly():
    lit = {"id": g.I2, "x": g.X, "z": g.Z, "y": g.Y, "sdg": g.SDG, "tdg": g.TDG,
           "udg": g.UDG, "v": g.V, "vdg": g.VDG}
    cat = g.catalog()
    for name, m in lit.items():
        assert cat[name].provenance is g.Provenance.DERIVED
        assert np.max(np.abs(cat[name].matrix - m)) <= 1e-13


def test_pauli_recipes_from_hadamard():
    h = g.H
    assert np.allclose(h @ h, g.I2, atol=1e-13)
    assert np.allclose(flip_h(h @ h), g.X, atol=1e-13)
    hf = flip_h(h)
    assert np.allclose(g.X @ hf @ hf, g.Z, atol=1e-13)
    assert np.allclose(1j * flip_h(g.Z), g.Y, atol=1e-13)
    assert np.allclose(1j * g.X @ g.Z, g.Y, atol=1e-13)


def test_splitting_and_recombining():
    assert np.allclose(g.SPLITTING, g.X @ g.H)
    assert np.allclose(g.RECOMBINING, g.H @ g.X)
    assert np.allclose(flip_v(g.H), g.RECOMBINING)


def test_phase_chain():
    assert np.allclose(g.U @ g.U, g.T, atol=1e-13)
    assert np.allclose(g.T @ g.T, g.S, atol=1e-13)
    assert np.allclose(g.S @ g.S, g.Z, atol=1e-13)
    assert np.allclose(g.phase(np.pi / 8), g.U)


def test_sqrt_not():
    assert np.allclose(g.V @ g.V, g.X, atol=1e-13)
    assert np.allclose(g.VDG @ g.VDG, g.X, atol=1e-13)
    assert np.allclose(g.V @ g.VDG, g.I2, atol=1e-13)


def test_cnot_orientations():
    b = g.cnot("b").matrix
    a = g.cnot("a").matrix
    assert np.array_equal(b, g.CNOT)
    # b exchanges indices 1 and 3, a exchanges 2 and 3
    assert b[3, 1] == 1 and b[1, 3] == 1
    assert a[3, 2] == 1 and a[2, 3] == 1
    hh = np.kron(g.H, g.H)
    assert np.allclose(hh @ a @ hh, b, atol=1e-13)


def test_sqrt_cnot_squares_to_cnot():
    m = g.sqrt_cnot().matrix
    assert np.allclose(m @ m, g.CNOT, atol=1e-13)


def test_controlled_block_form():
    u = g.V
    c = g.controlled(u)
    assert np.array_equal(c[:2, :2], np.eye(2))
    assert np.array_equal(c[2:, 2:], u)
    a = g.anti_controlled(u)
    assert np.array_equal(a[:2, :2], u)
    assert np.array_equal(a[2:, 2:], np.eye(2))


def test_controlled_rejects_non_unitary():
    with pytest.raises(g.NotUnitaryError):
        g.controlled(np.array([[1, 1], [0, 1]]))


def test_controlled_q0_convention_matches_cnot():
    assert np.array_equal(g.controlled_q0(g.X), g.CNOT)


@pytest.mark.parametrize(
    "name, images",
    [
        ("ccx", {3: 7, 7: 3}),
        ("cswap", {3: 5, 5: 3}),
        ("peres", {1: 3, 3: 5, 5: 7, 7: 1}),
        ("miller", {3: 4, 4: 3}),
    ],
)
def test_three_qubit_permutations(name, images):
    m = g.catalog()[name].matrix
    for k in range(8):
        expect = images.get(k, k)
        assert m[expect, k] == 1, (name, k)


def test_gatedef_arity_mismatch():
    with pytest.raises(ValueError):
        g.GateDef("bad", 2, np.eye(2))


def test_inverse_names_are_inverses():
    cat = g.catalog()
    for a, b in g.INVERSE_NAMES.items():
        assert np.allclose(cat[a].matrix @ cat[b].matrix, np.eye(2), atol=1e-13)
    for name in g.SELF_INVERSE:
        if name in cat:
            m = cat[name].matrix
            assert np.allclose(m @ m, np.eye(len(m)), atol=1e-13), name


def test_named_controlled_gates_use_q0_as_control():
    cat = g.catalog()
    cz = cat["cz"].matrix
    assert np.allclose(cz, np.diag([1, 1, 1, -1]))
    cs = cat["cs"].matrix
    assert dist_up_to_phase(cs, np.diag([1, 1, 1, 1j]))[0] < 1e-13
    # controlled-Y: q0 = 1 applies Y to q1
    cy = cat["cy"].matrix
    assert cy[3, 1] == 1j and cy[1, 3] == -1j
