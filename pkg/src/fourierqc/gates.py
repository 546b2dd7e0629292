"""Named gate matrices, derived from the Hadamard matrix where possible.

Two-qubit catalog entries follow the q0-control convention: for ``cx`` the
control is local qubit 0 (the least significant bit of the basis index) and
the target is local qubit 1, so the matrix exchanges amplitudes 1 and 3.
The generic builders :func:`controlled` and :func:`anti_controlled` instead
put the control on the *high* bit of the block, which is what makes the
block-diagonal form ``[[I, 0], [0, U]]`` literal. Wire placement is left to
:mod:`fourierqc.circuit`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import DEFAULT_TOL, as_matrix, flip_h, flip_v, identity, is_unitary

SQRT1_2 = 1 / np.sqrt(2)


class NotUnitaryError(ValueError):
    pass


class Provenance(enum.Enum):
    LITERAL = "literal"
    DERIVED = "derived-recipe"


class CnotOrientation(enum.Enum):
    CONTROL_Q1_TARGET_Q0 = "a"
    CONTROL_Q0_TARGET_Q1 = "b"


@dataclass(frozen=True, eq=False)
class GateDef:
    name: str
    arity: int
    matrix: np.ndarray
    provenance: Provenance = Provenance.LITERAL

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[0] != 2**self.arity:
            raise ValueError(f"{self.name}: matrix dim {m.shape[0]} does not match arity {self.arity}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def _literal(rows) -> np.ndarray:
    m = np.array(rows, dtype=np.complex128)
    m.setflags(write=False)
    return m


def _derived(name: str, recipe: np.ndarray, literal: np.ndarray) -> GateDef:
    # the recipes are closed forms, so anything beyond rounding is a bug;
    # once checked, keep the literal so permutation gates stay exact
    if not np.allclose(recipe, literal, rtol=0, atol=1e-13):
        raise AssertionError(f"recipe for {name} does not reproduce its literal matrix")
    return GateDef(name, int(np.log2(literal.shape[0])), literal, Provenance.DERIVED)


H = _literal([[SQRT1_2, SQRT1_2], [SQRT1_2, -SQRT1_2]])
I2 = _literal(np.eye(2))
X = _literal([[0, 1], [1, 0]])
Y = _literal([[0, -1j], [1j, 0]])
Z = _literal([[1, 0], [0, -1]])
S = _literal(np.diag([1, 1j]))
SDG = _literal(np.diag([1, -1j]))
T = _literal(np.diag([1, np.exp(1j * np.pi / 4)]))
TDG = _literal(np.diag([1, np.exp(-1j * np.pi / 4)]))
U = _literal(np.diag([1, np.exp(1j * np.pi / 8)]))
UDG = _literal(np.diag([1, np.exp(-1j * np.pi / 8)]))
V = _literal((1 + 1j) / 2 * np.array([[1, -1j], [-1j, 1]]))
VDG = _literal((1 + 1j) / 2 * np.array([[-1j, 1], [1, -1j]]))

SWAP = _literal([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
CNOT = _literal([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]])
SQRT_CNOT = _literal(
    [
        [1, 0, 0, 0],
        [0, (1 + 1j) / 2, 0, (1 - 1j) / 2],
        [0, 0, 1, 0],
        [0, (1 - 1j) / 2, 0, (1 + 1j) / 2],
    ]
)

# splitting / recombining operators of the interferometer picture
SPLITTING = _literal(flip_h(H))
RECOMBINING = _literal(flip_v(H))


def phase(angle: float) -> np.ndarray:
    """``diag(1, e^{i angle})``."""
    return np.diag([1, np.exp(1j * angle)]).astype(np.complex128)


def pauli_from_hadamard() -> dict[str, GateDef]:
    """Build I, X, Z, Y from H using products and row flips only."""
    i_ = H @ H
    x_ = flip_h(i_)
    h_flipped = flip_h(H)
    z_ = x_ @ (h_flipped @ h_flipped)
    assert np.allclose(z_, H @ x_ @ H, atol=1e-13)
    y_ = 1j * flip_h(z_)
    return {
        "id": _derived("id", i_, I2),
        "x": _derived("x", x_, X),
        "z": _derived("z", z_, Z),
        "y": _derived("y", y_, Y),
    }


def phase_gates() -> dict[str, GateDef]:
    return {
        "s": GateDef("s", 1, S),
        "sdg": _derived("sdg", S.conj(), SDG),
        "t": GateDef("t", 1, T),
        "tdg": _derived("tdg", T.conj(), TDG),
        "u": GateDef("u", 1, U),
        "udg": _derived("udg", U.conj(), UDG),
    }


def sqrt_not_gates() -> dict[str, GateDef]:
    return {
        "v": _derived("v", H @ T @ T @ H, V),
        "vdg": _derived("vdg", H @ TDG @ TDG @ H, VDG),
    }


def cnot(orientation: CnotOrientation | str = CnotOrientation.CONTROL_Q0_TARGET_Q1) -> GateDef:
    """CNOT in either qubit order.

    ``b`` (control q0, target q1) is the catalog convention and exchanges basis
    indices 1 and 3. ``a`` (control q1, target q0) exchanges 2 and 3. They are
    related by ``CX_b = (H x H) CX_a (H x H)``.
    """
    orientation = CnotOrientation(orientation)
    if orientation is CnotOrientation.CONTROL_Q0_TARGET_Q1:
        return GateDef("cx", 2, CNOT)
    return GateDef("cx_a", 2, controlled(X))


def sqrt_cnot() -> GateDef:
    return GateDef("sqrt_cx", 2, SQRT_CNOT)


def _require_unitary(u: np.ndarray) -> np.ndarray:
    u = as_matrix(u)
    if u.shape[0] & (u.shape[0] - 1):
        raise ValueError(f"gate dimension {u.shape[0]} is not a power of two")
    if not is_unitary(u, DEFAULT_TOL):
        raise NotUnitaryError("controlled gates need a unitary base")
    return u


def controlled(u) -> np.ndarray:
    """``[[I, 0], [0, u]]``; the control is the most significant local qubit."""
    u = _require_unitary(u)
    d = u.shape[0]
    out = identity(2 * d)
    out[d:, d:] = u
    return out


def anti_controlled(u) -> np.ndarray:
    """``[[u, 0], [0, I]]``: fires when the (high) control qubit is 0."""
    u = _require_unitary(u)
    d = u.shape[0]
    out = identity(2 * d)
    out[:d, :d] = u
    return out


def controlled_q0(u) -> np.ndarray:
    """Two-qubit controlled-``u`` with the control on q0 and target on q1."""
    return SWAP @ controlled(u) @ SWAP


def _permutation(images: list[int]) -> np.ndarray:
    """Matrix sending basis state ``k`` to ``images[k]``."""
    n = len(images)
    m = np.zeros((n, n), dtype=np.complex128)
    m[images, range(n)] = 1
    return m


def _reversible(fn, n_bits: int) -> np.ndarray:
    """Permutation matrix of a classical reversible map on little-endian bits."""
    images = []
    for k in range(2**n_bits):
        bits = [(k >> j) & 1 for j in range(n_bits)]
        out = fn(*bits)
        images.append(sum(b << j for j, b in enumerate(out)))
    if sorted(images) != list(range(2**n_bits)):
        raise ValueError("map is not reversible")
    return _permutation(images)


TOFFOLI = _literal(_reversible(lambda a, b, c: (a, b, c ^ (a & b)), 3))
FREDKIN = _literal(_reversible(lambda a, b, c: (a, c, b) if a else (a, b, c), 3))
PERES = _literal(_reversible(lambda a, b, c: (a, a ^ b, c ^ (a & b)), 3))
# swaps |q2 q1 q0> = |011> and |100>: the Toffoli conjugated by CNOTs fanning out of q2
MILLER = _literal(_reversible(lambda a, b, c: (1 - a, 1 - b, 1 - c) if a == b != c else (a, b, c), 3))


def three_qubit_gates() -> dict[str, GateDef]:
    """Toffoli (controls q0, q1), Fredkin (control q0), Peres, and Miller."""
    return {
        "ccx": GateDef("ccx", 3, TOFFOLI),
        "cswap": GateDef("cswap", 3, FREDKIN),
        "peres": GateDef("peres", 3, PERES),
        "miller": GateDef("miller", 3, MILLER),
    }


@lru_cache(maxsize=1)
def catalog() -> dict[str, GateDef]:
    """Every named gate, keyed by its DSL mnemonic."""
    gates: dict[str, GateDef] = {"h": GateDef("h", 1, H)}
    gates.update(pauli_from_hadamard())
    gates.update(phase_gates())
    gates.update(sqrt_not_gates())
    gates["swap"] = GateDef("swap", 2, SWAP)
    gates["cx"] = cnot()
    gates["sqrt_cx"] = sqrt_cnot()
    for base in ("y", "z", "h", "s", "sdg", "t", "tdg", "u", "udg", "v", "vdg"):
        gates["c" + base] = GateDef("c" + base, 2, controlled_q0(gates[base].matrix))
    gates.update(three_qubit_gates())
    return gates


# one-qubit gates whose inverse is another catalog entry
INVERSE_NAMES = {
    "s": "sdg", "sdg": "s",
    "t": "tdg", "tdg": "t",
    "u": "udg", "udg": "u",
    "v": "vdg", "vdg": "v",
}
SELF_INVERSE = frozenset({"id", "x", "y", "z", "h", "swap", "cx", "cz", "cy", "ch", "ccx", "cswap", "miller"})
