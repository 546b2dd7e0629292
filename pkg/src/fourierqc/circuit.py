"""Circuits as ordered gate applications, and their expansion to unitaries.

Qubit ordering is little-endian: basis index ``b = sum_k q_k 2**k``, so q0 is
the least significant bit and a gate on q0 of a two-qubit register expands to
``I (x) G``. Ops are stored in time order; :func:`unitary_of` multiplies later
ops on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import gates as g
from .linalg import as_matrix, dagger, identity


class CircuitError(ValueError):
    pass


def _wire_tuple(ws) -> tuple[int, ...]:
    if isinstance(ws, (int, np.integer)):
        return (int(ws),)
    return tuple(int(w) for w in ws)


@dataclass(frozen=True, eq=False)
class CircuitOp:
    """One gate application.

    ``gate`` names a catalog entry, or is ``None`` for an inline matrix. The
    matrix acts on ``targets`` in order (``targets[0]`` is its local q0);
    ``controls`` must read 1 and ``anti_controls`` must read 0 for it to fire.
    """

    gate: str | None
    matrix: np.ndarray
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    anti_controls: tuple[int, ...] = ()
    label: str | None = None

    def __post_init__(self):
        m = as_matrix(self.matrix)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "targets", _wire_tuple(self.targets))
        object.__setattr__(self, "controls", tuple(sorted(_wire_tuple(self.controls))))
        object.__setattr__(self, "anti_controls", tuple(sorted(_wire_tuple(self.anti_controls))))
        if not self.targets:
            raise CircuitError("an op needs at least one target")
        if m.shape[0] != 2 ** len(self.targets):
            raise CircuitError(
                f"{self.name}: matrix dim {m.shape[0]} does not fit {len(self.targets)} target(s)"
            )
        wires = self.wires
        if len(set(wires)) != len(wires):
            raise CircuitError(f"{self.name}: targets, controls and anti-controls overlap: {wires}")
        if min(wires) < 0:
            raise CircuitError(f"{self.name}: negative qubit index")

    @classmethod
    def named(cls, gate: str, targets, controls=(), anti_controls=()) -> CircuitOp:
        try:
            gdef = g.catalog()[gate]
        except KeyError:
            raise CircuitError(f"unknown gate {gate!r}") from None
        return cls(gate, gdef.matrix, targets, controls, anti_controls)

    @property
    def name(self) -> str:
        return self.gate or self.label or "<matrix>"

    @property
    def wires(self) -> tuple[int, ...]:
        return self.targets + self.controls + self.anti_controls

    def full_matrix(self) -> np.ndarray:
        """Local matrix over ``wires``: targets low, then controls, then anti-controls."""
        return with_controls(self.matrix, len(self.controls), len(self.anti_controls))

    def relabel(self, mapping: Sequence[int]) -> CircuitOp:
        return CircuitOp(
            self.gate,
            self.matrix,
            [mapping[w] for w in self.targets],
            [mapping[w] for w in self.controls],
            [mapping[w] for w in self.anti_controls],
            self.label,
        )

    def inverse(self) -> CircuitOp:
        if self.gate in g.INVERSE_NAMES:
            inv = g.INVERSE_NAMES[self.gate]
            return CircuitOp(inv, g.catalog()[inv].matrix, self.targets, self.controls, self.anti_controls)
        if self.gate in g.SELF_INVERSE:
            return self
        label = None if self.label is None else self.label + "^-1"
        return CircuitOp(None, dagger(self.matrix), self.targets, self.controls, self.anti_controls, label)

    def __eq__(self, other):
        if not isinstance(other, CircuitOp):
            return NotImplemented
        return (
            self.gate == other.gate
            and self.targets == other.targets
            and self.controls == other.controls
            and self.anti_controls == other.anti_controls
            and np.array_equal(self.matrix, other.matrix)
        )

    __hash__ = None

    def __repr__(self):
        parts = [self.name, f"targets={list(self.targets)}"]
        if self.controls:
            parts.append(f"controls={list(self.controls)}")
        if self.anti_controls:
            parts.append(f"anti_controls={list(self.anti_controls)}")
        return f"CircuitOp({', '.join(parts)})"


@dataclass(frozen=True)
class Circuit:
    """An immutable circuit; builder methods return new circuits."""

    n_qubits: int
    ops: tuple[CircuitOp, ...] = field(default=())

    def __post_init__(self):
        if self.n_qubits < 1:
            raise CircuitError("a circuit needs at least one qubit")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if max(op.wires) >= self.n_qubits:
                raise CircuitError(f"{op!r} uses a wire outside a {self.n_qubits}-qubit circuit")

    def add(self, gate, targets, controls=(), anti_controls=(), label=None) -> Circuit:
        """Append a gate given by catalog name or inline matrix."""
        if isinstance(gate, str):
            op = CircuitOp.named(gate, targets, controls, anti_controls)
        else:
            op = CircuitOp(None, gate, targets, controls, anti_controls, label)
        return Circuit(self.n_qubits, self.ops + (op,))

    def append(self, sub: Circuit, wires: Sequence[int] | None = None) -> Circuit:
        """Append ``sub`` with its qubit ``k`` placed on ``wires[k]``."""
        if wires is None:
            wires = range(sub.n_qubits)
        wires = _wire_tuple(wires)
        if len(wires) != sub.n_qubits or len(set(wires)) != len(wires):
            raise CircuitError(f"need {sub.n_qubits} distinct wires, got {wires}")
        return Circuit(self.n_qubits, self.ops + tuple(op.relabel(wires) for op in sub.ops))

    def __add__(self, other: Circuit) -> Circuit:
        return compose(self, other)

    def __len__(self):
        return len(self.ops)

    def unitary(self) -> np.ndarray:
        return unitary_of(self)

    def inverse(self) -> Circuit:
        return inverse_of(self)


def with_controls(gate, controls: int = 0, anti_controls: int = 0) -> np.ndarray:
    """Extend ``gate`` by ``controls`` high qubits that must be 1 and then
    ``anti_controls`` higher qubits that must be 0.

    Anti-controls are realized as controls conjugated by X on those qubits.
    """
    u = as_matrix(gate)
    total = controls + anti_controls
    if total == 0:
        return u
    d = u.shape[0]
    out = identity(d * 2**total)
    out[-d:, -d:] = u
    if anti_controls:
        flip = np.kron(_x_power(anti_controls), identity(d * 2**controls))
        out = flip @ out @ flip
    return out


def _x_power(k: int) -> np.ndarray:
    # X on every one of k qubits reverses the basis order
    return np.fliplr(identity(2**k))


def embed(gate, wires: Sequence[int], n: int) -> np.ndarray:
    """Expand a k-qubit ``gate`` acting on ``wires`` (local q_j on ``wires[j]``) to ``n`` qubits."""
    u = as_matrix(gate)
    wires = _wire_tuple(wires)
    k = len(wires)
    if u.shape[0] != 2**k:
        raise CircuitError(f"gate of dim {u.shape[0]} cannot act on {k} wire(s)")
    if len(set(wires)) != k:
        raise CircuitError(f"duplicate wires {wires}")
    if any(w < 0 or w >= n for w in wires):
        raise CircuitError(f"wires {wires} out of range for {n} qubits")
    padded = np.kron(identity(2 ** (n - k)), u)
    order = list(wires) + [w for w in range(n) if w not in wires]
    if order == list(range(n)):
        return padded
    # perm[b] = index of b once physical wire order[j] becomes local bit j
    idx = np.arange(2**n)
    perm = np.zeros_like(idx)
    for j, w in enumerate(order):
        perm |= ((idx >> w) & 1) << j
    return padded[np.ix_(perm, perm)]


def unitary_of(c: Circuit) -> np.ndarray:
    out = identity(2**c.n_qubits)
    for op in c.ops:
        out = embed(op.full_matrix(), op.wires, c.n_qubits) @ out
    return out


def compose(a: Circuit, b: Circuit) -> Circuit:
    """``a`` followed by ``b`` in time."""
    if a.n_qubits != b.n_qubits:
        raise CircuitError(f"width mismatch: {a.n_qubits} vs {b.n_qubits}")
    return Circuit(a.n_qubits, a.ops + b.ops)


def inverse_of(c: Circuit) -> Circuit:
    return Circuit(c.n_qubits, tuple(op.inverse() for op in reversed(c.ops)))


def from_ops(n: int, ops: Iterable[tuple]) -> Circuit:
    """Build a circuit from ``(gate, targets[, controls[, anti_controls]])`` tuples."""
    c = Circuit(n)
    for spec in ops:
        c = c.add(*spec)
    return c


def cx(n: int, control: int, target: int) -> Circuit:
    return Circuit(n).add("x", target, controls=control)


def flipped_cnot() -> Circuit:
    """CNOT with control q1 and target q0, built as ``(H x H) CNOT (H x H)``."""
    return from_ops(2, [("h", 0), ("h", 1), ("x", 1, 0), ("h", 0), ("h", 1)])


def swap_constructions() -> list[Circuit]:
    """Three SWAP realizations: CNOT / flipped CNOT / CNOT, the same with the
    flip spelled out as H-conjugation, and the Fourier form where every CNOT
    is ``F4^-1 F4^-1`` and every H is the one-qubit transform."""
    from .qft import qft_circuit, qft_squared_circuit

    flipped = flipped_cnot()
    first = cx(2, 0, 1) + flipped + cx(2, 0, 1)
    second = (
        cx(2, 0, 1)
        + from_ops(2, [("h", 0), ("h", 1)])
        + cx(2, 0, 1)
        + from_ops(2, [("h", 0), ("h", 1)])
        + cx(2, 0, 1)
    )
    cnot_f = qft_squared_circuit(2, inverse=True)
    f2 = qft_circuit(1)
    hh = Circuit(2).append(f2, [0]).append(f2, [1])
    third = cnot_f + hh + cnot_f + hh + cnot_f
    return [first, second, third]
