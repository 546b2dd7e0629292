"""State-vector simulation with exhaustive measurement branches.

States are 1-D complex arrays in the little-endian basis of
:mod:`fourierqc.circuit`. Measurement never samples: :func:`measure` returns
every outcome with nonzero probability together with the normalized
post-measurement state of the unmeasured qubits.

Teleportation and secret sharing come in several variants that differ only
in how their gates are spelled (plain CNOT/CZ, H-conjugated CNOT, Fourier
blocks, or H with controlled-S^-1). Variants with classical feed-forward
apply a per-outcome Pauli suffix; the others apply the corrections
coherently before measurement. Either way the Pauli correction for each
outcome is derived by probing the circuit, never hard-coded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .circuit import Circuit, CircuitError, from_ops
from .identities import cx_fourier, cx_hs, cx_plain, h_fourier

NORM_TOL = 1e-10
_PROB_FLOOR = 1e-14


def basis_state(n_qubits: int, index: int = 0) -> np.ndarray:
    psi = np.zeros(2**n_qubits, dtype=np.complex128)
    psi[index] = 1
    return psi


def from_bitstring(bits: str) -> np.ndarray:
    """``"10"`` is |q1=1, q0=0>: the rightmost character is q0."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {bits!r}")
    return basis_state(len(bits), int(bits, 2))


def qubit_state(alpha: complex, beta: complex) -> np.ndarray:
    psi = np.array([alpha, beta], dtype=np.complex128)
    check_normalized(psi)
    return psi


def check_normalized(psi: np.ndarray, tol: float = NORM_TOL) -> None:
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1) > tol:
        raise ValueError(f"state is not normalized (norm {norm:.15g})")


def n_qubits_of(psi: np.ndarray) -> int:
    n = int(np.log2(len(psi)))
    if 2**n != len(psi):
        raise ValueError(f"state length {len(psi)} is not a power of two")
    return n


def apply(c: Circuit, psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=np.complex128)
    if len(psi) != 2**c.n_qubits:
        raise CircuitError(f"state of length {len(psi)} does not fit a {c.n_qubits}-qubit circuit")
    out = c.unitary() @ psi
    # absorb rounding only
    return out / np.linalg.norm(out)


def state_distance(a: np.ndarray, b: np.ndarray) -> float:
    """``min_phi ||a - e^{i phi} b||``."""
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1
    return float(np.linalg.norm(a - phase * b))


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    if len(a) != len(b):
        raise ValueError(f"width mismatch: {len(a)} vs {len(b)}")
    return float(min(1.0, abs(np.vdot(a, b)) ** 2))


@dataclass(frozen=True, eq=False)
class Branch:
    """One measurement outcome; ``outcome[k]`` is the bit read on ``qubits[k]``."""

    outcome: tuple[int, ...]
    probability: float
    state: np.ndarray
    qubits: tuple[int, ...] = ()

    @property
    def bitstring(self) -> str:
        """Ket order: the first measured qubit is the rightmost character."""
        return "".join(str(b) for b in reversed(self.outcome))


def measure(psi: np.ndarray, qubits: Sequence[int]) -> list[Branch]:
    """Project onto every computational-basis outcome of ``qubits``.

    Branches are ordered as a binary counter whose least significant bit is
    ``qubits[0]``; zero-probability outcomes are dropped.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    n = n_qubits_of(psi)
    qubits = tuple(int(q) for q in qubits)
    if len(set(qubits)) != len(qubits) or any(not 0 <= q < n for q in qubits):
        raise ValueError(f"bad measurement qubits {qubits} for {n} qubits")
    rest = [q for q in range(n) if q not in qubits]
    idx = np.arange(2**n)
    branches = []
    for counter in range(2 ** len(qubits)):
        outcome = tuple((counter >> k) & 1 for k in range(len(qubits)))
        mask = np.ones(2**n, dtype=bool)
        for q, b in zip(qubits, outcome):
            mask &= ((idx >> q) & 1) == b
        sub_idx = idx[mask]
        amps = psi[sub_idx]
        p = float(np.vdot(amps, amps).real)
        if p <= _PROB_FLOOR:
            continue
        # re-index the surviving amplitudes by the unmeasured qubits only
        local = np.zeros_like(sub_idx)
        for j, q in enumerate(rest):
            local |= ((sub_idx >> q) & 1) << j
        post = np.zeros(2 ** len(rest), dtype=np.complex128)
        post[local] = amps / np.sqrt(p)
        branches.append(Branch(outcome, p, post, qubits))
    return branches


def sample(psi: np.ndarray, qubits: Sequence[int], shots: int, seed: int | None = None) -> dict[str, int]:
    """Seeded sampling from the exact branch distribution (demo use only)."""
    branches = measure(psi, qubits)
    rng = np.random.default_rng(seed)
    p = np.array([b.probability for b in branches])
    picks = rng.choice(len(branches), size=shots, p=p / p.sum())
    counts: dict[str, int] = {}
    for i in picks:
        key = branches[i].bitstring
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items()))


# -- resource states ----------------------------------------------------------

BELL_VARIANTS = ("a", "b", "c")


def _cnot_builder(style: str):
    return {"plain": cx_plain, "fourier": cx_fourier, "hs": cx_hs}[style]


def _hadamard(style: str, n: int, wire: int) -> Circuit:
    return h_fourier(n, wire) if style == "fourier" else from_ops(n, [("h", wire)])


_RESOURCE_STYLE = {"a": "plain", "b": "fourier", "c": "hs"}


def _fanout(n: int, root: int, leaves: Sequence[int], style: str) -> Circuit:
    cnot = _cnot_builder(style)
    c = _hadamard(style, n, root)
    for leaf in leaves:
        c = c + cnot(n, root, leaf)
    return c


def bell_pair(variant: str = "a") -> Circuit:
    """(|00> + |11>)/sqrt2 from |00>.

    ``a``: H and CNOT; ``b``: the one-qubit transform and F4^-1 F4^-1;
    ``c``: H and controlled-S^-1.
    """
    if variant not in BELL_VARIANTS:
        raise ValueError(f"unknown Bell variant {variant!r}")
    return _fanout(2, 0, [1], _RESOURCE_STYLE[variant])


def ghz(n: int, variant: str = "a") -> Circuit:
    """GHZ state on 3 or 4 qubits: H on q0, then CNOTs from q0 (stepping over) to every other wire."""
    if n not in (3, 4):
        raise ValueError("GHZ preparation is defined for 3 or 4 qubits")
    if variant not in BELL_VARIANTS:
        raise ValueError(f"unknown GHZ variant {variant!r}")
    return _fanout(n, 0, range(1, n), _RESOURCE_STYLE[variant])


# -- teleportation and secret sharing ----------------------------------------

PAULIS = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
    "XZ": np.array([[0, -1], [1, 0]], dtype=np.complex128),
}

# |0>, |+>, |+i>: a Pauli frame is fixed (up to phase) by its action on these
_PROBES = (
    np.array([1, 0], dtype=np.complex128),
    np.array([1, 1], dtype=np.complex128) / np.sqrt(2),
    np.array([1, 1j], dtype=np.complex128) / np.sqrt(2),
)


@dataclass(frozen=True, eq=False)
class Protocol:
    """A one-qubit transfer: input on wire 0, output on ``output``.

    ``circuit`` runs before measuring ``measured``; ``suffix_style`` says how a
    classical correction is spelled after measurement (``None`` means the
    circuit already corrects coherently).
    """

    name: str
    variant: str
    circuit: Circuit
    measured: tuple[int, ...]
    output: int
    suffix_style: str | None = None

    @cached_property
    def unitary(self) -> np.ndarray:
        return self.circuit.unitary()

    def run_branches(self, psi: np.ndarray) -> list[Branch]:
        full = np.kron(basis_state(self.circuit.n_qubits - 1), psi)
        out = self.unitary @ full
        return measure(out / np.linalg.norm(out), self.measured)

    @cached_property
    def corrections(self) -> dict[tuple[int, ...], str]:
        """Pauli that restores the input for each outcome, derived by probing."""
        probe_runs = [{b.outcome: b.state for b in self.run_branches(p)} for p in _PROBES]
        outcomes = sorted(set().union(*probe_runs), key=lambda o: o[::-1])
        table: dict[tuple[int, ...], str] = {}
        for outcome in outcomes:
            for name, pauli in PAULIS.items():
                if all(
                    fidelity(pauli @ run[outcome], probe) > 1 - 1e-10
                    for probe, run in zip(_PROBES, probe_runs)
                    if outcome in run
                ):
                    table[outcome] = name
                    break
            else:
                raise AssertionError(f"{self.name}/{self.variant}: no Pauli corrects outcome {outcome}")
        return table

    def suffix(self, pauli: str) -> Circuit:
        """Classically controlled correction on the output qubit as a circuit."""
        c = Circuit(1)
        if "X" in pauli:
            c = c.add("x", 0)
        if "Z" in pauli:
            if self.suffix_style == "hxh":
                c = c.add("h", 0).add("x", 0).add("h", 0)
            else:
                c = c.add("z", 0)
        return c


@dataclass(frozen=True, eq=False)
class BranchResult:
    outcome: tuple[int, ...]
    bitstring: str
    probability: float
    correction: str
    state: np.ndarray
    fidelity: float

    def to_dict(self) -> dict:
        return {
            "outcome": self.bitstring,
            "probability": self.probability,
            "correction": self.correction,
            "post_state": [[float(z.real), float(z.imag)] for z in self.state],
            "fidelity": self.fidelity,
        }


@dataclass(frozen=True, eq=False)
class ProtocolResult:
    protocol: str
    variant: str
    branches: tuple[BranchResult, ...] = field(default=())

    @property
    def min_fidelity(self) -> float:
        return min(b.fidelity for b in self.branches)

    @property
    def total_probability(self) -> float:
        return sum(b.probability for b in self.branches)

    def to_json(self) -> str:
        return json.dumps([b.to_dict() for b in self.branches], indent=2)


def run_protocol(protocol: Protocol, psi: np.ndarray) -> ProtocolResult:
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (2,):
        raise ValueError("the secret must be a single-qubit state")
    check_normalized(psi)
    table = protocol.corrections
    results = []
    for branch in protocol.run_branches(psi):
        pauli = table[branch.outcome]
        if protocol.suffix_style is None:
            if pauli != "I":
                raise AssertionError(f"coherent variant {protocol.variant} left a {pauli} correction")
            out = branch.state
        else:
            out = protocol.suffix(pauli).unitary() @ branch.state
        results.append(
            BranchResult(branch.outcome, branch.bitstring, branch.probability, pauli, out, fidelity(out, psi))
        )
    return ProtocolResult(protocol.name, protocol.variant, tuple(results))


TELEPORT_VARIANTS = ("a", "b", "c", "d")
QSS_VARIANTS = ("a", "b", "c", "d", "e")


def _bsm(n: int, style: str) -> Circuit:
    """Bell-state measurement basis change on wires 0, 1: CNOT then H."""
    return _cnot_builder(style)(n, 0, 1) + _hadamard(style, n, 0)


def _coherent_fix(n: int, xs: Sequence[int], zs: Sequence[int], out: int, style: str) -> Circuit:
    """Controlled-X from ``xs`` and controlled-Z from ``zs`` onto ``out``, CZ as H-CNOT-H."""
    cnot = _cnot_builder(style)
    c = Circuit(n)
    for w in xs:
        c = c + cnot(n, w, out)
    if zs:
        # one H pair brackets all the CNOTs standing in for CZ
        c = c + _hadamard(style, n, out)
        for w in zs:
            c = c + cnot(n, w, out)
        c = c + _hadamard(style, n, out)
    return c


@lru_cache(maxsize=None)
def teleportation(variant: str = "a") -> Protocol:
    """Three-wire teleportation: secret on 0, Bell pair on (1, 2), output on 2.

    ``a`` is the textbook protocol with classically controlled X and Z;
    ``b`` spells the Z correction as H X H; ``c`` corrects coherently with
    Fourier blocks (F2 for H, F4^-1 F4^-1 for CNOT); ``d`` uses only H and
    controlled-S^-1.
    """
    if variant not in TELEPORT_VARIANTS:
        raise ValueError(f"unknown teleportation variant {variant!r}")
    n = 3
    if variant in ("a", "b"):
        c = Circuit(n).append(bell_pair("a"), [1, 2]) + _bsm(n, "plain")
        return Protocol("teleport", variant, c, (0, 1), 2, "z" if variant == "a" else "hxh")
    style = "fourier" if variant == "c" else "hs"
    resource = Circuit(n).append(bell_pair(_variant_for_style(style)), [1, 2])
    c = resource + _bsm(n, style) + _coherent_fix(n, [1], [0], 2, style)
    return Protocol("teleport", variant, c, (0, 1), 2)


def _variant_for_style(style: str) -> str:
    return {v: k for k, v in _RESOURCE_STYLE.items()}[style]


@lru_cache(maxsize=None)
def secret_sharing(parties: int, variant: str = "a") -> Protocol:
    """Secret on wire 0 shared over a GHZ state on wires 1..parties.

    Wire 1 (the dealer's half) joins the Bell-state measurement, the middle
    parties measure in the X basis, and the last wire reconstructs the
    secret. ``a``: classical X/Z feed-forward; ``b``: Z spelled as H X H;
    ``c``: coherent corrections with the H pairs around the CZ stand-ins
    merged; ``d``: ``c`` in Fourier blocks; ``e``: ``d`` with H and
    controlled-S^-1.
    """
    if parties not in (3, 4):
        raise ValueError("secret sharing is defined for 3 or 4 parties")
    if variant not in QSS_VARIANTS:
        raise ValueError(f"unknown secret-sharing variant {variant!r}")
    n = parties + 1
    out = parties
    helpers = list(range(2, parties))
    measured = tuple(range(parties))
    if variant in ("a", "b"):
        c = Circuit(n).append(ghz(parties, "a"), range(1, n)) + _bsm(n, "plain")
        for w in helpers:
            c = c.add("h", w)
        return Protocol("qss", variant, c, measured, out, "z" if variant == "a" else "hxh")
    style = {"c": "plain", "d": "fourier", "e": "hs"}[variant]
    c = Circuit(n).append(ghz(parties, _variant_for_style(style)), range(1, n)) + _bsm(n, style)
    for w in helpers:
        c = c + _hadamard(style, n, w)
    c = c + _coherent_fix(n, [1], [0] + helpers, out, style)
    return Protocol("qss", variant, c, measured, out)


def teleport(psi: np.ndarray, variant: str = "a") -> ProtocolResult:
    return run_protocol(teleportation(variant), psi)


def qss(psi: np.ndarray, parties: int = 3, variant: str = "a") -> ProtocolResult:
    return run_protocol(secret_sharing(parties, variant), psi)


def branch_tables_agree(a: ProtocolResult, b: ProtocolResult, tol: float = 1e-10) -> bool:
    """Same outcomes, probabilities within ``tol``, and phase-equivalent outputs."""
    if [x.outcome for x in a.branches] != [y.outcome for y in b.branches]:
        return False
    for x, y in zip(a.branches, b.branches):
        if abs(x.probability - y.probability) > tol:
            return False
        if state_distance(x.state, y.state) > tol:
            return False
    return True
