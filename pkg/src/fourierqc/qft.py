"""Quantum Fourier transform: the defining matrix and its circuit forms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gates as g
from .circuit import Circuit, CircuitOp

MAX_QUBITS = 12

# controlled phase used at ladder distance k (control k wires below target)
_LADDER_NAMES = {1: ("s", "sdg"), 2: ("t", "tdg"), 3: ("u", "udg")}


def _check_n(n: int, lo: int = 0, hi: int = MAX_QUBITS) -> None:
    if not lo <= n <= hi:
        raise ValueError(f"qubit count {n} outside [{lo}, {hi}]")


def qft_matrix(n: int) -> np.ndarray:
    """``F_{2^n}`` with entry (v, u) equal to ``w^(u v) / sqrt(2^n)``, ``w = e^{2 pi i / 2^n}``."""
    _check_n(n)
    dim = 2**n
    k = np.arange(dim)
    roots = np.exp(2j * np.pi * k / dim)
    # quarter turns exactly, so F_2 is H and F_4 has exact 0, +-1, +-i
    quarter = (4 * k) % dim == 0
    roots[quarter] = np.array([1, 1j, -1, -1j])[(4 * k[quarter]) // dim]
    # indexing by uv mod dim keeps full precision for large n
    return roots[np.outer(k, k) % dim] / np.sqrt(dim)


def iqft_matrix(n: int) -> np.ndarray:
    _check_n(n)
    return qft_matrix(n).conj()


def bit_reversal(n: int) -> np.ndarray:
    """Permutation matrix reversing the qubit order of an n-qubit index."""
    dim = 2**n
    images = [int(format(k, f"0{n}b")[::-1], 2) if n else 0 for k in range(dim)]
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[images, range(dim)] = 1
    return m


@dataclass(frozen=True)
class QftSpec:
    n: int
    inverse: bool = False
    include_final_swaps: bool = True

    def __post_init__(self):
        _check_n(self.n)


def _ladder_op(distance: int, inverse: bool, control: int, target: int) -> CircuitOp:
    if distance in _LADDER_NAMES:
        name = _LADDER_NAMES[distance][inverse]
        return CircuitOp.named(name, target, controls=control)
    angle = (-1 if inverse else 1) * np.pi / 2**distance
    label = f"p(pi/{2**distance})" if not inverse else f"p(-pi/{2**distance})"
    return CircuitOp(None, g.phase(angle), target, controls=control, label=label)


def qft_circuit(spec: QftSpec | int, inverse: bool = False, include_final_swaps: bool = True) -> Circuit:
    """H plus controlled-phase ladder (S, T, U, then pi/2^k), then qubit-reversal swaps.

    The inverse keeps the same layout with conjugated phases; because F is
    symmetric, ``conj(F) = F^-1``.
    """
    if not isinstance(spec, QftSpec):
        spec = QftSpec(spec, inverse, include_final_swaps)
    n = spec.n
    if n == 0:
        raise ValueError("a zero-qubit transform has no circuit; F_1 = [1]")
    ops: list[CircuitOp] = []
    for target in range(n - 1, -1, -1):
        ops.append(CircuitOp.named("h", target))
        for distance in range(1, target + 1):
            ops.append(_ladder_op(distance, spec.inverse, target - distance, target))
    if spec.include_final_swaps:
        for k in range(n // 2):
            ops.append(CircuitOp.named("swap", (k, n - 1 - k)))
    return Circuit(n, tuple(ops))


def iqft_circuit(n: int, include_final_swaps: bool = True) -> Circuit:
    return qft_circuit(QftSpec(n, True, include_final_swaps))


def cancel_adjacent_pairs(c: Circuit) -> Circuit:
    """Drop back-to-back copies of the same self-inverse gate on the same wires."""
    out: list[CircuitOp] = []
    for op in c.ops:
        if out and op.gate in g.SELF_INVERSE and out[-1] == op:
            out.pop()
        else:
            out.append(op)
    return Circuit(c.n_qubits, tuple(out))


def qft_squared_circuit(n: int, inverse: bool = False) -> Circuit:
    """Swap-free circuit for ``F^2`` (or ``F^-2``).

    With ``F = B R`` (``R`` the ladder, ``B`` the bit reversal), ``F^2 = (B R B) R``
    and ``B R B`` is ``R`` with its wires mirrored, so no SWAP survives.
    """
    _check_n(n, 2, 4)
    ladder = qft_circuit(QftSpec(n, inverse, include_final_swaps=False))
    mirrored = Circuit(n).append(ladder, list(range(n - 1, -1, -1)))
    return cancel_adjacent_pairs(ladder + mirrored)


def negation_permutation(n: int) -> np.ndarray:
    """Permutation ``x -> -x mod 2^n``, which is what ``F^2`` equals."""
    dim = 2**n
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[(-np.arange(dim)) % dim, np.arange(dim)] = 1
    return m
