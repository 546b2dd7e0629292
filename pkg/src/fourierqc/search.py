"""Bounded search for gate orderings that realize a target unitary.

Several decompositions are only known by their gate *set*. This module
enumerates every ordering of a multiset of gates, with each gate free to sit
on any of its allowed wire placements, and keeps the sequences whose
product equals the target up to global phase.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

import numpy as np

from .circuit import Circuit, CircuitOp, embed
from .linalg import DEFAULT_TOL, as_matrix, dist_up_to_phase


def _op_matrix(op: CircuitOp, n: int) -> np.ndarray:
    return embed(op.full_matrix(), op.wires, n)


def search_orderings(
    target,
    candidates: Sequence[CircuitOp],
    counts: dict[str, int],
    n_qubits: int,
    tol: float = DEFAULT_TOL,
    limit: int | None = None,
) -> list[Circuit]:
    """All circuits using exactly ``counts[name]`` ops of each name, drawn from
    ``candidates``, whose unitary matches ``target`` up to phase.

    Candidates sharing a name are alternative placements of the same gate.
    Results come back in depth-first order over ``candidates``.
    """
    target = as_matrix(target)
    mats = [_op_matrix(op, n_qubits) for op in candidates]
    key = [op.label or op.name for op in candidates]
    remaining = Counter(counts)
    unknown = set(remaining) - set(key)
    if unknown:
        raise ValueError(f"no candidate placements for {sorted(unknown)}")
    length = sum(remaining.values())
    found: list[Circuit] = []
    path: list[int] = []

    dim = target.shape[0]
    # for unitaries dist^2 = 2(dim - |tr(target^dag acc)|); skip the full check when far off
    slack = tol * tol / 2 + 1e-9

    def dfs(acc: np.ndarray) -> bool:
        if len(path) == length:
            if dim - abs(np.vdot(target, acc)) > slack:
                return False
            if dist_up_to_phase(acc, target)[0] < tol:
                found.append(Circuit(n_qubits, tuple(candidates[i] for i in path)))
                return limit is not None and len(found) >= limit
            return False
        for i, name in enumerate(key):
            if remaining[name] == 0:
                continue
            remaining[name] -= 1
            path.append(i)
            stop = dfs(mats[i] @ acc)
            path.pop()
            remaining[name] += 1
            if stop:
                return True
        return False

    dfs(np.eye(2**n_qubits, dtype=np.complex128))
    return found


def single_qubit_placements(names: Sequence[str], wires: Sequence[int]) -> list[CircuitOp]:
    return [CircuitOp.named(name, w) for name in names for w in wires]
