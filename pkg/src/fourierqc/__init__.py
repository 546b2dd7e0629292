"""Quantum gate algebra built around the quantum Fourier transform.

Dense unitaries for every gate, circuit expansion in little-endian order,
a registry of gate identities checked modulo global phase, and exhaustive
measurement-branch simulation of Bell/GHZ preparation, teleportation and
secret sharing.
"""

from .circuit import Circuit, CircuitError, CircuitOp, compose, embed, inverse_of, unitary_of, with_controls
from .dsl import ParseError, emit, load, parse
from .identities import Identity, Report, builtin_catalog, check, run_all
from .linalg import DEFAULT_TOL, dagger, dist_up_to_phase, flip_h, flip_v, is_unitary, kron, matmul
from .protocols import apply, bell_pair, fidelity, ghz, measure, qss, teleport
from .qft import QftSpec, iqft_matrix, qft_circuit, qft_matrix, qft_squared_circuit

__version__ = "0.1.0"
