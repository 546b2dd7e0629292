"""Dense complex matrix helpers shared by every other module.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. The functions
here add the dimension checks, the row/column flips used to derive the Pauli
matrices from the Hadamard matrix, and equality modulo a global phase.
"""

from __future__ import annotations

import json
import math

import numpy as np

DEFAULT_TOL = 1e-10


class DimensionError(ValueError):
    """Raised when operands have incompatible shapes."""


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a square complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    return m


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def exchange_matrix(dim: int) -> np.ndarray:
    """Anti-diagonal permutation; ``exchange_matrix(2)`` is Pauli X."""
    return np.fliplr(identity(dim))


def flip_h(a) -> np.ndarray:
    """Reverse the row order (mirror about the horizontal mid-axis).

    For 2x2 input this is ``X @ a``; flipping H gives the splitting operator.
    """
    return np.flipud(as_matrix(a)).copy()


def flip_v(a) -> np.ndarray:
    """Reverse the column order (mirror about the vertical mid-axis)."""
    return np.fliplr(as_matrix(a)).copy()


def frobenius(a) -> float:
    return float(np.linalg.norm(a))


def dist_up_to_phase(a, b) -> tuple[float, float]:
    """Return ``(min_phi ||a - e^{i phi} b||_F, phi*)``.

    The optimal phase is ``arg tr(b^H a)``. When that trace vanishes the phase
    is read off the entry where ``|b|`` is largest; if ``b`` is all zeros the
    distance is ``||a||_F`` and the phase 0.
    """
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    overlap = np.vdot(b, a)
    scale = max(frobenius(a) * frobenius(b), 1e-300)
    if abs(overlap) > 1e-14 * scale:
        phi = float(np.angle(overlap))
    else:
        idx = np.unravel_index(np.argmax(np.abs(b)), b.shape)
        if b[idx] == 0:
            return frobenius(a), 0.0
        phi = float(np.angle(np.conj(b[idx]) * a[idx]))
    # evaluated directly rather than via the closed form to avoid cancellation
    return frobenius(a - np.exp(1j * phi) * b), phi


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    a = as_matrix(a)
    return frobenius(a.conj().T @ a - identity(a.shape[0])) < tol


def random_unitary(dim: int, rng: np.random.Generator | None = None) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    rng = np.random.default_rng() if rng is None else rng
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


# -- serialization -----------------------------------------------------------


def matrix_to_json(a) -> str:
    """Rows of ``{"re": float, "im": float}``; round-trips bit-exactly."""
    a = as_matrix(a)
    rows = [[{"re": float(z.real), "im": float(z.imag)} for z in row] for row in a]
    return json.dumps(rows)


def matrix_from_json(text: str) -> np.ndarray:
    rows = json.loads(text)
    return as_matrix([[complex(e["re"], e["im"]) for e in row] for row in rows])


def _format_complex(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def matrix_to_csv(a) -> str:
    a = as_matrix(a)
    return "".join(",".join(_format_complex(complex(z)) for z in row) + "\n" for row in a)


def matrix_from_csv(text: str) -> np.ndarray:
    rows = []
    for line in text.splitlines():
        if line.strip():
            # python's complex() wants j and no "+-"
            rows.append([complex(tok.strip().replace("i", "j")) for tok in line.split(",")])
    return as_matrix(rows)
