"""The Fourier transform as a matrix and as a circuit, and why its square is a CNOT.

Run: python demos/fourier_transform.py
"""

import numpy as np

from fourierqc import gates as g
from fourierqc.dsl import emit
from fourierqc.linalg import dist_up_to_phase
from fourierqc.qft import iqft_matrix, qft_circuit, qft_matrix, qft_squared_circuit

np.set_printoptions(precision=3, suppress=True)

print("F4 * 2 =\n", qft_matrix(2) * 2)

for n in range(1, 7):
    d, _ = dist_up_to_phase(qft_circuit(n).unitary(), qft_matrix(n))
    print(f"n={n}: circuit of {len(qft_circuit(n)):2d} gates vs matrix, distance {d:.1e}")

print("\nthree-qubit circuit in .fqc form:")
print(emit(qft_circuit(3)))

f = qft_matrix(2)
print("F4 F4 is the CNOT:", np.allclose(f @ f, g.CNOT))
print("F4^-1 F4^-1 too:  ", np.allclose(iqft_matrix(2) @ iqft_matrix(2), g.CNOT))

# dropping the swaps only works if the second copy runs on mirrored wires
sq = qft_squared_circuit(2)
print("swap-free F4 F4:", [op.name for op in sq.ops], "->", np.allclose(sq.unitary(), g.CNOT))
ladder = qft_circuit(2, include_final_swaps=False)
d, _ = dist_up_to_phase((ladder + ladder).unitary(), g.CNOT)
print(f"same ladder twice without mirroring is off by {d:.4f} (sqrt 3)")

# in general F^2 negates the index mod 2^n, so F^4 = I
f3 = qft_matrix(3)
print("F8^2 maps |k> to |-k mod 8>:", [int(np.argmax(np.abs((f3 @ f3)[:, k]))) for k in range(8)])
