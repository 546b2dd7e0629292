"""Build the one-qubit gate set out of the Hadamard matrix.

Run: python demos/gates_from_hadamard.py
"""

import numpy as np

from fourierqc import gates as g
from fourierqc.linalg import flip_h

np.set_printoptions(precision=4, suppress=True)

h = g.H
print("H =\n", h)

# products and row flips are all it takes to get the Paulis
i_ = h @ h
x_ = flip_h(i_)
z_ = x_ @ flip_h(h) @ flip_h(h)
y_ = 1j * flip_h(z_)
for name, m in (("I = HH", i_), ("X = flip(I)", x_), ("Z = X flip(H) flip(H)", z_), ("Y = i flip(Z)", y_)):
    print(f"{name}\n{m}")

# the phase chain: each gate is the square root of the previous one
cat = g.catalog()
for big, small in (("z", "s"), ("s", "t"), ("t", "u")):
    m = cat[small].matrix
    print(f"{small}^2 == {big}: {np.allclose(m @ m, cat[big].matrix)}")

# square root of NOT from H and two T gates
v = h @ cat["t"].matrix @ cat["t"].matrix @ h
print("V = HTTH =\n", v)
print("V^2 == X:", np.allclose(v @ v, g.X))
