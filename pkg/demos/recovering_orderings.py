"""Find gate orderings that realize a target when only the gate set is known.

Run: python demos/recovering_orderings.py
"""

from fourierqc import gates as g
from fourierqc.circuit import CircuitOp
from fourierqc.dsl import emit
from fourierqc.search import search_orderings, single_qubit_placements

cx = CircuitOp.named("x", 1, controls=0)

# controlled-S from two T, one T^-1 and two CNOTs
cands = single_qubit_placements(["t", "tdg"], [0, 1]) + [cx]
found = search_orderings(g.catalog()["cs"].matrix, cands, {"t": 2, "tdg": 1, "x": 2}, 2)
print(f"controlled-S: {len(found)} orderings; the first one is")
print(emit(found[0]))

# controlled-Y from S, S^-1 and one CNOT has a single solution
cands = single_qubit_placements(["s", "sdg"], [0, 1]) + [cx]
(only,) = search_orderings(g.catalog()["cy"].matrix, cands, {"s": 1, "sdg": 1, "x": 1}, 2)
print("controlled-Y:")
print(emit(only))
