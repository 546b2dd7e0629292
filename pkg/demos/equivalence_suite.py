"""Check every catalogued identity, then a home-made one written in .fqc.

Run: python demos/equivalence_suite.py
"""

from fourierqc.identities import check, identity_from_sources, run_all

report = run_all()
s = report.summary()
print(f"{s['positive_passed']} of {s['positive']} identities hold;"
      f" {s['negative_held']} of {s['negative']} expected differences confirmed")
for r in report.results[:8]:
    print(f"  {r.id:32s} distance {r.distance:.1e}")
print("  ...")
for r in report.results:
    if not r.expect_equal:
        print(f"  {r.id:32s} distance {r.distance:.4f} (should be far apart)")

# a CZ is symmetric in its two qubits: write both orientations and compare
lhs = "qubits 2\nh 1\ncx 0 1\nh 1\n"
rhs = "qubits 2\nh 0\ncx 1 0\nh 0\n"
r = check(identity_from_sources("cz-symmetric", lhs, rhs))
print(f"\nH-CNOT-H on either wire gives the same CZ: {r.ok} (distance {r.distance:.1e})")
