"""Registry of gate and circuit identities, checked numerically modulo global phase.

Each :class:`Identity` pairs two expressions (a :class:`Circuit` or a raw
matrix). Positive identities pass when the phase-optimal Frobenius distance
is below tolerance; negative ones (``expect_equal=False``) pass when the
distance stays above ``min_distance``.

Where a decomposition is only known from its gate set, the ordering below
was found with :func:`fourierqc.search.search_orderings` and frozen here; the
test suite re-runs those searches.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

from . import gates as g
from .circuit import Circuit, embed, from_ops, swap_constructions, flipped_cnot, with_controls
from .linalg import DEFAULT_TOL, as_matrix, dist_up_to_phase, flip_h, identity
from .qft import (
    iqft_circuit,
    iqft_matrix,
    negation_permutation,
    qft_circuit,
    qft_matrix,
    qft_squared_circuit,
)

Expr = Union[Circuit, np.ndarray]


@dataclass(frozen=True, eq=False)
class Identity:
    id: str
    lhs: Expr
    rhs: Expr
    reference: str
    tol: float | None = None
    expect_equal: bool = True
    min_distance: float = 0.1


@dataclass(frozen=True)
class CheckResult:
    id: str
    reference: str
    passed: bool  # distance < tolerance
    distance: float
    phase: float
    expect_equal: bool = True
    min_distance: float = 0.1

    @property
    def ok(self) -> bool:
        if self.expect_equal:
            return self.passed
        return self.distance > self.min_distance

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.reference,
            "pass": self.passed,
            "distance": round(self.distance, 14),
            "phase": round(self.phase, 14),
            "expect_equal": self.expect_equal,
        }


@dataclass(frozen=True)
class Report:
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def summary(self) -> dict:
        positives = [r for r in self.results if r.expect_equal]
        negatives = [r for r in self.results if not r.expect_equal]
        return {
            "total": len(self.results),
            "positive": len(positives),
            "positive_passed": sum(r.ok for r in positives),
            "negative": len(negatives),
            "negative_held": sum(r.ok for r in negatives),
        }

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.results], indent=2)


def evaluate(expr: Expr) -> np.ndarray:
    if isinstance(expr, Circuit):
        return expr.unitary()
    return as_matrix(expr)


def check(identity: Identity, tol: float = DEFAULT_TOL) -> CheckResult:
    tol = identity.tol if identity.tol is not None else tol
    try:
        lhs, rhs = evaluate(identity.lhs), evaluate(identity.rhs)
        distance, phase = dist_up_to_phase(lhs, rhs)
    except Exception as exc:
        raise RuntimeError(f"identity {identity.id!r}: {exc}") from exc
    return CheckResult(
        identity.id,
        identity.reference,
        distance < tol,
        distance,
        phase,
        identity.expect_equal,
        identity.min_distance,
    )


def run_all(
    tol: float = DEFAULT_TOL,
    identities: Iterable[Identity] | None = None,
    workers: int = 1,
) -> Report:
    """Check every identity; the report keeps catalog order."""
    items = list(builtin_catalog() if identities is None else identities)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda i: check(i, tol), items))
    else:
        results = [check(i, tol) for i in items]
    return Report(tuple(results))


# -- construction helpers -----------------------------------------------------


def circ(n: int, *ops) -> Circuit:
    return from_ops(n, ops)


def cx_fourier(n: int, control: int, target: int) -> Circuit:
    """CNOT realized as the swap-free ``F4^-1 F4^-1`` on (control, target)."""
    return Circuit(n).append(qft_squared_circuit(2, inverse=True), [control, target])


def cx_hs(n: int, control: int, target: int) -> Circuit:
    """CNOT from H and two controlled-S^-1."""
    return circ(n, ("h", target), ("sdg", target, control), ("sdg", target, control), ("h", target))


def cx_plain(n: int, control: int, target: int) -> Circuit:
    return circ(n, ("x", target, control))


def h_fourier(n: int, wire: int) -> Circuit:
    return Circuit(n).append(qft_circuit(1), [wire])


def _truth_table(fn, n_bits: int) -> np.ndarray:
    dim = 2**n_bits
    m = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(dim):
        bits = [(k >> j) & 1 for j in range(n_bits)]
        out = fn(bits)
        m[sum(b << j for j, b in enumerate(out)), k] = 1
    return m


def step_over_matrix() -> np.ndarray:
    """CNOT q0 -> q2 in three qubits, from its truth table."""
    return _truth_table(lambda b: [b[0], b[1], b[2] ^ b[0]], 3)


def fanout_matrix(n: int) -> np.ndarray:
    """q0 copied onto every other wire: the double (n=3) and triple (n=4) Feynman gates."""
    return _truth_table(lambda b: [b[0]] + [x ^ b[0] for x in b[1:]], n)


# controlled-phase from phase gates and two CNOTs, orderings found by search
def controlled_phase_form(root: str, first: bool, cnot) -> Circuit:
    """Controlled-P on (0 -> 1) from ``root = sqrt(P)``, its inverse, and two CNOTs.

    ``first``: root on both wires, CNOT, inverse root on the target, CNOT.
    Otherwise the CNOT pair comes first and the roots last.
    """
    inv = g.INVERSE_NAMES[root]
    roots = circ(2, (root, 0), (root, 1))
    middle = cnot(2, 0, 1) + circ(2, (inv, 1)) + cnot(2, 0, 1)
    return roots + middle if first else middle + roots


def toffoli_nc(cnot) -> Circuit:
    """Six-CNOT Toffoli with T gates; exact, no global phase."""
    c = Circuit(3)
    steps = [
        ("h", 2), (1, 2), ("tdg", 2), (0, 2), ("t", 2), (1, 2), ("tdg", 2), (0, 2),
        ("t", 1), ("t", 2), ("h", 2), (0, 1), ("t", 0), ("tdg", 1), (0, 1),
    ]
    for a, b in steps:
        c = c + (cnot(3, a, b) if isinstance(a, int) else circ(3, (a, b)))
    return c


def toffoli_v(cv, cvdg, cnot) -> Circuit:
    """Five-gate Toffoli from controlled-V, controlled-V^-1 and two CNOTs."""
    return cv(1, 2) + cnot(3, 0, 1) + cvdg(1, 2) + cnot(3, 0, 1) + cv(0, 2)


def _cv_named(c: int, t: int) -> Circuit:
    return circ(3, ("v", t, c))


def _cvdg_named(c: int, t: int) -> Circuit:
    return circ(3, ("vdg", t, c))


def _cv_from_ct(c: int, t: int) -> Circuit:
    return circ(3, ("h", t), ("t", t, c), ("t", t, c), ("h", t))


def _cvdg_from_ctdg(c: int, t: int) -> Circuit:
    return circ(3, ("h", t), ("tdg", t, c), ("tdg", t, c), ("h", t))


def toffoli_double_controlled_iqft() -> Circuit:
    """Two controlled-F4^-1 blocks on (1, 2) with control 0; their product is the Toffoli."""
    f = iqft_matrix(2)
    return Circuit(3).add(f, (1, 2), controls=0, label="iqft2").add(f, (1, 2), controls=0, label="iqft2")


def toffoli_module() -> Circuit:
    return circ(3, ("x", 2, (0, 1)))


def fredkin_from(toffoli: Circuit, cnot) -> Circuit:
    """Controlled-SWAP: flipped CNOT (2 -> 1) around the Toffoli."""
    return cnot(3, 2, 1) + toffoli + cnot(3, 2, 1)


# Toffoli then CNOT(0 -> 1); the other order fails the Peres truth table
PERES_ORDER = "toffoli_then_cnot"


def peres_from(toffoli: Circuit, cnot) -> Circuit:
    return toffoli + cnot(3, 0, 1)


def miller_from(toffoli: Circuit, cnot) -> Circuit:
    """Toffoli conjugated by a flipped CNOT (2 -> 1) and a step-over CNOT (2 -> 0)."""
    return cnot(3, 2, 1) + cnot(3, 2, 0) + toffoli + cnot(3, 2, 0) + cnot(3, 2, 1)


# -- the catalog --------------------------------------------------------------


@lru_cache(maxsize=1)
def _catalog() -> tuple[Identity, ...]:
    cat = g.catalog()
    H, X, Y, Z = g.H, g.X, g.Y, g.Z
    ids: list[Identity] = []

    def add(id_, lhs, rhs, reference, **kw):
        ids.append(Identity(id_, lhs, rhs, reference, **kw))

    # one qubit
    add("qft1-is-hadamard", qft_matrix(1), H, "one-qubit Fourier transform equals H")
    add("iqft1-is-hadamard", iqft_matrix(1), H, "H is its own inverse transform")
    add("hadamard-from-x-plus-z", (X + Z) / np.sqrt(2), H, "H = (X + Z)/sqrt2")
    add("identity-from-hh", circ(1, ("h", 0), ("h", 0)), identity(2), "I = HH")
    add("identity-from-xx", circ(1, ("x", 0), ("x", 0)), identity(2), "I = XX")
    add("x-is-flipped-identity", flip_h(identity(2)), X, "X = I flipped")
    add("splitting-is-xh", g.SPLITTING, X @ H, "H flipped about the horizontal axis = XH")
    add("z-from-flipped-hadamard", X @ (flip_h(H) @ flip_h(H)), Z, "Z = X (H_flipped H_flipped)")
    add("z-is-hxh", circ(1, ("h", 0), ("x", 0), ("h", 0)), Z, "Z = HXH")
    add("y-from-flipped-z", 1j * flip_h(Z), Y, "Y = i Z_flipped")
    add("y-is-ixz", 1j * X @ Z, Y, "Y = iXZ")
    add("s-squared-is-z", circ(1, ("s", 0), ("s", 0)), Z, "S = sqrt(Z)")
    add("t-squared-is-s", circ(1, ("t", 0), ("t", 0)), g.S, "T = sqrt(S)")
    add("u-squared-is-t", circ(1, ("u", 0), ("u", 0)), g.T, "U = sqrt(T)")
    add("sdg-is-conj-s", g.S.conj(), g.SDG, "S^-1 = conj(S)")
    add("tdg-is-conj-t", g.T.conj(), g.TDG, "T^-1 = conj(T)")
    add("udg-is-conj-u", g.U.conj(), g.UDG, "U^-1 = conj(U)")
    add("v-is-htth", circ(1, ("h", 0), ("t", 0), ("t", 0), ("h", 0)), g.V, "V = sqrt(X) = HTTH")
    add("vdg-is-h-tdg-tdg-h", circ(1, ("h", 0), ("tdg", 0), ("tdg", 0), ("h", 0)), g.VDG,
        "V^-1 = conj(V) = H T^-1 T^-1 H")
    add("v-squared-is-x", circ(1, ("v", 0), ("v", 0)), X, "V = sqrt(X)")

    # two qubits: transform literals and squares
    f4_literal = 0.5 * np.array([[1, 1, 1, 1], [1, 1j, -1, -1j], [1, -1, 1, -1], [1, -1j, -1, 1j]])
    f4i_literal = 0.5 * np.array([[1, 1, 1, 1], [1, -1j, -1, 1j], [1, -1, 1, -1], [1, 1j, -1, -1j]])
    f4, f4i = qft_matrix(2), iqft_matrix(2)
    add("qft2-literal", f4, f4_literal, "printed F4 matrix")
    add("iqft2-literal", f4i, f4i_literal, "printed F4^-1 matrix")
    add("qft2-times-inverse", f4 @ f4i, identity(4), "F4 F4^-1 = I")
    add("qft2-squared-is-cnot", f4 @ f4, g.CNOT, "F4 F4 = CNOT (control q0, target q1)")
    add("iqft2-squared-is-cnot", f4i @ f4i, g.CNOT, "F4^-1 F4^-1 = CNOT")
    add("sqrt-cnot-squared", g.SQRT_CNOT @ g.SQRT_CNOT, g.CNOT, "sqrt(CNOT)^2 = CNOT")
    add("sqrt-cnot-is-not-qft2", g.SQRT_CNOT, f4, "sqrt(CNOT) differs from F4",
        expect_equal=False, min_distance=0.1)
    add("sqrt-cnot-is-not-iqft2", g.SQRT_CNOT, f4i, "sqrt(CNOT) differs from F4^-1",
        expect_equal=False, min_distance=0.1)
    add("qft2-circuit", qft_circuit(2), f4, "F4 from H, controlled-S and SWAP")
    add("iqft2-circuit", iqft_circuit(2), f4i, "F4^-1 from H, controlled-S^-1 and SWAP")
    hh = np.kron(H, H)
    add("cnot-orientations", hh @ g.cnot("a").matrix @ hh, g.cnot("b").matrix,
        "CX_b = (H x H) CX_a (H x H)")
    add("qft2-squared-swap-free", qft_squared_circuit(2), g.CNOT,
        "F4 x F4 from controlled-S and H only")
    add("iqft2-squared-swap-free", qft_squared_circuit(2, inverse=True), g.CNOT,
        "F4^-1 x F4^-1 from controlled-S^-1 and H only")
    add("qft2-squared-with-swaps", qft_circuit(2) + qft_circuit(2), g.CNOT,
        "F4 circuit applied twice, swaps included")
    # the swaps of the first copy cancel only once the second copy is mirrored
    ladder = qft_circuit(2, include_final_swaps=False)
    add("qft2-squared-swaps-cancelled", ladder + Circuit(2).append(ladder, [1, 0]), g.CNOT,
        "swap cancellation between consecutive F4 circuits")

    flipped = embed(g.CNOT, [1, 0], 2)
    add("flipped-cnot-by-h", flipped_cnot(), flipped, "flipped CNOT = (H x H) CNOT (H x H)")
    hh_f = h_fourier(2, 0) + h_fourier(2, 1)
    add("flipped-cnot-fourier", hh_f + cx_fourier(2, 0, 1) + hh_f, flipped,
        "flipped CNOT from F2 = H and F4^-1 x F4^-1")
    for k, form in enumerate(swap_constructions()):
        add(f"swap-form-{'abc'[k]}", form, g.SWAP, ("SWAP from CNOT and flipped CNOT",
            "SWAP from CNOT and H", "SWAP from F2 and F4^-1 x F4^-1")[k])

    cs, csdg = cat["cs"].matrix, cat["csdg"].matrix
    for first, tag in ((True, "a"), (False, "b")):
        add(f"controlled-s-form-{tag}", controlled_phase_form("t", first, cx_plain), cs,
            "controlled-S from T, T^-1 and CNOT")
        add(f"controlled-s-form-{tag}-fourier", controlled_phase_form("t", first, cx_fourier), cs,
            "controlled-S from T, T^-1 and F4^-1 x F4^-1")
        add(f"controlled-sdg-form-{tag}", controlled_phase_form("tdg", first, cx_plain), csdg,
            "controlled-S^-1 from T, T^-1 and CNOT")
        add(f"controlled-sdg-form-{tag}-fourier", controlled_phase_form("tdg", first, cx_fourier), csdg,
            "controlled-S^-1 from T, T^-1 and F4^-1 x F4^-1")

    anti_cx = embed(with_controls(X, 0, 1), [1, 0], 2)
    add("anti-control-by-inverters", circ(2, ("x", 0), ("x", 1, 0), ("x", 0)), anti_cx,
        "zero-control CNOT = X, CNOT, X")
    add("anti-control-native", circ(2, ("x", 1, (), 0)), anti_cx, "zero-control CNOT as a primitive")
    add("anti-control-fourier", circ(2, ("x", 0)) + cx_fourier(2, 0, 1) + circ(2, ("x", 0)), anti_cx,
        "zero-control CNOT via F4^-1 x F4^-1")

    add("cnot-from-controlled-s", circ(2, ("h", 1), ("s", 1, 0), ("s", 1, 0), ("h", 1)), g.CNOT,
        "CNOT from H and controlled-S")
    add("cnot-from-controlled-sdg", cx_hs(2, 0, 1), g.CNOT, "CNOT from H and controlled-S^-1")

    cz = cat["cz"].matrix
    add("cz-from-h-cnot", circ(2, ("h", 1)) + cx_plain(2, 0, 1) + circ(2, ("h", 1)), cz,
        "CZ from H and CNOT")
    add("cz-fourier", h_fourier(2, 1) + cx_fourier(2, 0, 1) + h_fourier(2, 1), cz,
        "CZ with H -> F2 and CNOT -> F4^-1 x F4^-1")
    add("cz-from-h-controlled-sdg", circ(2, ("h", 1)) + cx_hs(2, 0, 1) + circ(2, ("h", 1)), cz,
        "CZ from H and controlled-S^-1")
    add("cz-from-controlled-sdg", circ(2, ("sdg", 1, 0), ("sdg", 1, 0)), cz,
        "CZ as two controlled-S^-1")

    cy = cat["cy"].matrix
    add("cy-from-cnot", circ(2, ("sdg", 1)) + cx_plain(2, 0, 1) + circ(2, ("s", 1)), cy,
        "controlled-Y from S^-1, CNOT, S")
    add("cy-fourier", circ(2, ("sdg", 1)) + cx_fourier(2, 0, 1) + circ(2, ("s", 1)), cy,
        "controlled-Y from S^-1, F4^-1 x F4^-1, S")

    ct = cat["ct"].matrix
    add("ct-from-cnot", controlled_phase_form("u", True, cx_plain), ct,
        "controlled-T from U, CNOT, U^-1")
    add("ct-fourier", controlled_phase_form("u", True, cx_fourier), ct,
        "controlled-T from U, F4^-1 x F4^-1, U^-1")

    # S H T CNOT T^-1 H S^-1, all on the target; the only other target-wire match inverts every phase gate
    ch = cat["ch"].matrix
    ch_pre, ch_post = circ(2, ("s", 1), ("h", 1), ("t", 1)), circ(2, ("tdg", 1), ("h", 1), ("sdg", 1))
    add("ch-from-cnot", ch_pre + cx_plain(2, 0, 1) + ch_post, ch,
        "controlled-H from S, H, T, CNOT, T^-1, S^-1")
    add("ch-fourier", ch_pre + cx_fourier(2, 0, 1) + ch_post, ch,
        "controlled-H from S, H, T, F4^-1 x F4^-1, T^-1, S^-1")

    cv, cvdg = cat["cv"].matrix, cat["cvdg"].matrix
    add("cv-from-controlled-t", circ(2, ("h", 1), ("t", 1, 0), ("t", 1, 0), ("h", 1)), cv,
        "controlled-V from H and controlled-T")
    add("cvdg-from-controlled-tdg", circ(2, ("h", 1), ("tdg", 1, 0), ("tdg", 1, 0), ("h", 1)), cvdg,
        "controlled-V^-1 from H and controlled-T^-1")
    # flipped CNOT (1 -> 0) carries the phase kickback onto the control wire
    add("cv-from-flipped-cnot",
        circ(2, ("h", 1), ("t", 0), ("t", 1), ("x", 0, 1), ("tdg", 0), ("x", 0, 1), ("h", 1)), cv,
        "controlled-V from H, T, T^-1 and flipped CNOT")
    add("cvdg-from-flipped-cnot",
        circ(2, ("h", 1), ("tdg", 0), ("tdg", 1), ("x", 0, 1), ("t", 0), ("x", 0, 1), ("h", 1)), cvdg,
        "controlled-V^-1 from H, T, T^-1 and flipped CNOT")

    # three qubits
    add("qft3-circuit", qft_circuit(3), qft_matrix(3), "F8 from H, controlled-S, controlled-T, SWAP")
    add("iqft3-circuit", iqft_circuit(3), iqft_matrix(3),
        "F8^-1 from H, controlled-S^-1, controlled-T^-1, SWAP")
    add("iqft3-squared-with-swaps", iqft_circuit(3) + iqft_circuit(3), negation_permutation(3),
        "F8^-1 x F8^-1 with SWAP gates")
    add("iqft3-squared-swap-free", qft_squared_circuit(3, inverse=True), negation_permutation(3),
        "F8^-1 x F8^-1 without SWAP gates")

    step = step_over_matrix()
    add("step-over-direct", cx_plain(3, 0, 2), step, "CNOT stepping over an intermediate qubit")
    add("step-over-via-swaps", circ(3, ("swap", (1, 2))) + cx_plain(3, 0, 1) + circ(3, ("swap", (1, 2))),
        step, "step over by swapping the target next to the control")
    add("step-over-fourier", cx_fourier(3, 0, 2), step, "step over with F4^-1 x F4^-1")
    swap_f = Circuit(3).append(swap_constructions()[2], [1, 2])
    add("step-over-fourier-swaps", swap_f + cx_fourier(3, 0, 1) + swap_f, step,
        "step over with Fourier SWAPs around F4^-1 x F4^-1")
    add("step-over-h-controlled-sdg", cx_hs(3, 0, 2), step, "step over from H and controlled-S^-1")

    fan3 = fanout_matrix(3)
    add("double-feynman", cx_plain(3, 0, 1) + cx_plain(3, 0, 2), fan3, "double Feynman gate")
    add("double-feynman-fourier", cx_fourier(3, 0, 1) + cx_fourier(3, 0, 2), fan3,
        "double Feynman gate with F4^-1 x F4^-1")
    add("double-feynman-h-controlled-sdg", cx_hs(3, 0, 1) + cx_hs(3, 0, 2), fan3,
        "double Feynman gate from H and controlled-S^-1")

    tof, fred, peres, miller = g.TOFFOLI, g.FREDKIN, g.PERES, g.MILLER
    add("toffoli-nc", toffoli_nc(cx_plain), tof, "Toffoli from H, T, T^-1 and CNOT")
    add("fredkin-from-toffoli", fredkin_from(toffoli_module(), cx_plain), fred,
        "Fredkin from Toffoli and flipped CNOT")
    add("peres-from-toffoli", peres_from(toffoli_module(), cx_plain), peres, "Peres from Toffoli and CNOT")
    add("miller-from-toffoli", miller_from(toffoli_module(), cx_plain), miller,
        "Miller from Toffoli, step-over and flipped CNOT")
    add("toffoli-nc-fourier", toffoli_nc(cx_fourier), tof, "Toffoli with every CNOT as F4^-1 x F4^-1")
    add("toffoli-v-fourier", toffoli_v(_cv_named, _cvdg_named, cx_fourier), tof,
        "Toffoli from controlled-V, controlled-V^-1 and F4^-1 x F4^-1")
    for name, build, target in (("fredkin", fredkin_from, fred), ("peres", peres_from, peres),
                                ("miller", miller_from, miller)):
        add(f"{name}-fourier", build(toffoli_module(), cx_fourier), target,
            f"{name.capitalize()} from a Toffoli module and F4^-1 x F4^-1")
        add(f"{name}-h-controlled-sdg", build(toffoli_module(), cx_hs), target,
            f"{name.capitalize()} from a Toffoli module, H and controlled-S^-1")
    add("toffoli-controlled-t", toffoli_v(_cv_from_ct, _cvdg_from_ctdg, cx_hs), tof,
        "Toffoli from H, controlled-T, controlled-S^-1, controlled-T^-1")

    add("toffoli-v", toffoli_v(_cv_named, _cvdg_named, cx_plain), tof, "Toffoli from V and V^-1 gates")
    add("toffoli-v-expanded", toffoli_v(_cv_from_ct, _cvdg_from_ctdg, cx_plain), tof,
        "Toffoli with V = HTTH substituted")
    simplified = circ(3, ("h", 2), ("s", 2, 1)) + cx_plain(3, 0, 1) + circ(3, ("sdg", 2, 1)) \
        + cx_plain(3, 0, 1) + circ(3, ("s", 2, 0), ("h", 2))
    add("toffoli-v-simplified", simplified, tof, "Toffoli V network after H cancellation")
    simplified_hs = circ(3, ("h", 2), ("s", 2, 1)) + cx_hs(3, 0, 1) + circ(3, ("sdg", 2, 1)) \
        + cx_hs(3, 0, 1) + circ(3, ("s", 2, 0), ("h", 2))
    add("toffoli-v-simplified-hs", simplified_hs, tof,
        "simplified V network with CNOT from H and controlled-S^-1")

    block = np.zeros((8, 8), dtype=np.complex128)
    block[:4, :4] = identity(4)
    block[4:, 4:] = f4i
    add("controlled-iqft2-block", g.controlled(f4i), block, "controlled-F4^-1 = [[I, 0], [0, F4^-1]]")
    double_ciqft = toffoli_double_controlled_iqft()
    add("toffoli-double-controlled-iqft", double_ciqft, tof, "Toffoli as two controlled-F4^-1")
    for name, build, target in (("fredkin", fredkin_from, fred), ("peres", peres_from, peres),
                                ("miller", miller_from, miller)):
        add(f"{name}-double-controlled-iqft", build(double_ciqft, cx_fourier), target,
            f"{name.capitalize()} using the double controlled-F4^-1 Toffoli")

    # four qubits
    add("qft4-circuit", qft_circuit(4), qft_matrix(4),
        "F16 from H, controlled-S, controlled-T, controlled-U, SWAP")
    add("iqft4-circuit", iqft_circuit(4), iqft_matrix(4),
        "F16^-1 from H, controlled-S^-1, controlled-T^-1, controlled-U^-1, SWAP")
    add("iqft4-squared-with-swaps", iqft_circuit(4) + iqft_circuit(4), negation_permutation(4),
        "F16^-1 x F16^-1 with SWAP gates")
    add("iqft4-squared-swap-free", qft_squared_circuit(4, inverse=True), negation_permutation(4),
        "F16^-1 x F16^-1 without SWAP gates")
    fan4 = fanout_matrix(4)
    add("triple-feynman", cx_plain(4, 0, 1) + cx_plain(4, 0, 2) + cx_plain(4, 0, 3), fan4,
        "triple Feynman gate with two step-over CNOTs")
    add("triple-feynman-fourier", cx_fourier(4, 0, 1) + cx_fourier(4, 0, 2) + cx_fourier(4, 0, 3), fan4,
        "triple Feynman gate from F4^-1 x F4^-1")
    add("triple-feynman-h-controlled-sdg", cx_hs(4, 0, 1) + cx_hs(4, 0, 2) + cx_hs(4, 0, 3), fan4,
        "triple Feynman gate from H and controlled-S^-1")
    return tuple(ids)


def builtin_catalog() -> list[Identity]:
    return list(_catalog())


def identity_from_sources(id_: str, lhs_src: str, rhs_src: str, reference: str = "user") -> Identity:
    """Identity between two circuits written in the ``.fqc`` language."""
    from .dsl import parse

    return Identity(id_, parse(lhs_src), parse(rhs_src), reference)
