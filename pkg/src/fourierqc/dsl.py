"""The ``.fqc`` circuit language.

A file starts with ``qubits N`` and then holds one gate per line::

    qubits 3
    h 0
    cx 0 1        # controls first, targets last
    cx !0 2       # '!' marks an anti-control (fires on |0>)
    iqft2 1 2     # Fourier blocks expand over an inclusive wire range

``#`` starts a comment. Mnemonics follow the usual platform spellings
(``sdg`` for S^-1); the one-qubit pi/8 phase gate is ``u`` and its inverse
``udg``. ``qft``/``iqft``/``qft2``/``iqft2`` are expanded into H,
controlled-phase and SWAP gates when parsed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .circuit import Circuit, CircuitOp
from .qft import MAX_QUBITS, qft_circuit, qft_squared_circuit


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1, token: str = "", path: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{column}: {message}" + (f" (at {token!r})" if token else ""))


class EmitError(ValueError):
    pass


@dataclass(frozen=True)
class GateSyntax:
    gate: str  # catalog name of the base gate
    controls: int
    targets: int


GATES: dict[str, GateSyntax] = {
    name: GateSyntax(name, 0, 1)
    for name in ("id", "x", "y", "z", "h", "s", "sdg", "t", "tdg", "u", "udg", "v", "vdg")
}
GATES["swap"] = GateSyntax("swap", 0, 2)
for _base in ("x", "s", "sdg", "t", "tdg", "u", "udg", "z", "y", "h", "v", "vdg"):
    GATES["c" + _base] = GateSyntax(_base, 1, 1)
GATES["ccx"] = GateSyntax("x", 2, 1)
GATES["cswap"] = GateSyntax("swap", 1, 2)
GATES["peres"] = GateSyntax("peres", 0, 3)
GATES["miller"] = GateSyntax("miller", 0, 3)

BLOCKS = ("qft", "iqft", "qft2", "iqft2")

_MNEMONIC = {(s.gate, s.controls, s.targets): name for name, s in GATES.items()}
_WIRE = re.compile(r"(!?)([0-9]{1,6})")
_INT = re.compile(r"[0-9]{1,6}")


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _block(name: str, lo: int, hi: int) -> Circuit:
    width = hi - lo + 1
    inverse = name.startswith("i")
    if name.endswith("2"):
        return qft_squared_circuit(width, inverse=inverse)
    return qft_circuit(width, inverse=inverse)


def parse(src: str | bytes, path: str | None = None) -> Circuit:
    """Parse ``.fqc`` source; every failure is a :class:`ParseError` with a location."""
    if isinstance(src, (bytes, bytearray)):
        try:
            src = bytes(src).decode("utf-8")
        except UnicodeDecodeError as exc:
            line = bytes(src)[: exc.start].count(b"\n") + 1
            raise ParseError("source is not valid UTF-8", line, path=path) from None
    n_qubits: int | None = None
    c: Circuit | None = None
    last_line = 1
    for lineno, raw in enumerate(src.splitlines(), start=1):
        last_line = lineno
        toks = _tokens(raw.split("#", 1)[0])
        if not toks:
            continue
        head, col = toks[0]
        if n_qubits is None:
            if head != "qubits":
                raise ParseError("expected 'qubits N' header", lineno, col, head, path)
            if len(toks) != 2 or not _INT.fullmatch(toks[1][0]):
                tok, tcol = toks[1] if len(toks) > 1 else ("", col + len(head))
                raise ParseError("header needs one qubit count", lineno, tcol, tok, path)
            n_qubits = int(toks[1][0])
            if not 1 <= n_qubits <= MAX_QUBITS:
                raise ParseError(f"qubit count must be in 1..{MAX_QUBITS}", lineno, toks[1][1], toks[1][0], path)
            c = Circuit(n_qubits)
            continue
        if head == "qubits":
            raise ParseError("duplicate header", lineno, col, head, path)
        c = _parse_op(c, head, col, toks[1:], lineno, path)
    if c is None:
        raise ParseError("missing 'qubits N' header", last_line, 1, "", path)
    return c


def _wire(tok: str, col: int, n: int, lineno: int, path, allow_anti: bool) -> tuple[int, bool]:
    m = _WIRE.fullmatch(tok)
    if not m:
        raise ParseError("expected a qubit index", lineno, col, tok, path)
    anti, q = bool(m.group(1)), int(m.group(2))
    if anti and not allow_anti:
        raise ParseError("'!' is only allowed on control qubits", lineno, col, tok, path)
    if q >= n:
        raise ParseError(f"qubit {q} out of range for {n} qubits", lineno, col, tok, path)
    return q, anti


def _parse_op(c: Circuit, head: str, col: int, args, lineno: int, path) -> Circuit:
    n = c.n_qubits
    if head in BLOCKS:
        if len(args) != 2:
            raise ParseError(f"{head} takes a wire range 'lo hi'", lineno, col, head, path)
        (lo, _), (hi, _) = (_wire(t, tc, n, lineno, path, False) for t, tc in args)
        if hi < lo:
            raise ParseError("wire range must have lo <= hi", lineno, args[1][1], args[1][0], path)
        width = hi - lo + 1
        if head.endswith("2") and not 2 <= width <= 4:
            raise ParseError(f"{head} needs a range of 2 to 4 wires", lineno, col, head, path)
        return c.append(_block(head, lo, hi), range(lo, hi + 1))
    syntax = GATES.get(head)
    if syntax is None:
        raise ParseError(f"unknown gate {head!r}", lineno, col, head, path)
    arity = syntax.controls + syntax.targets
    if len(args) != arity:
        raise ParseError(f"{head} takes {arity} qubit(s), got {len(args)}", lineno, col, head, path)
    wires = [_wire(t, tc, n, lineno, path, k < syntax.controls) for k, (t, tc) in enumerate(args)]
    seen: set[int] = set()
    for (q, _), (tok, tcol) in zip(wires, args):
        if q in seen:
            raise ParseError(f"qubit {q} used twice", lineno, tcol, tok, path)
        seen.add(q)
    ctrl = wires[: syntax.controls]
    return c.add(
        syntax.gate,
        [q for q, _ in wires[syntax.controls:]],
        controls=[q for q, anti in ctrl if not anti],
        anti_controls=[q for q, anti in ctrl if anti],
    )


def load(path: str | Path) -> Circuit:
    path = Path(path)
    return parse(path.read_bytes(), path=str(path))


def emit_op(op: CircuitOp) -> str:
    if op.gate is None:
        raise EmitError(f"inline matrix op {op!r} has no .fqc spelling")
    n_ctrl = len(op.controls) + len(op.anti_controls)
    name = _MNEMONIC.get((op.gate, n_ctrl, len(op.targets)))
    if name is None:
        raise EmitError(f"no mnemonic for {op.gate} with {n_ctrl} control(s)")
    ctrl = sorted([(q, "") for q in op.controls] + [(q, "!") for q in op.anti_controls])
    return " ".join([name] + [f"{mark}{q}" for q, mark in ctrl] + [str(q) for q in op.targets])


def emit(c: Circuit) -> str:
    return "".join([f"qubits {c.n_qubits}\n"] + [emit_op(op) + "\n" for op in c.ops])
