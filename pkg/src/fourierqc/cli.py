"""Command-line front end: ``fqc verify | equiv | sim | matrix | teleport | qss | catalog``.

Exit status is 0 on success, 1 when a check fails or a file does not parse,
and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import gates, identities, protocols
from .circuit import CircuitError
from .dsl import ParseError, load
from .linalg import DEFAULT_TOL, dist_up_to_phase, matrix_to_csv, matrix_to_json


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.15g}"


def fmt_complex(z: complex) -> str:
    return f"{fmt(z.real)} {fmt(z.imag)}"


def _complex_arg(text: str) -> complex:
    try:
        re_, im = text.split(",")
        return complex(float(re_), float(im))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}") from None


def _tolerance(text: str) -> float:
    tol = float(text)
    if not tol >= 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return tol


def cmd_verify(args) -> int:
    report = identities.run_all(args.tol, workers=args.workers)
    for r in report.results:
        status = "ok  " if r.ok else "FAIL"
        kind = "" if r.expect_equal else "  (expected distinct)"
        print(f"{status} {r.id:42s} distance={fmt(round(r.distance, 14))}{kind}")
    s = report.summary()
    print(
        f"{s['positive_passed']}/{s['positive']} identities hold, "
        f"{s['negative_held']}/{s['negative']} inequalities hold"
    )
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.ok else 1


def cmd_equiv(args) -> int:
    a, b = load(args.a), load(args.b)
    if a.n_qubits != b.n_qubits:
        print(f"width mismatch: {a.n_qubits} vs {b.n_qubits} qubits", file=sys.stderr)
        return 1
    distance, phase = dist_up_to_phase(a.unitary(), b.unitary())
    equal = distance < args.tol
    print(f"distance {fmt(distance)}")
    print(f"phase {fmt(phase)}")
    print("equivalent" if equal else "not equivalent")
    return 0 if equal else 1


def _print_branches(branches, as_json: bool) -> None:
    if as_json:
        rows = [
            {
                "outcome": b.bitstring,
                "probability": b.probability,
                "post_state": [[float(z.real), float(z.imag)] for z in b.state],
            }
            for b in branches
        ]
        print(json.dumps(rows, indent=2))
        return
    for b in branches:
        amps = "  ".join(fmt_complex(z) for z in b.state)
        print(f"{b.bitstring}  p={fmt(b.probability)}  post=[{amps}]")


def cmd_sim(args) -> int:
    c = load(args.file)
    n = c.n_qubits
    if args.state is None:
        psi = protocols.basis_state(n)
    else:
        if len(args.state) != n or set(args.state) - {"0", "1"}:
            raise UsageError(f"--state needs {n} characters of 0/1 (q0 rightmost)")
        psi = protocols.from_bitstring(args.state)
    out = protocols.apply(c, psi)
    if args.branches or args.shots:
        qubits = list(range(n)) if args.measure is None else args.measure
        if any(not 0 <= q < n for q in qubits) or len(set(qubits)) != len(qubits):
            raise UsageError(f"--measure needs distinct qubits in 0..{n - 1}")
        if args.shots:
            for key, count in protocols.sample(out, qubits, args.shots, args.seed).items():
                print(f"{key} {count}")
        else:
            _print_branches(protocols.measure(out, qubits), args.json)
        return 0
    if args.json:
        print(json.dumps([[float(z.real), float(z.imag)] for z in out]))
        return 0
    for k, z in enumerate(out):
        print(f"{k:>{len(str(2**n - 1))}} |{k:0{n}b}>  {fmt_complex(z)}")
    return 0


def cmd_matrix(args) -> int:
    u = load(args.file).unitary()
    sys.stdout.write(matrix_to_json(u) + "\n" if args.format == "json" else matrix_to_csv(u))
    return 0


def _secret(args) -> np.ndarray:
    psi = np.array([args.alpha, args.beta], dtype=np.complex128)
    if args.normalize:
        norm = np.linalg.norm(psi)
        if norm == 0:
            raise UsageError("alpha and beta cannot both be zero")
        psi = psi / norm
    try:
        protocols.check_normalized(psi)
    except ValueError as exc:
        raise UsageError(f"{exc}; pass --normalize to rescale") from None
    return psi


def _print_protocol(result: protocols.ProtocolResult, as_json: bool) -> None:
    if as_json:
        print(result.to_json())
        return
    for b in result.branches:
        amps = "  ".join(fmt_complex(z) for z in b.state)
        print(
            f"{b.bitstring}  p={fmt(b.probability)}  correction={b.correction:2s}  "
            f"fidelity={fmt(b.fidelity)}  output=[{amps}]"
        )


def cmd_teleport(args) -> int:
    result = protocols.teleport(_secret(args), args.variant)
    _print_protocol(result, args.json)
    return 0 if result.min_fidelity > 1 - 1e-10 else 1


def cmd_qss(args) -> int:
    result = protocols.qss(_secret(args), args.parties, args.variant)
    _print_protocol(result, args.json)
    return 0 if result.min_fidelity > 1 - 1e-10 else 1


def cmd_catalog(args) -> int:
    entries = [
        {"name": name, "arity": gdef.arity, "matrix": json.loads(matrix_to_json(gdef.matrix))}
        for name, gdef in gates.catalog().items()
    ]
    print(json.dumps(entries))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fqc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check every built-in identity")
    v.add_argument("--tol", type=_tolerance, default=DEFAULT_TOL)
    v.add_argument("--json", metavar="PATH", help="write the report as JSON")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("equiv", help="compare two circuits up to global phase")
    e.add_argument("a")
    e.add_argument("b")
    e.add_argument("--tol", type=_tolerance, default=DEFAULT_TOL)
    e.set_defaults(func=cmd_equiv)

    s = sub.add_parser("sim", help="run a circuit on a basis state")
    s.add_argument("file")
    s.add_argument("--state", metavar="BITSTRING", help="initial basis state, q0 rightmost")
    s.add_argument("--branches", action="store_true", help="print the measurement branch table")
    s.add_argument("--measure", type=lambda t: [int(q) for q in t.split(",")], metavar="Q,Q,...",
                   help="qubits to measure (default: all)")
    s.add_argument("--shots", type=int, default=0, help="sample this many shots instead (demo)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sim)

    m = sub.add_parser("matrix", help="print a circuit's unitary")
    m.add_argument("file")
    m.add_argument("--format", choices=("json", "csv"), required=True)
    m.set_defaults(func=cmd_matrix)

    for name, variants, func in (
        ("teleport", protocols.TELEPORT_VARIANTS, cmd_teleport),
        ("qss", protocols.QSS_VARIANTS, cmd_qss),
    ):
        t = sub.add_parser(name, help=f"{name} a qubit alpha|0> + beta|1> and list every branch")
        t.add_argument("--alpha", type=_complex_arg, required=True, metavar="RE,IM")
        t.add_argument("--beta", type=_complex_arg, required=True, metavar="RE,IM")
        t.add_argument("--variant", choices=variants, default="a")
        t.add_argument("--normalize", action="store_true")
        t.add_argument("--json", action="store_true")
        if name == "qss":
            t.add_argument("--parties", type=int, choices=(3, 4), required=True)
        t.set_defaults(func=func)

    c = sub.add_parser("catalog", help="dump every named gate as JSON")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fqc: error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (CircuitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
