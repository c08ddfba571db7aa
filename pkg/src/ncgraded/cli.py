"""``ncgraded`` command-line front end.

Every command except ``emit`` prints a report (text by default, JSON with
``--json``).  The exit status is 0 when every entry passes, 1 when some
entry fails and 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .errors import NCGradedError, UnknownSelector
from .exactnum import parse_scalar
from .k0 import THREE_VERTEX_DIAGRAM, bratteli_dot, bratteli_json
from .monomial import (
    MONO_A,
    MonomialAlgebra,
    count_normal_words,
    graph_adjacency,
    transfer_matrix,
    ufnarovskii_graph,
)
from .ncalg import parse_presentation
from .points import special_sequences_json, successor_automaton_dot
from .quiver import QUIVER_Q, QUIVER_Q_PRIME, McKayWeights, mckay_quiver, path_count, to_dot, to_json, veronese
from .report import (
    Report,
    classify_checks,
    dumps,
    hilbert_checks,
    k0_checks,
    mckay_checks,
    points_checks,
    quiver_checks,
    twist_checks,
    verify_all,
    veronese_checks,
)
from .sklyanin import SklyaninParams

DEFAULT_MAXDEG = 8
EMIT_SELECTORS = ("quiver-Q", "quiver-Qprime", "ufnarovskii", "bratteli", "successor-automaton")


class UsageError(NCGradedError):
    pass


def _default_maxdeg() -> int:
    raw = os.environ.get("NCGRADED_MAXDEG")
    if raw is None:
        return DEFAULT_MAXDEG
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NCGRADED_MAXDEG={raw!r} is not an integer") from None


def _read_monomial(path: str) -> MonomialAlgebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return MonomialAlgebra.from_presentation(parse_presentation(text))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--dot", action="store_true", help="print the associated graph as DOT")
    common.add_argument("--maxdeg", type=int, default=None,
                        help=f"bound for degree-indexed checks (default {DEFAULT_MAXDEG}, or $NCGRADED_MAXDEG)")
    common.add_argument("--strict", action="store_true", help="include informational entries")
    common.add_argument("--inject-fault", action="append", default=[], metavar="ENTRY", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="ncgraded", description="Exact computations for degenerate "
                                     "three-dimensional Sklyanin algebras and related monomial algebras.")
    parser.add_argument("--version", action="version", version=f"ncgraded {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify (a:b:c) and check the witness")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series of a quadratic monomial algebra")
    p.add_argument("file", nargs="?", help="presentation file (default: the two built-in algebras)")

    p = sub.add_parser("ufnarovskii", parents=[common], help="Ufnarovskii graph of a monomial algebra")
    p.add_argument("file", nargs="?", help="presentation file (default: the two built-in algebras)")

    p = sub.add_parser("veronese", parents=[common], help="Veronese quivers of Q and Q'")
    p.add_argument("--power", type=int, default=3)
    p.add_argument("--quiver", choices=("Q", "Qprime"), default="Q", help="quiver for --dot output")

    sub.add_parser("twist", parents=[common], help="Zhang twists between the two monomial algebras")
    sub.add_parser("k0", parents=[common], help="Bratteli diagram and K0 checks")

    p = sub.add_parser("mckay", parents=[common], help="McKay quivers of cyclic actions")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--weights", default=None, help="comma-separated generator weights, e.g. 1,2")

    sub.add_parser("points", parents=[common], help="point-module checks")

    p = sub.add_parser("emit", parents=[common], help="print a graph or listing")
    p.add_argument("what", help="|".join(EMIT_SELECTORS) + " or special-sequences")
    p.add_argument("file", nargs="?", help="presentation file for 'ufnarovskii'")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--levels", type=int, default=2, help="Bratteli levels after the first")
    p.add_argument("-n", type=int, default=2, help="sequence length minus one for special-sequences")

    sub.add_parser("verify-all", parents=[common], help="run every reproduction check")
    return parser


def _inputs(args: argparse.Namespace, maxdeg: int) -> dict:
    skip = {"json", "dot", "strict", "inject_fault", "command", "maxdeg"}
    out = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    out["maxdeg"] = maxdeg
    return out


def _run_report(args: argparse.Namespace, maxdeg: int) -> tuple[Report, str | None]:
    """Fill a report for ``args.command``; the second value is DOT text if one applies."""
    r = Report(args.command, _inputs(args, maxdeg), strict=args.strict, faults=frozenset(args.inject_fault))
    dot = None
    cmd = args.command
    if cmd == "classify":
        params = SklyaninParams(*(parse_scalar(x) for x in (args.a, args.b, args.c)))
        r.inputs["normalised"] = str(params)
        classify_checks(r, params)
    elif cmd == "hilbert":
        algebras = [("input", _read_monomial(args.file))] if args.file else None
        hilbert_checks(r, maxdeg, algebras)
    elif cmd == "ufnarovskii":
        if args.file:
            m = _read_monomial(args.file)
            g = ufnarovskii_graph(m)
            r.check("ufnarovskii/adjacency-is-transfer-matrix", transfer_matrix(m), graph_adjacency(m))
            r.check("ufnarovskii/paths-count-normal-words",
                    [count_normal_words(m, n) for n in range(1, maxdeg + 1)],
                    [path_count(g, n - 1) for n in range(1, maxdeg + 1)])
            dot = to_dot(g, "ufnarovskii")
        else:
            quiver_checks(r)
            dot = to_dot(ufnarovskii_graph(MONO_A), "ufnarovskii")
    elif cmd == "veronese":
        veronese_checks(r, args.power)
        base = QUIVER_Q if args.quiver == "Q" else QUIVER_Q_PRIME
        dot = to_dot(veronese(base, args.power), "veronese")
    elif cmd == "twist":
        twist_checks(r)
    elif cmd == "k0":
        k0_checks(r)
        dot = bratteli_dot(THREE_VERTEX_DIAGRAM, 2)
    elif cmd == "mckay":
        if args.order is None and args.weights is None:
            mckay_checks(r, maxdeg)
            dot = to_dot(mckay_quiver(McKayWeights(3, (1, 2))), "mckay")
        else:
            order = args.order if args.order is not None else 3
            weights = tuple(int(x) for x in (args.weights or "1,2").split(","))
            q = mckay_quiver(McKayWeights(order, weights))
            g = len(weights)
            r.check("mckay/path-counts", [order * g ** d for d in range(maxdeg + 1)],
                    [path_count(q, d) for d in range(maxdeg + 1)])
            dot = to_dot(q, "mckay")
    elif cmd == "points":
        points_checks(r, maxdeg)
        dot = successor_automaton_dot()
    elif cmd == "verify-all":
        if maxdeg < 4:
            raise UsageError("verify-all needs --maxdeg >= 4")
        verify_all(r, maxdeg)
    return r, dot


def emit(what: str, fmt: str = "dot", file: str | None = None, levels: int = 2, n: int = 2) -> str:
    """Deterministic DOT or JSON text for a named object."""
    if what == "quiver-Q":
        return to_dot(QUIVER_Q, "Q") if fmt == "dot" else dumps(to_json(QUIVER_Q))
    if what == "quiver-Qprime":
        return to_dot(QUIVER_Q_PRIME, "Qprime") if fmt == "dot" else dumps(to_json(QUIVER_Q_PRIME))
    if what == "ufnarovskii":
        if file is None:
            raise UsageError("emit ufnarovskii needs a presentation file")
        g = ufnarovskii_graph(_read_monomial(file))
        return to_dot(g, "ufnarovskii") if fmt == "dot" else dumps(to_json(g))
    if what == "bratteli":
        if fmt == "dot":
            return bratteli_dot(THREE_VERTEX_DIAGRAM, levels)
        return dumps(bratteli_json(THREE_VERTEX_DIAGRAM, levels))
    if what == "successor-automaton":
        if fmt != "dot":
            raise UsageError("the successor automaton is only available as DOT")
        return successor_automaton_dot()
    if what == "special-sequences":
        return dumps(special_sequences_json(n))
    raise UnknownSelector(f"unknown selector {what!r}; choose from {', '.join(EMIT_SELECTORS)}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        maxdeg = args.maxdeg if args.maxdeg is not None else _default_maxdeg()
        if args.command == "emit":
            sys.stdout.write(emit(args.what, args.format, args.file, args.levels, args.n))
            return 0
        report, dot = _run_report(args, maxdeg)
    except (NCGradedError, OSError, ValueError) as exc:
        print(f"ncgraded: error: {exc}", file=sys.stderr)
        return 2
    if args.dot:
        if dot is None:
            print(f"ncgraded: error: {args.command} has no DOT output", file=sys.stderr)
            return 2
        sys.stdout.write(dot)
    elif args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.ok else 1


def roundtrip(text: str) -> str:
    """Parse and re-serialise a JSON report (used to check byte stability)."""
    return dumps(json.loads(text))


if __name__ == "__main__":
    raise SystemExit(main())
