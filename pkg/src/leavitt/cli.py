"""Command-line surface: machine-first JSON on stdout, stable error codes.

Exit status: 0 for a completed computation (including negative answers such
as ``holds: false``), 2 for usage errors, 3 for input or parse errors, 4 for
computation errors (search bound exceeded, enumeration cap, or the
exitless-cycle obstruction).  Every error prints a JSON object with a stable
``code`` field.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import LeavittAlgebra
from .conditions import (
    check_condition_K_direct,
    check_condition_K_via_quotients,
    check_condition_L,
)
from .errors import (
    BoundExceededError,
    ExprSyntaxError,
    ExitlessCycleObstructionError,
    GraphTooLargeError,
    LeavittError,
)
from .exprs import element_terms_json, parse_element
from .fields import field_from_spec
from .graph import graph_from_json, graph_to_dict, path_to_dict
from .ideals import enumerate_hereditary_saturated, quotient_graph
from .reduction import (
    bab_witness,
    corner_to_laurent,
    idempotent_in_right_ideal,
    reduce_to_vertex,
    verify_theorem1,
    zorn_witness,
)

_COMPUTATION_CODES = {BoundExceededError.code, GraphTooLargeError.code,
                      ExitlessCycleObstructionError.code}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(payload: dict, pretty: bool) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2 if pretty else None))


def _load_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        err = ExprSyntaxError("cannot read graph file: %s" % exc)
        err.code = "FileNotFound"
        raise err
    return graph_from_json(text)


def _algebra(args):
    return LeavittAlgebra(_load_graph(args.graph), field_from_spec(args.field))


def _split_csv(text: str | None) -> list[str]:
    if not text:
        return []
    return [part for part in text.split(",") if part]


def build_parser() -> _Parser:
    parser = _Parser(prog="leavitt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="path to a graph JSON file")
    common.add_argument("--field", default="q",
                        help="coefficient field: q (default) or fp:<prime>")
    common.add_argument("--cap", type=int, default=15,
                        help="vertex cap for lattice enumeration")
    common.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")

    p = sub.add_parser("check-l", parents=[common],
                       help="decide Condition (L)")

    p = sub.add_parser("check-k", parents=[common],
                       help="decide Condition (K)")
    p.add_argument("--method", choices=["direct", "quotients"],
                   default="direct")

    sub.add_parser("hsat", parents=[common],
                   help="enumerate hereditary saturated vertex sets")

    p = sub.add_parser("quotient", parents=[common],
                       help="quotient graph of an admissible pair")
    p.add_argument("--h", dest="h", default="",
                   help="comma-separated hereditary saturated set")
    p.add_argument("--s", dest="s", default="",
                   help="comma-separated subset of the breaking vertices")

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate an expression to normal form")
    p.add_argument("expr")

    p = sub.add_parser("equal", parents=[common],
                       help="decide equality of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = sub.add_parser("reduce", parents=[common],
                       help="reduce an element to a vertex or obstruction")
    p.add_argument("expr")
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("zorn", parents=[common],
                       help="produce a verified Zorn witness")
    p.add_argument("expr")
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("bab", parents=[common],
                       help="produce b with b a b = b")
    p.add_argument("expr")
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("ideal-idem", parents=[common],
                       help="nonzero idempotent in the right ideal of the generators")
    p.add_argument("exprs", nargs="+")
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("laurent", parents=[common],
                       help="corner element as a Laurent polynomial")
    p.add_argument("--vertex", required=True)
    p.add_argument("expr")

    p = sub.add_parser("verify", parents=[common],
                       help="randomized witness/obstruction harness")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _run(args) -> dict:
    cmd = args.command
    if cmd == "check-l":
        return check_condition_L(_load_graph(args.graph)).to_dict()
    if cmd == "check-k":
        g = _load_graph(args.graph)
        if args.method == "direct":
            return check_condition_K_direct(g).to_dict()
        return check_condition_K_via_quotients(g, cap=args.cap).to_dict()
    if cmd == "hsat":
        g = _load_graph(args.graph)
        sets = enumerate_hereditary_saturated(g, cap=args.cap)
        return {"sets": [sorted(h) for h in sets]}
    if cmd == "quotient":
        g = _load_graph(args.graph)
        q = quotient_graph(g, _split_csv(args.h), _split_csv(args.s))
        return q.to_dict()
    alg = _algebra(args)
    if cmd == "eval":
        a = parse_element(alg, args.expr)
        return {"element": str(a), "terms": element_terms_json(a)}
    if cmd == "equal":
        a = parse_element(alg, args.expr1)
        b = parse_element(alg, args.expr2)
        return {"equal": alg.equal(a, b)}
    if cmd == "reduce":
        a = parse_element(alg, args.expr)
        return reduce_to_vertex(a, args.max_len).to_dict()
    if cmd == "zorn":
        a = parse_element(alg, args.expr)
        w = zorn_witness(a, args.max_len)
        out = w.to_dict()
        out["certificate"] = w.certificate.to_dict()
        return out
    if cmd == "bab":
        a = parse_element(alg, args.expr)
        b = bab_witness(a, args.max_len)
        return {"b": str(b), "checks": {"bab": True, "nonzero": True}}
    if cmd == "ideal-idem":
        gens = [parse_element(alg, text) for text in args.exprs]
        idem = idempotent_in_right_ideal(gens, args.max_len)
        return {"idempotent": str(idem)}
    if cmd == "laurent":
        a = parse_element(alg, args.expr)
        poly = corner_to_laurent(a, args.vertex)
        return {"vertex": args.vertex,
                "poly": poly.to_dict(alg.field),
                "rendered": poly.render(alg.field)}
    if cmd == "verify":
        g = _load_graph(args.graph)
        return verify_theorem1(g, args.trials, args.seed,
                               field=field_from_spec(args.field))
    raise _UsageError("unknown command %r" % cmd)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(json.dumps({"error": {"code": "UsageError", "message": str(exc)}},
                         sort_keys=True))
        return 2
    pretty = getattr(args, "pretty", False)
    try:
        payload = _run(args)
    except LeavittError as exc:
        error = {"code": exc.code, "message": str(exc)}
        if exc.details:
            error["details"] = {k: v for k, v in sorted(exc.details.items())
                                if isinstance(v, (str, int, float, bool, list))}
        if isinstance(exc, ExitlessCycleObstructionError) and exc.cycle is not None:
            error["cycle"] = path_to_dict(exc.cycle.path)
        print(json.dumps({"error": error}, sort_keys=True,
                         indent=2 if pretty else None))
        return 4 if exc.code in _COMPUTATION_CODES else 3
    _emit(payload, pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
