"""Command-line interface: ``gallai-ramsey <command> ...``.

Exit codes: 0 answer determined / valid, 1 pattern found / not found /
inconclusive, 2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .coloring import ColoringFormatError, DoubleStarSpec, EdgeColoring
from .constructions import KINDS, RAMSEY_STRATEGIES, CertificationError, NotFoundError, construct
from .detectors import violations
from .formulas import evaluate
from .partition import (
    RainbowTriangleError,
    find_gallai_partition,
    generate_random_gallai,
    reduced_graph,
)
from .search import (
    Budget,
    SearchOptions,
    SearchProblem,
    Status,
    compute_ramsey,
    search_valid_coloring,
)

OK, FAIL, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def load_schema(name: str) -> dict:
    """Published JSON schema for one of the CLI outputs, e.g. ``"certificate"``."""
    path = resources.files("gallai_ramsey") / "schemas" / f"{name}.schema.json"
    return json.loads(path.read_text(encoding="utf-8"))


def _styled(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{code}m{text}\033[0m"


def _emit(obj):
    print(json.dumps(obj))


def _diag(msg: str):
    print(f"gallai-ramsey: {msg}", file=sys.stderr)


def _load(path: str) -> EdgeColoring:
    if path == "-":
        return EdgeColoring.loads(sys.stdin.read())
    return EdgeColoring.load(path)


def _spec(args) -> DoubleStarSpec:
    try:
        return DoubleStarSpec(args.n, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _budget(args) -> Budget:
    try:
        return Budget(nodes=args.node_budget, seconds=args.time_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _options(args) -> SearchOptions:
    try:
        return SearchOptions(threads=args.threads, prefix_edges=args.prefix_edges,
                             vertex_symmetry=args.vertex_symmetry)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# commands --------------------------------------------------------------------


def cmd_construct(args) -> int:
    strategies = [args.strategy] if args.strategy else None
    try:
        coloring, cert = construct(args.kind, args.n, args.m, args.k, strategies)
    except NotFoundError as exc:
        _diag(str(exc))
        return FAIL
    except CertificationError as exc:
        _diag(str(exc))
        return FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cert_json = cert.to_json()
    if args.out in (None, "-"):
        sys.stdout.write(coloring.dumps())
    else:
        coloring.save(args.out)
        cert_path = args.cert or args.out + ".cert.json"
        with open(cert_path, "w", encoding="utf-8") as fh:
            json.dump(cert_json, fh, indent=2)
            fh.write("\n")
        if args.json:
            _emit(cert_json)
        else:
            status = _styled("valid", "32", sys.stdout)
            print(f"{args.kind} n={args.n} m={args.m} k={cert.colors}: order {cert.order}, "
                  f"{status} ({cert.strategy}) -> {args.out}")
    return OK


def cmd_validate(args) -> int:
    coloring = _load(args.file)
    bad = violations(coloring, _spec(args), args.rainbow)
    if args.json:
        _emit({"valid": bad is None, "witness": bad.to_json() if bad else None})
    elif bad is None:
        print(_styled("ok", "32", sys.stdout))
    else:
        _emit(bad.to_json())
    return OK if bad is None else FAIL


def cmd_partition(args) -> int:
    coloring = _load(args.file)
    if coloring.order < 2:
        raise UsageError("partition needs a coloring of order >= 2")
    try:
        part = find_gallai_partition(coloring)
    except RainbowTriangleError as exc:
        _diag(str(exc))
        _emit(exc.witness.to_json())
        return FAIL
    reduced = reduced_graph(coloring, part)
    if args.json:
        _emit({"partition": part.to_json(), "reducedGraph": reduced.dumps(),
               "usedColors": sorted(part.used_colors)})
    else:
        _emit(part.to_json())
        sys.stdout.write(reduced.dumps())
    return OK


def cmd_search(args) -> int:
    problem = SearchProblem(args.order, args.colors, _spec(args), args.rainbow)
    out = search_valid_coloring(problem, _budget(args), _options(args))
    witness_file = None
    if out.witness is not None and args.out:
        out.witness.save(args.out)
        witness_file = args.out
    record = out.to_json()
    record["witnessFile"] = witness_file
    if args.result:
        with open(args.result, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    if args.json:
        _emit(record)
    else:
        print(f"{out.status.value} nodes={out.stats.nodes} time={out.stats.wall_time:.3f}s")
        if out.witness is not None and not args.out:
            sys.stdout.write(out.witness.dumps())
    return FAIL if out.status is Status.INCONCLUSIVE else OK


def cmd_number(args) -> int:
    res = compute_ramsey(_spec(args), args.colors, args.max_order, _budget(args),
                         _options(args), forbid_rainbow=args.rainbow)
    witness_file = None
    if res.witness is not None and args.witness_out:
        res.witness.save(args.witness_out)
        witness_file = args.witness_out
    record = res.to_json()
    record["witnessFile"] = witness_file
    if args.json:
        _emit(record)
    elif res.value is not None:
        print(res.value)
    else:
        print(f"{_styled('Inconclusive', '33', sys.stdout)} (value >= {res.lower_bound})")
    return OK if res.value is not None else FAIL


def cmd_formula(args) -> int:
    try:
        report = evaluate(args.which, args.n, args.m, args.k, args.relaxed_gate)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _emit(report.to_json())
    else:
        print(report.to_text())
    return OK


def _tree_json(node) -> dict:
    return {"vertices": list(node.vertices),
            "base": None if node.base is None else node.base.tolist(),
            "cliqueColor": node.clique_color,
            "children": [_tree_json(ch) for ch in node.children]}


def cmd_generate(args) -> int:
    if args.order < 1 or args.colors < 1:
        raise UsageError("order and colors must be >= 1")
    coloring, tree = generate_random_gallai(args.order, args.colors, args.seed)
    if args.out:
        coloring.save(args.out)
    else:
        sys.stdout.write(coloring.dumps())
    if args.tree or args.json:
        record = {"order": args.order, "colors": args.colors, "seed": args.seed,
                  "coloringFile": args.out, "tree": _tree_json(tree)}
        if args.tree:
            with open(args.tree, "w", encoding="utf-8") as fh:
                json.dump(record, fh)
                fh.write("\n")
        if args.json and args.out:
            _emit(record)
    return OK


# parser ----------------------------------------------------------------------


def _add_spec(p, required=True):
    p.add_argument("-n", type=int, required=required, help="leaves at the larger star")
    p.add_argument("-m", type=int, required=required, help="leaves at the smaller star")


def _add_search_flags(p):
    p.add_argument("--colors", "-k", type=int, required=True)
    _add_spec(p)
    p.add_argument("--rainbow", action="store_true", help="also forbid rainbow triangles")
    p.add_argument("--node-budget", type=int, default=None, help="node limit per shard")
    p.add_argument("--time-budget", type=float, default=None, help="seconds (advisory)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--prefix-edges", type=int, default=0, help="shard on the first P edges")
    p.add_argument("--vertex-symmetry", action="store_true",
                   help="extra vertex symmetry breaking (off by default)")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gallai-ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a certified lower-bound coloring")
    p.add_argument("--kind", choices=KINDS, required=True)
    _add_spec(p)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--strategy", choices=RAMSEY_STRATEGIES, default=None,
                   help="force one ramsey-lower strategy")
    p.add_argument("--out", default=None)
    p.add_argument("--cert", default=None, help="certificate path (default OUT.cert.json)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="check a coloring for forbidden patterns")
    p.add_argument("file")
    _add_spec(p)
    p.add_argument("--rainbow", action="store_true", help="also forbid rainbow triangles")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("partition", help="coarsest Gallai partition and reduced graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("search", help="search for a coloring of K_N avoiding the patterns")
    p.add_argument("--order", "-N", type=int, required=True)
    _add_search_flags(p)
    p.add_argument("--out", default=None, help="write the witness coloring here")
    p.add_argument("--result", default=None, help="write the JSON result record here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("number", help="smallest order where every coloring has a pattern")
    _add_search_flags(p)
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--witness-out", default=None)
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("formula", help="evaluate a closed-form bound")
    p.add_argument("--which", choices=("ramsey", "gr-exact", "gr-bounds"), required=True)
    _add_spec(p)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--relaxed-gate", action="store_true", help="exact value from n >= 6m+5")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("generate", help="random Gallai coloring by substitution")
    p.add_argument("--order", "-N", type=int, required=True)
    p.add_argument("--colors", "-k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--tree", default=None, help="write the substitution tree as JSON")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ColoringFormatError) as exc:
        _diag(str(exc))
        return ERROR
    except (OSError, ValueError) as exc:
        _diag(str(exc))
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
