"""Command-line front end.

Exit codes: 0 pass or positive verdict, 1 failure or counterexample,
2 usage error, 3 budget exhausted or unknown.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version

from .arrows import SearchConfig, arrows, ramsey_number
from .bounds import bounds_table, goodness_value
from .colorings import burr_coloring, verify_extremal
from .corpus import SUITES, run_suite
from .generate import gen_connected
from .graph_core import Graph6Error, SimpleGraph, from_graph6, to_graph6
from .trichotomy import DegenerateParameters, trichotomy_analysis, tree_trichotomy
from .verify import verify_document

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

EPSILON_NOTE = (
    "epsilon was supplied on the command line; no value is fixed by the underlying "
    "theory, so main_budget is only as good as this input"
)


def tool_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    input_digests: dict[str, str] = field(default_factory=dict)
    tool_version: str = field(default_factory=tool_version)
    wall_time: float = 0.0
    summary: str = ""


class UsageError(Exception):
    pass


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def read_graph(arg: str | None) -> tuple[SimpleGraph, str]:
    if arg is None:
        raise UsageError("--graph is required")
    text = arg
    if arg.startswith("@"):
        try:
            with open(arg[1:]) as fh:
                text = next((ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")), "")
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc}") from exc
    try:
        g = from_graph6(text.strip())
    except Graph6Error as exc:
        raise UsageError(f"bad graph6 input: {exc}") from exc
    return g, to_graph6(g)


def parse_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("epsilon must be positive")
    return value


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")


def _search_config(args) -> SearchConfig:
    return SearchConfig(symmetry=args.symmetry, node_budget=args.budget_nodes, time_budget=args.budget_secs)


# -- subcommands ------------------------------------------------------------


def cmd_trichotomy(args, man: RunManifest):
    _need(args, "q", "ell")
    g, g6 = read_graph(args.graph)
    man.input_digests["graph"] = _sha(g6)
    analysis = trichotomy_analysis(g, args.q, args.ell)
    doc = {"kind": "trichotomy", "graph": g6, **analysis.to_json()}
    man.summary = analysis.certificate.kind
    return doc, EXIT_OK


def cmd_tree(args, man: RunManifest):
    _need(args, "a", "b", "gamma")
    g, g6 = read_graph(args.graph)
    man.input_digests["graph"] = _sha(g6)
    cert = tree_trichotomy(g, args.a, args.b, args.gamma)
    man.summary = cert.kind
    doc = {"kind": "tree_trichotomy", "graph": g6, "a": args.a, "b": args.b, "gamma": args.gamma}
    return {**doc, "certificate": cert.to_json()}, EXIT_OK


def cmd_arrows(args, man: RunManifest):
    _need(args, "t", "m", "N")
    g, g6 = read_graph(args.graph)
    man.input_digests["graph"] = _sha(g6)
    res = arrows(args.N, g, args.t, args.m, _search_config(args))
    man.summary = res.status
    code = {True: EXIT_OK, False: EXIT_FAIL, None: EXIT_UNKNOWN}[res.arrows]
    return {"kind": "arrows", "graph": g6, "t": args.t, "m": args.m, **res.to_json()}, code


def cmd_ramsey(args, man: RunManifest):
    _need(args, "t", "m")
    g, g6 = read_graph(args.graph)
    man.input_digests["graph"] = _sha(g6)
    cert = ramsey_number(g, args.t, args.m, _search_config(args), max_N=args.N or 16)
    man.summary = f"r = {cert.value}" if cert.complete else f"bracket {list(cert.bracket)}"
    return {"kind": "ramsey", **cert.to_json()}, EXIT_OK if cert.complete else EXIT_UNKNOWN


def cmd_extremal(args, man: RunManifest):
    _need(args, "n", "m", "t")
    if args.n < args.t or goodness_value(args.n, args.m, args.t) <= 1:
        raise UsageError("need n >= t and a coloring on at least one vertex")
    c = burr_coloring(args.n, args.m, args.t)
    report = verify_extremal(c, args.n, args.t, args.m)
    man.summary = "pass" if report.passed else "fail"
    doc = {"kind": "extremal", "n": args.n, "m": args.m, "t": args.t, "N": c.N}
    return {**doc, "coloring": c.to_json(), "report": report.to_json()}, EXIT_OK if report.passed else EXIT_FAIL


def cmd_bounds(args, man: RunManifest):
    _need(args, "m", "t", "epsilon")
    g, g6 = read_graph(args.graph)
    man.input_digests["graph"] = _sha(g6)
    table = [r.to_json() for r in bounds_table(g, args.m, args.t, args.epsilon)]
    man.summary = f"{len(table)} rows, epsilon = {args.epsilon} (caller-supplied)"
    doc = {"kind": "bounds", "graph": g6, "m": args.m, "t": args.t, "epsilon": str(args.epsilon)}
    doc["epsilon_note"] = EPSILON_NOTE
    return {**doc, "table": table}, EXIT_OK


def cmd_verify(args, man: RunManifest):
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
    man.input_digests["certificate"] = _sha(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}") from exc
    report = verify_document(doc)
    man.summary = "pass" if report.passed else "fail"
    return report.to_json(), EXIT_OK if report.passed else EXIT_FAIL


def cmd_corpus(args, man: RunManifest):
    rows = run_suite(args.suite, args.n)
    failed = sum(1 for r in rows if not r["passed"])
    man.summary = f"{len(rows) - failed}/{len(rows)} passed"
    return {"kind": "corpus", "suite": args.suite, "rows": rows}, EXIT_OK if not failed else EXIT_FAIL


def cmd_gen(args, man: RunManifest):
    _need(args, "n")
    lines = [to_graph6(g) for g in gen_connected(args.n, args.k_max)]
    man.summary = f"{len(lines)} graphs"
    return {"kind": "graphs", "n": args.n, "k_max": args.k_max, "graphs": lines}, EXIT_OK


COMMANDS = {
    "trichotomy": cmd_trichotomy,
    "tree": cmd_tree,
    "arrows": cmd_arrows,
    "ramsey": cmd_ramsey,
    "extremal": cmd_extremal,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", "-g", help="graph6 string, or @FILE holding one")
    common.add_argument("--q", type=int, help="suspended-path order threshold")
    common.add_argument("--ell", type=int, help="end-edge matching threshold")
    common.add_argument("--t", type=int, help="number of disjoint cliques")
    common.add_argument("--m", type=int, help="clique order")
    common.add_argument("--N", type=int, help="order of the host complete graph")
    common.add_argument("--n", type=int, help="order of G (extremal) or corpus size cap")
    common.add_argument("--epsilon", type=parse_fraction, help="positive rational p/q")
    common.add_argument("--budget-nodes", type=int, default=200_000_000)
    common.add_argument("--budget-secs", type=float, default=None)
    common.add_argument("--symmetry", choices=("none", "first_vertex", "full"), default="full")
    common.add_argument("--json", action="store_true", help="emit the full JSON document")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="ramsey-lab", description="Ramsey goodness toolkit for sparse graphs")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("trichotomy", parents=[common], help="certificate for (q, ell)")
    tree = sub.add_parser("tree", parents=[common], help="tree trichotomy certificate")
    tree.add_argument("--a", type=int)
    tree.add_argument("--b", type=int)
    tree.add_argument("--gamma", type=int)
    sub.add_parser("arrows", parents=[common], help="decide K_N -> (G, tK_m)")
    sub.add_parser("ramsey", parents=[common], help="compute r(G, tK_m)")
    sub.add_parser("extremal", parents=[common], help="Burr lower-bound coloring")
    sub.add_parser("bounds", parents=[common], help="closed-form bounds table")
    ver = sub.add_parser("verify", parents=[common], help="re-check a JSON certificate")
    ver.add_argument("file", nargs="?", help="certificate file (default: stdin)")
    corpus = sub.add_parser("corpus", parents=[common], help="run a named suite")
    corpus.add_argument("suite", choices=sorted(SUITES))
    corpus.add_argument("--csv", action="store_true", help="CSV rows instead of JSON")
    gen = sub.add_parser("gen", parents=[common], help="connected graphs on n vertices")
    gen.add_argument("--k-max", type=int, default=None)
    return parser


def _render(args, doc: dict, man: RunManifest) -> str:
    if args.command == "gen" and not args.json:
        return "\n".join(doc["graphs"]) + "\n"
    if args.command == "corpus" and getattr(args, "csv", False):
        buf = io.StringIO()
        cols = sorted({k for r in doc["rows"] for k in r})
        writer = csv.DictWriter(buf, fieldnames=cols)
        writer.writeheader()
        writer.writerows(doc["rows"])
        return buf.getvalue()
    if args.json:
        return json.dumps({**doc, "manifest": asdict(man)}, indent=2) + "\n"
    return f"{args.command}: {man.summary}\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    params = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in vars(args).items() if v is not None}
    man = RunManifest(args.command, params)
    start = time.monotonic()
    try:
        doc, code = COMMANDS[args.command](args, man)
    except (UsageError, DegenerateParameters, ValueError) as exc:
        print(f"ramsey-lab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    man.wall_time = round(time.monotonic() - start, 6)
    text = _render(args, doc, man)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
