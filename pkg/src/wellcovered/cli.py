"""Command-line interface: analyze, certify, sweep, family."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from .checks import CHECKS, ALIASES, WitnessTally, resolve_check
from .core.enumerate import FILTERS, enumerate_labeled_graphs
from .core.families import KINDS, family
from .core.formats import FORMATS, emit_graph, guess_format, parse_graph
from .core.graph import Graph
from .errors import BadParams, GraphError, InternalInconsistency, StructureNotFound, TooLarge
from .report import CERTIFIABLE, PROPERTIES, analyze, certify, render_text

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
EXIT_COUNTEREXAMPLE = 4


def _read_graph(path: str, fmt: str | None) -> tuple[Graph, str]:
    if path == "-":
        data = sys.stdin.buffer.read()
        fmt = fmt or "edgelist"
    else:
        with open(path, "rb") as fh:
            data = fh.read()
        fmt = fmt or guess_format(path)
    if fmt == "graph6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        data = lines[0].strip() if lines else b""
    return parse_graph(data, fmt), fmt


def _fail(msg: str, code: int) -> int:
    print(f"wellcovered: {msg}", file=sys.stderr)
    return code


# -- analyze ------------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        G, fmt = _read_graph(args.input, args.input_format)
    except (OSError, GraphError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    props = [p.strip() for p in args.properties.split(",") if p.strip()] if args.properties else None
    try:
        report = analyze(G, props, witness=args.witness, fmt=fmt, cap=args.cap)
    except (InternalInconsistency, StructureNotFound) as exc:
        return _fail(f"internal inconsistency: {exc}", EXIT_INCONSISTENT)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    if args.format == "text":
        sys.stdout.write(render_text(report))
    else:
        json.dump(report, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
    return EXIT_OK


# -- certify ------------------------------------------------------------------------

def _extract_witness(doc, prop: str):
    if isinstance(doc, dict) and "properties" in doc:
        body = doc["properties"].get(prop)
        if body is None or "witness" not in body:
            raise KeyError(f"report has no witness for {prop}")
        return body["witness"]
    if isinstance(doc, dict) and set(doc) == {"property", "witness"}:
        if doc["property"] != prop:
            raise KeyError(f"witness file is for {doc['property']}, not {prop}")
        return doc["witness"]
    return doc


def cmd_certify(args: argparse.Namespace) -> int:
    try:
        G, _ = _read_graph(args.input, args.input_format)
        with open(args.witness_file, encoding="utf-8") as fh:
            doc = json.load(fh)
        witness = _extract_witness(doc, args.property)
    except (OSError, GraphError, json.JSONDecodeError, KeyError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    if args.property not in CERTIFIABLE:
        return _fail(f"no checkable witness for {args.property}", EXIT_USAGE)
    if certify(G, args.property, witness):
        print(f"ok: {args.property} witness verified")
        return EXIT_OK
    print(f"FAILED: {args.property} witness does not verify")
    return EXIT_FAILED


# -- sweep --------------------------------------------------------------------------

def _sweep_worker(task: tuple[str, int, tuple[int, ...]]):
    name, n, adj = task
    G = Graph._trusted(n, adj, tuple(range(n)))
    tally = WitnessTally()
    mismatch = CHECKS[name].run(G, tally)
    return mismatch, tally.verified, tally.failed


def _stream(args: argparse.Namespace, filt: str) -> Iterator[Graph]:
    sizes = [args.n] if args.only_n else range(1, args.n + 1)
    for k in sizes:
        if args.samples:
            yield from enumerate_labeled_graphs(k, filt, samples=args.samples, seed=args.seed)
        else:
            yield from enumerate_labeled_graphs(k, filt)


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        check = resolve_check(args.check)
    except KeyError:
        known = ", ".join(list(CHECKS) + list(ALIASES))
        return _fail(f"unknown check {args.check!r}; known: {known}", EXIT_USAGE)
    filt = args.filter or check.default_filter
    if filt not in FILTERS:
        return _fail(f"unknown filter {filt!r}; known: {', '.join(FILTERS)}", EXIT_USAGE)
    if args.n < 1:
        return _fail("--n must be positive", EXIT_USAGE)
    if not args.samples and args.n > 8:
        return _fail("exhaustive sweeps are limited to n <= 8; pass --samples for sampled mode", EXIT_USAGE)

    checked = passed = verified = failed_w = 0
    first = None
    try:
        tasks = ((check.name, G.n, G.adj) for G in _stream(args, filt))
        if args.jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(args.jobs) as pool:
                results = list(zip(_stream(args, filt), pool.imap(_sweep_worker, tasks, chunksize=64)))
        else:
            results = ((G, _sweep_worker((check.name, G.n, G.adj))) for G in _stream(args, filt))
        for G, (mismatch, v, f) in results:
            checked += 1
            verified += v
            failed_w += f
            if mismatch is None:
                passed += 1
            elif first is None:
                first = (G, mismatch)
    except TooLarge as exc:
        return _fail(str(exc), EXIT_USAGE)
    except (InternalInconsistency, StructureNotFound) as exc:
        return _fail(f"internal inconsistency: {exc}", EXIT_INCONSISTENT)

    summary = {
        "check": check.name,
        "filter": filt,
        "n": args.n,
        "mode": "sampled" if args.samples else "exhaustive",
        "checked": checked,
        "passed": passed,
        "witnesses_verified": verified,
        "witnesses_failed": failed_w,
    }
    if first is not None:
        G, mismatch = first
        dump = {
            "check": check.name,
            "graph": {"n": G.n, "edges": [list(e) for e in G.edges()]},
            "edgelist": emit_graph(G, "edgelist").decode(),
            "graph6": emit_graph(G, "graph6").decode(),
            "mismatch": mismatch,
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, indent=2)
        summary["counterexample_file"] = args.out
    print(json.dumps(summary, indent=2))
    return EXIT_COUNTEREXAMPLE if first is not None else EXIT_OK


# -- family -------------------------------------------------------------------------

def _build_family(kind: str, params: Sequence[str], of: Sequence[str] | None, a=None, b=None, k=None) -> Graph:
    try:
        nums = [int(p) for p in params]
    except ValueError:
        raise BadParams(f"parameters must be integers: {' '.join(params)}") from None
    if kind == "clique-sum" and not nums:
        if None in (a, b, k):
            raise BadParams("clique-sum needs --a, --b and --k (or three positional integers)")
        nums = [a, b, k]
    base = None
    if of:
        base = _build_family(of[0], of[1:], None)
    return family(kind, *nums, of=base)


def cmd_family(args: argparse.Namespace) -> int:
    try:
        G = _build_family(args.kind, args.params, args.of, args.a, args.b, args.k)
    except GraphError as exc:
        return _fail(str(exc), EXIT_USAGE)
    fmt = args.format or (guess_format(args.out) if args.out else "edgelist")
    data = emit_graph(G, fmt)
    if fmt == "graph6":
        data += b"\n"
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellcovered",
        description="Decide and certify well-covered, König, vertex decomposable, shellable and Cohen-Macaulay graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one graph and print a JSON report")
    p.add_argument("input", help="graph file (.g6 for graph6, otherwise edge list); '-' reads stdin")
    p.add_argument("--input-format", choices=FORMATS, help="override the format guessed from the file name")
    p.add_argument("--properties", help=f"comma-separated subset of: {', '.join(PROPERTIES)}")
    p.add_argument("--witness", action="store_true", help="include witnesses for Yes verdicts")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--cap", type=int, default=None, help="facet cap for the shellability search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="re-verify a witness; exit 0 if it checks out")
    p.add_argument("input")
    p.add_argument("--input-format", choices=FORMATS)
    p.add_argument("--property", required=True, choices=CERTIFIABLE)
    p.add_argument("--witness-file", required=True, help="JSON witness, or an analyze report made with --witness")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="run an equivalence check over a graph stream")
    p.add_argument("--n", type=int, required=True, help="largest vertex count (all sizes 1..n are swept)")
    p.add_argument("--only-n", action="store_true", help="sweep graphs on exactly n vertices")
    p.add_argument("--filter", help=f"graph filter: {', '.join(FILTERS)} (default: the check's own)")
    p.add_argument("--check", required=True, help="check name; see 'wellcovered checks'")
    p.add_argument("--samples", type=int, default=None, help="sampled mode: graphs per size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="counterexample.json", help="where to write a counterexample")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("checks", help="list the available sweep checks")
    p.set_defaults(func=cmd_list_checks)

    p = sub.add_parser("family", help="write a named family graph")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("params", nargs="*", help="integer parameters")
    p.add_argument("--of", nargs="+", metavar="KIND", help="base graph for whisker/corona, e.g. --of cycle 5")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out", help="output file (stdout if omitted)")
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_family)
    return parser


def cmd_list_checks(args: argparse.Namespace) -> int:
    for name, c in CHECKS.items():
        print(f"{name:26s} [{c.default_filter}] {c.description}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
