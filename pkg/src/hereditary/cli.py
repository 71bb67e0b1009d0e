"""Command-line front end.

    hereditary recognize    --class SPEC --input FILE
    hereditary member       --class SPEC (--input FILE | --graph6 CODE ...)
    hereditary enumerate    --n-max N [--output-dir DIR]
    hereditary obstructions --class SPEC --n-max N [--input FILE] [--output-dir DIR]
    hereditary verify       (--duality CLASS | --bounds SPEC) --n-max N
    hereditary matroid      --class NAME --q Q --r-max R [--bounds] [--output-dir DIR]

Tables go to stdout as TSV; diagnostics go to stderr.  Output directories
default to $HEREDITARY_OUTPUT_DIR, else ./hereditary-out.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .bounds import bound_for_spec
from .gen import GEN_CAP, GENERATOR_VERSION, GenerationCapError, Graph6FileError, enumerate_graphs, read_graph6, write_graph6
from .graph import Graph6Error, graph6_decode, graph6_encode
from .matroid import (
    RANK_CAPS,
    enumerate_forbidden_flats,
    format_matroid,
    get_matroid_class,
    thm55_bound,
)
from .obstructions import duality_check, enumerate_obstructions, write_report
from .operators import iterated_member, parse_operator_spec

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _output_dir(args) -> Path:
    return Path(args.output_dir or os.environ.get("HEREDITARY_OUTPUT_DIR") or "hereditary-out")


def _spec(text: str):
    try:
        return parse_operator_spec(text)
    except ValueError as exc:
        raise CliError(f"bad class spec: {exc}") from None


def _n_max(args) -> int:
    if args.n_max is None:
        raise CliError("--n-max is required")
    if not 0 <= args.n_max <= GEN_CAP:
        raise CliError(f"--n-max must be within 0..{GEN_CAP}")
    return args.n_max


def _read_input(path: str):
    try:
        return list(read_graph6(path))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def cmd_recognize(args) -> int:
    if not args.input:
        raise CliError("--input is required")
    spec = _spec(args.class_spec)
    for i, g in enumerate(_read_input(args.input)):
        print(f"{i}\t{str(spec.member(g)).lower()}")
    return EXIT_OK


def _witness_text(w) -> str:
    if w is None:
        return "-"
    if isinstance(w, tuple) and len(w) == 3 and all(isinstance(x, tuple) for x in w):
        added, deleted, removed = w
        return f"add={list(added)};delete={list(deleted)};vertices={list(removed)}"
    return str(w).replace(" ", "")


def cmd_member(args) -> int:
    spec = _spec(args.class_spec)
    if args.input:
        graphs = _read_input(args.input)
    elif args.graph6:
        try:
            graphs = [graph6_decode(code) for code in args.graph6]
        except Graph6Error as exc:
            raise CliError(str(exc)) from None
    else:
        raise CliError("give --input or --graph6")
    for i, g in enumerate(graphs):
        verdict = iterated_member(g, spec)
        print(f"{i}\t{str(verdict.member).lower()}\t{_witness_text(verdict.witness)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n_max = _n_max(args)
    out = _output_dir(args)
    out.mkdir(parents=True, exist_ok=True)
    manifest = [("command", "enumerate"), ("n_max", n_max)]
    for n in range(1, n_max + 1):
        graphs = enumerate_graphs(n, threads=args.threads)
        write_graph6(out / f"graphs_n{n}.g6", graphs,
                     {"order": n, "count": len(graphs), "generator": GENERATOR_VERSION})
        manifest.append((f"count_n{n}", len(graphs)))
        print(f"{n}\t{len(graphs)}")
    manifest += [("generator", GENERATOR_VERSION), ("version", __version__)]
    (out / "manifest.txt").write_text("".join(f"{k} = {v}\n" for k, v in manifest))
    return EXIT_OK


def cmd_obstructions(args) -> int:
    spec = _spec(args.class_spec)
    n_max = _n_max(args)
    graphs = _read_input(args.input) if args.input else None
    report = enumerate_obstructions(spec, n_max, graphs=graphs, threads=args.threads)
    extra = {"command": "obstructions", "class_arg": args.class_spec, "n_max": n_max,
             "input": args.input or "generated", "threads": args.threads}
    out = write_report(report, _output_dir(args), extra)
    for n, c in report.counts().items():
        print(f"{n}\t{c}")
    print(f"total\t{report.total}")
    print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    n_max = _n_max(args)
    if args.duality:
        base = _spec(args.duality).base
        try:
            ok, witness = duality_check(base, n_max)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        print(f"duality\t{base.name}\t{n_max}\t{str(ok).lower()}")
        if witness is not None:
            print(f"counterexample\t{graph6_encode(witness).decode()}")
        return EXIT_OK if ok else EXIT_FAILED
    if args.bounds:
        spec = _spec(args.bounds)
        bound = bound_for_spec(spec)
        if bound is None:
            raise CliError(f"no order bound is known for {spec.text}")
        report = enumerate_obstructions(spec, n_max, threads=args.threads)
        ok = report.respects_bound()
        print(f"bounds\t{spec.text}\t{bound}\tmax_order={max(report.orders(), default=0)}\t{str(ok).lower()}")
        return EXIT_OK if ok else EXIT_FAILED
    raise CliError("give --duality CLASS or --bounds SPEC")


def cmd_matroid(args) -> int:
    if args.q not in RANK_CAPS:
        raise CliError("--q must be 2 or 3")
    if args.r_max is None or not 1 <= args.r_max <= RANK_CAPS[args.q]:
        raise CliError(f"--r-max must be within 1..{RANK_CAPS[args.q]} for q={args.q}")
    try:
        cls = get_matroid_class(args.class_spec)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    flats = enumerate_forbidden_flats(cls, args.q, args.r_max)
    lines = [format_matroid(f) for f in flats]
    for line in lines:
        print(line)
    status = EXIT_OK
    manifest = [("command", "matroid"), ("class", cls.name), ("q", args.q), ("r_max", args.r_max),
                ("count", len(flats))]
    if args.bounds:
        if not cls.name.startswith("add:"):
            raise CliError("--bounds applies to add classes (add:NAME)")
        base_flats = enumerate_forbidden_flats(get_matroid_class(cls.name[4:]), args.q, args.r_max)
        bound = thm55_bound(base_flats)
        ok = bound is None or all(f.rank <= bound for f in flats)
        print(f"bound\t{bound}\t{str(ok).lower()}", file=sys.stderr)
        manifest += [("bound", bound), ("bound_respected", str(ok).lower())]
        status = EXIT_OK if ok else EXIT_FAILED
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "forbidden_flats.txt").write_text("".join(line + "\n" for line in lines))
        (out / "manifest.txt").write_text("".join(f"{k} = {v}\n" for k, v in manifest + [("version", __version__)]))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hereditary", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, cls=True, n_max=True, inp=True):
        if cls:
            p.add_argument("--class", dest="class_spec", required=True,
                           help="e.g. split, edge-add:threshold, split+add^1-edge^1, almost:cograph")
        if n_max:
            p.add_argument("--n-max", type=int)
        if inp:
            p.add_argument("--input", help="graph6 file")
        p.add_argument("--output-dir")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("recognize", help="class membership per graph of a graph6 file")
    common(p, n_max=False)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("member", help="membership with witness edits")
    common(p, n_max=False)
    p.add_argument("--graph6", nargs="+")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("enumerate", help="all graphs up to isomorphism, one file per order")
    common(p, cls=False, inp=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("obstructions", help="minimal forbidden induced subgraphs through --n-max")
    common(p)
    p.set_defaults(func=cmd_obstructions)

    p = sub.add_parser("verify", help="duality or bound checks; exit 0 iff they hold")
    common(p, cls=False, inp=False)
    p.add_argument("--duality", metavar="CLASS")
    p.add_argument("--bounds", metavar="SPEC")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("matroid", help="forbidden flats of a GF(q)-matroid class")
    common(p, n_max=False, inp=False)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--r-max", type=int)
    p.add_argument("--bounds", action="store_true")
    p.set_defaults(func=cmd_matroid)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (CliError, GenerationCapError, Graph6FileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
