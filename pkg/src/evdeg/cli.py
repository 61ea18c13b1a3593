"""Command-line entry point: ``evdeg {compute,transform,product,fsum,gen,verify}``.

Exit codes: 0 success (or every applicable identity matched), 1 verification
failure, 2 usage or I/O error. ``-`` means stdin/stdout.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .fsum import FKind, f_sum
from .generators import FAMILIES, FamilySpec, generate
from .graph import Graph, GraphError, ParseError, from_edge_list, from_graph6, to_edge_list, to_graph6
from .indices import classic_invariants, ev_indices
from .products import PRODUCTS
from .transforms import TRANSFORMS
from .verifier import SUITES, CorpusSpec, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUM_OPS = {"sum-sd": FKind.SD, "sum-esto": FKind.ESTO, "sum-vsto": FKind.VSTO, "sum-to": FKind.TO}
INDEX_KEYS = ("n", "m", "M1", "M2", "F", "HM1", "eta", "Mev", "Fev", "NKev", "mMev", "Rev")


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from None


def _load(path: str, fmt: str) -> Graph:
    text = _read(path)
    try:
        if fmt == "graph6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
            return from_graph6(lines[0])
        return from_edge_list(text)
    except (ParseError, GraphError) as exc:
        raise CliError(f"{path}: {exc}") from None


def _dump(G: Graph, fmt: str) -> str:
    return to_graph6(G) + "\n" if fmt == "graph6" else to_edge_list(G)


def compute_payload(G: Graph, keys: list[str] | None = None) -> dict:
    ci = classic_invariants(G)
    ev = ev_indices(G)
    out = {
        "n": ci.n, "m": ci.m, "M1": ci.M1, "M2": ci.M2, "F": ci.F, "HM1": ci.HM1, "eta": ci.eta,
        "Mev": ev.Mev, "Fev": ev.Fev,
        "NKev": str(ev.NKev),
        "mMev": f"{ev.mMev.numerator}/{ev.mMev.denominator}",
        "Rev": ev.Rev,
    }
    if keys:
        out = {k: out[k] for k in keys}
    return out


def cmd_compute(args: argparse.Namespace) -> int:
    keys = None
    if args.indices:
        keys = [k.strip() for k in args.indices.split(",") if k.strip()]
        bad = [k for k in keys if k not in INDEX_KEYS]
        if bad:
            raise CliError(f"unknown index {', '.join(bad)}; choose from {', '.join(INDEX_KEYS)}")
    G = _load(args.input, args.format)
    _write(args.output, json.dumps(compute_payload(G, keys), indent=2) + "\n")
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    G = _load(args.input, args.format)
    _write(args.output, _dump(TRANSFORMS[args.op](G), args.out_format))
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    G = _load(args.g, args.format)
    H = _load(args.h, args.format)
    if args.op in SUM_OPS:
        R = f_sum(G, H, SUM_OPS[args.op])
    else:
        R = PRODUCTS[args.op](G, H)
    _write(args.output, _dump(R, args.out_format))
    return EXIT_OK


def cmd_fsum(args: argparse.Namespace) -> int:
    G = _load(args.g, args.format)
    H = _load(args.h, args.format)
    _write(args.output, _dump(f_sum(G, H, SUM_OPS["sum-" + args.kind]), args.out_format))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family, tuple(args.sizes), p=args.p, seed=args.seed)
    try:
        G = generate(spec)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _write(args.output, _dump(G, args.out_format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.corpus == "random":
        spec = CorpusSpec(
            kind="random", n_max=args.n, p=args.p, samples=args.samples,
            pair_n_max=args.pair_n, pairs=args.pairs,
        )
    else:
        spec = CorpusSpec()
    try:
        report = run_suite([spec], seed=args.seed, suite=args.suite, workers=args.workers)
    except (ValueError, RuntimeError) as exc:
        raise CliError(f"invalid corpus: {exc}") from None
    text = report.to_csv() if args.format == "csv" else report.to_json()
    _write(args.report, text)
    if report.all_passed:
        return EXIT_OK
    failed = sorted({r.id for r in report.failures()}, key=list(SUITES["all"]).index)
    print(f"verification failed: {len(report.failures())} mismatches in {', '.join(failed)}",
          file=sys.stderr)
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="evdeg", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def io_flags(p: argparse.ArgumentParser, single_input: bool = True) -> None:
        if single_input:
            p.add_argument("--input", "-i", default="-", help="input graph file ('-' for stdin)")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist",
                       help="input format")
        p.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")

    p = sub.add_parser("compute", help="classic invariants and ev-degree indices as JSON")
    io_flags(p)
    p.add_argument("--indices", help=f"comma-separated subset of {','.join(INDEX_KEYS)}")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("transform", help="derived graph of one input")
    p.add_argument("--op", required=True, choices=sorted(TRANSFORMS))
    io_flags(p)
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("product", help="binary operation or F-sum of G and H (order matters)")
    p.add_argument("--op", required=True, choices=list(PRODUCTS) + list(SUM_OPS))
    p.add_argument("g", help="first operand G")
    p.add_argument("h", help="second operand H")
    io_flags(p, single_input=False)
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("fsum", help="F-sum G +_F H")
    p.add_argument("--kind", required=True, choices=("sd", "esto", "vsto", "to"))
    p.add_argument("g")
    p.add_argument("h")
    io_flags(p, single_input=False)
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(func=cmd_fsum)

    p = sub.add_parser("gen", help="generate a graph from a named family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("sizes", nargs="+", type=int)
    p.add_argument("--p", type=float, default=None, help="edge probability (random families)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--out-format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check every closed form against direct computation")
    p.add_argument("--suite", choices=list(SUITES), default="all")
    p.add_argument("--corpus", choices=("builtin", "random"), default="builtin")
    p.add_argument("--n", type=int, default=9, help="max vertices of random single graphs")
    p.add_argument("--p", type=float, default=0.4)
    p.add_argument("--samples", type=int, default=50, help="connected random single graphs")
    p.add_argument("--pair-n", type=int, default=6, help="max vertices of each pair member")
    p.add_argument("--pairs", type=int, default=None, help="random pairs (default: --samples)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default="-", help="report path ('-' for stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: EVDEG_THREADS or 1)")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"evdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
