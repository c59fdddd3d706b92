"""Command-line surface: searches, verifications, bounds and graph export.

Numeric output that feeds any comparison is exact (integer pairs); decimal
columns are renderings controlled by --decimals.  Identical invocations write
byte-identical files once the timestamp header is suppressed with
--no-timestamp.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal
from pathlib import Path

from . import __version__
from . import bounds as B
from . import numtheory as NT
from .dynamics import BudgetExhausted, Formalism
from .census import render_census, census
from .checks import run_all
from .poset import hasse
from .precision import Undecided
from .records import (RecordKind, compute_records, ingest_reference_records,
                      theorem5_bound_chain, IngestError, _DATA_FILES)
from .runner import SearchConfig, census_text, hits_csv_text, run_search, write_text
from .search import DEFAULT_BUDGET, verify_cst

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 10


def parse_bound(s: str) -> int:
    """Integer bounds in plain, underscore, 10^k or scientific notation."""
    s = s.strip().replace("_", "")
    if "^" in s:
        base, _, exp = s.partition("^")
        return int(base) ** int(exp)
    if any(c in s for c in "eE."):
        d = Decimal(s)
        if d != d.to_integral_value():
            raise argparse.ArgumentTypeError(f"{s!r} is not an integer")
        return int(d)
    return int(s)


def parse_range(s: str) -> tuple[int, int]:
    lo, sep, hi = s.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like A..B")
    return parse_bound(lo), parse_bound(hi)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="collatz-paradox",
        description="Exact-arithmetic census and analysis of paradoxical Collatz sequences")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--paper-check", action="store_true",
                    help="run the full reproduction scoreboard (same as the "
                         "'check' subcommand) and exit")
    sub = ap.add_subparsers(dest="command")

    def add_common(p, budget=True):
        p.add_argument("--threads", type=int, default=1, metavar="N",
                       help="worker processes (results are identical for any N)")
        if budget:
            p.add_argument("--budget", type=parse_bound, default=DEFAULT_BUDGET,
                           metavar="K", help="per-trajectory step budget")

    ps = sub.add_parser("search", help="enumerate paradoxical trajectories in a range")
    ps.add_argument("--range", type=parse_range, required=True, metavar="A..B")
    ps.add_argument("--formalism", type=Formalism.parse, default=Formalism.SHORTCUT,
                    metavar="shortcut|classic")
    add_common(ps)
    ps.add_argument("--block-size", type=parse_bound, default=None, metavar="B")
    ps.add_argument("--out", metavar="PATH", help="hit CSV output path")
    ps.add_argument("--census-out", metavar="PATH", help="census table output path")
    ps.add_argument("--checkpoint", metavar="PATH")
    ps.add_argument("--max-blocks", type=int, default=None, metavar="K",
                    help="stop after K new blocks (leaves a resumable checkpoint)")
    ps.add_argument("--no-timestamp", action="store_true",
                    help="omit the timestamp header line from output files")
    ps.add_argument("--decimals", type=int, default=2)

    pc = sub.add_parser("cst", help="verify stopping time = coefficient stopping time")
    pc.add_argument("--range", type=parse_range, required=True, metavar="A..B")
    add_common(pc)

    pp = sub.add_parser("poset", help="export the Hasse diagram of one (j, q) class")
    pp.add_argument("j", type=int)
    pp.add_argument("q", type=int)
    pp.add_argument("--out", metavar="PATH", help="DOT output path (default: stdout)")
    pp.add_argument("--cap", type=int, default=16)

    pb = sub.add_parser("bounds", help="recompute the published bound values")
    pb.add_argument("subquery", choices=["chain", "heuristic", "convergents",
                                         "rhin", "mean", "extremes"])
    pb.add_argument("args", nargs="*", help="subquery arguments")
    pb.add_argument("--refs", metavar="DIR", help="reference-table directory override")

    pr = sub.add_parser("records", help="compute record tables and compare to references")
    pr.add_argument("--kind", type=RecordKind.parse, required=True,
                    metavar="delay-t|delay-col|max-excursion-t")
    pr.add_argument("--range", type=parse_range, required=True, metavar="1..N")
    pr.add_argument("--refs", metavar="DIR")
    pr.add_argument("--out", metavar="PATH")

    pk = sub.add_parser("check", help="run the full reproduction scoreboard")
    pk.add_argument("--threads", type=int, default=4)
    pk.add_argument("--refs", metavar="DIR")
    pk.add_argument("--null-hi", type=parse_bound, default=10**6, metavar="N",
                    help="upper end of the empty-window search (raise to 10^7 "
                         "for the full desk-scale run)")
    return ap


def cmd_search(args) -> int:
    lo, hi = args.range
    cfg_kwargs = {}
    if args.block_size:
        cfg_kwargs["block_size"] = args.block_size
    cfg = SearchConfig(lo, hi, args.formalism, args.budget, **cfg_kwargs)
    result = run_search(cfg, threads=args.threads, checkpoint=args.checkpoint,
                        max_blocks=args.max_blocks)
    if not result.complete:
        print(f"incomplete: {result.blocks_done}/{result.blocks_total} blocks done"
              + (f" (checkpoint: {args.checkpoint})" if args.checkpoint else ""))
        return EXIT_INCOMPLETE
    hits = result.hits()
    if args.out:
        write_text(args.out, hits_csv_text(result, timestamp=not args.no_timestamp))
    if hits:
        rows, summary = census(hits)
        table = render_census(rows, summary, args.decimals)
        if args.census_out:
            write_text(args.census_out, table)
        print(table, end="")
        print(f"{len(hits)} hits")
    else:
        if args.census_out:
            write_text(args.census_out, f"formalism: {cfg.formalism.value}\nhits: 0\n")
        print("0 hits")
    return EXIT_OK


def cmd_cst(args) -> int:
    lo, hi = args.range
    rep = verify_cst(lo, hi, args.budget)
    print(f"checked {rep.checked} starts in [{rep.lo}, {rep.hi}]")
    print(f"counterexamples: {len(rep.counterexamples)}")
    print(f"max (stopping time - coefficient stopping time): {rep.max_gap}")
    for n, tau, t in rep.counterexamples[:20]:
        print(f"  counterexample n={n}: tau={tau} t={t}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_poset(args) -> int:
    diagram = hasse(args.j, args.q, cap=args.cap)
    dot = diagram.to_dot(f"hasse_{args.j}_{args.q}")
    if args.out:
        write_text(args.out, dot)
    else:
        print(dot, end="")
    print(f"{diagram.node_count} nodes, {diagram.edge_count} edges", file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args) -> int:
    q = args.subquery
    a = args.args
    if q == "chain":
        rep = theorem5_bound_chain(args.refs)
        print("\n".join(rep.lines()))
        return EXIT_OK if rep.consistent else EXIT_FAIL
    if q == "heuristic":
        if len(a) != 2:
            print("usage: bounds heuristic ALPHA BETA", file=sys.stderr)
            return EXIT_USAGE
        cap = NT.heuristic_j_cap(a[0], a[1])
        print(f"threshold constant 3*log3/log2 = {NT.heuristic_threshold_str()}...")
        print(f"largest admissible j = {cap} (i.e. j < {cap + 1})")
        return EXIT_OK
    if q == "convergents":
        if len(a) != 1:
            print("usage: bounds convergents COUNT", file=sys.stderr)
            return EXIT_USAGE
        for c in NT.convergents(int(a[0])):
            print(f"{c.index}: {c.p}/{c.q} ({c.side})")
        return EXIT_OK
    if q == "rhin":
        if len(a) != 2:
            print("usage: bounds rhin J Q", file=sys.stderr)
            return EXIT_USAGE
        j, qq = int(a[0]), int(a[1])
        ok = NT.rhin_gap_ok(j, qq)
        print(f"|{j} log2 - {qq} log3| >= max(j,q)^-13.3: {ok}")
        return EXIT_OK if ok else EXIT_FAIL
    if q == "mean":
        if len(a) != 1:
            print("usage: bounds mean J", file=sys.stderr)
            return EXIT_USAGE
        j = int(a[0])
        m = B.mean_remainder(j)
        print(f"mean remainder over one period at length {j}: {m} "
              f"(= j/4: {m == _frac_j4(j)})")
        return EXIT_OK
    if q == "extremes":
        if len(a) != 2:
            print("usage: bounds extremes J Q", file=sys.stderr)
            return EXIT_USAGE
        rb = B.remainder_bounds(int(a[0]), int(a[1]))
        lo_n, lo_d = rb.lower.as_integer_pair()
        hi_n, hi_d = rb.upper.as_integer_pair()
        print(f"lower = {lo_n}/{lo_d} attained at n = {rb.lower_class} (mod 2^{rb.j})")
        print(f"upper = {hi_n}/{hi_d} attained at n = {rb.upper_class} (mod 2^{rb.j})")
        return EXIT_OK
    return EXIT_USAGE


def _frac_j4(j: int):
    from fractions import Fraction

    return Fraction(j, 4)


def cmd_records(args) -> int:
    lo, hi = args.range
    if lo != 1:
        print("record scans start at 1", file=sys.stderr)
        return EXIT_USAGE
    recs = compute_records(hi, args.kind)
    lines = [f"{e.n} {e.value}" for e in recs]
    if args.out:
        write_text(args.out, "\n".join(lines) + "\n")
    else:
        print("\n".join(lines))
    if args.kind in _DATA_FILES:
        try:
            ref_path = Path(args.refs) / _DATA_FILES[args.kind] if args.refs else None
            table = ingest_reference_records(args.kind, ref_path, prefix_check_to=hi)
        except IngestError as exc:
            print(f"reference cross-check FAILED: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"reference cross-check ok ({table.source})", file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_all(threads=args.threads, null_hi=args.null_hi,
                      refs_dir=args.refs, log=print)
    passed = sum(r.ok for r in results)
    print(f"\n{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.paper_check:
        ns = argparse.Namespace(threads=4, refs=None, null_hi=10**6)
        return cmd_check(ns)
    handlers = {
        "search": cmd_search,
        "cst": cmd_cst,
        "poset": cmd_poset,
        "bounds": cmd_bounds,
        "records": cmd_records,
        "check": cmd_check,
    }
    if args.command is None:
        ap.print_help()
        return EXIT_USAGE
    try:
        return handlers[args.command](args)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (Undecided, IngestError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
