"""Command-line interface tying the toolkit together.

Subcommands:
  count      exact subset counts and log10 fraction for one signature
  fraction   CSV table of log10 fractions over a size grid, plus optional plot
  check      closure verdict and histogram-class decomposition of a file
  closure    smallest closed superset of the functions in a file
  orbit      rearrangement class of one listed function
  nfl        equal-performance comparison of search algorithms over a file
  landscape  constraint-class analysis with a non-closure witness

Exit codes: 0 success, 1 usage or parse error, 2 capacity error.
All output is deterministic: fixed orders, fixed decimal widths, LF
line endings, and pseudo-randomness only through explicit seeds.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import combinatorics, cup, fileformat, figures, harness, landscape
from .core import (
    DEFAULT_SPACE_CAP,
    CapacityError,
    FunctionSet,
    Histogram,
    SpaceSignature,
    compose,
    histogram_of,
    orbit,
)

_ALGORITHM_CHOICES = "lexicographic, reverse, seeded-random, greedy, all"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract wants 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not 0 <= value <= harness.MASK64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="nflkit",
        description="Exact closure-under-permutation analysis of finite search spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact subset counts for one signature")
    p.add_argument("x_size", type=_positive_int, help="domain size")
    p.add_argument("y_size", type=_positive_int, help="codomain size")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fraction", help="CSV table of log10 fractions over a grid")
    p.add_argument("--x-min", type=_positive_int, default=1, help="smallest domain size")
    p.add_argument("--x-max", type=_positive_int, default=7, help="largest domain size")
    p.add_argument(
        "--y", type=_int_list, default=[2, 3, 4], help="comma-separated codomain sizes"
    )
    p.add_argument("--out", type=Path, help="CSV output path (default: stdout)")
    p.add_argument("--plot", type=Path, help="also render a PNG plot to this path")
    p.set_defaults(func=cmd_fraction)

    p = sub.add_parser("check", help="closure verdict and class decomposition")
    p.add_argument("file", type=Path, help="function-set document")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("closure", help="smallest closed superset of a file's functions")
    p.add_argument("file", type=Path, help="function-set document")
    p.add_argument("--out", type=Path, help="output path (default: stdout)")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_SPACE_CAP,
                   help="enumeration cap")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("orbit", help="rearrangement class of one listed function")
    p.add_argument("file", type=Path, help="function-set document")
    p.add_argument("index", type=_nonnegative_int,
                   help="position of the function in the file's list")
    p.add_argument("--out", type=Path, help="output path (default: stdout)")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_SPACE_CAP,
                   help="enumeration cap")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("nfl", help="equal-performance comparison of algorithms")
    p.add_argument("file", type=Path, help="function-set document")
    p.add_argument("--m", type=_positive_int, required=True, help="trace length")
    p.add_argument(
        "--algorithms",
        default="lexicographic,reverse",
        help=f"comma-separated list from: {_ALGORITHM_CHOICES}",
    )
    p.add_argument("--seed", type=_seed, default=1,
                   help="seed for the seeded-random algorithm")
    p.add_argument("--hypercube", type=_positive_int,
                   help="use a Hamming-distance-one neighborhood on this many bits")
    p.add_argument("--cap", type=_positive_int, default=harness.ALGORITHM_ENUMERATION_CAP,
                   help="cap for full algorithm enumeration")
    p.set_defaults(func=cmd_nfl)

    p = sub.add_parser("landscape", help="constraint-class analysis with witness")
    p.add_argument("file", type=Path, help="function-set document")
    p.add_argument("--kind", choices=[landscape.STEEPNESS, landscape.MINIMA],
                   required=True, help="constraint kind")
    p.add_argument("--bound", type=float, required=True,
                   help="strict upper bound on the measure")
    p.add_argument("--hypercube", type=_positive_int,
                   help="use a Hamming-distance-one neighborhood on this many bits")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_SPACE_CAP,
                   help="enumeration cap")
    p.set_defaults(func=cmd_landscape)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits on usage errors and --help; keep main returnable
        return int(e.code or 0)
    try:
        args.func(args)
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError, harness.ProtocolViolationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def cmd_count(args: argparse.Namespace) -> None:
    sig = SpaceSignature(args.x_size, args.y_size)
    fraction = combinatorics.cup_fraction(sig)
    print(f"x_size: {sig.domain_size}")
    print(f"y_size: {sig.codomain_size}")
    print(f"num_histograms: {combinatorics.count_histograms(sig)}")
    print(f"cup_subsets: {combinatorics.count_cup_subsets(sig)}")
    print(f"total_subsets: {combinatorics.count_all_subsets(sig)}")
    print(f"log10_fraction: {fraction.log10_value:.6f}")


def cmd_fraction(args: argparse.Namespace) -> None:
    if args.x_min > args.x_max:
        raise ValueError(f"--x-min {args.x_min} exceeds --x-max {args.x_max}")
    rows = combinatorics.fraction_table(
        range(args.x_min, args.x_max + 1), args.y
    )
    lines = ["x_size,y_size,num_histograms,log10_fraction"]
    for row in rows:
        lines.append(
            f"{row.x_size},{row.y_size},{row.num_histograms},"
            f"{row.fraction.log10_value:.6f}"
        )
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {len(rows)} rows to {args.out}")
    if args.plot is not None:
        figures.render_fraction_plot(rows, args.plot)
        print(f"wrote plot to {args.plot}")


def cmd_check(args: argparse.Namespace) -> None:
    doc = fileformat.load_document(args.file)
    decomposition = cup.decompose(doc.functions)
    closed = cup.is_cup(doc.functions)
    print(f"functions: {len(doc.functions)}")
    if decomposition.vacuous:
        print("c.u.p.: yes (vacuous)")
        return
    print(f"c.u.p.: {'yes' if closed else 'no'}")
    complete = sum(1 for c in decomposition.classes if c.complete)
    print(f"classes complete: {complete}/{len(decomposition.classes)}")
    for c in decomposition.classes:
        state = "complete" if c.complete else "partial"
        print(
            f"histogram {_fmt_histogram(c.histogram)}: {state} "
            f"({c.member_count}/{c.class_size})"
        )


def cmd_closure(args: argparse.Namespace) -> None:
    doc = fileformat.load_document(args.file)
    closed = cup.closure(doc.functions, cap=args.cap)
    _emit_document(closed, doc, args.out)


def cmd_orbit(args: argparse.Namespace) -> None:
    doc = fileformat.load_document(args.file)
    if args.index >= len(doc.listed):
        raise ValueError(
            f"function index {args.index} out of range for "
            f"{len(doc.listed)} listed functions"
        )
    f = doc.listed[args.index]
    size = combinatorics.multinomial(histogram_of(f))
    if size > args.cap:
        raise CapacityError(
            f"rearrangement class has {size} members, above the cap of {args.cap}"
        )
    result = orbit(f, max_domain=f.signature.domain_size)
    _emit_document(result, doc, args.out)


def cmd_nfl(args: argparse.Namespace) -> None:
    doc = fileformat.load_document(args.file)
    sig = doc.signature
    if args.m > sig.domain_size:
        raise ValueError(f"--m {args.m} exceeds domain size {sig.domain_size}")
    algorithms = _build_algorithms(args, doc)
    report = harness.verify_nfl(doc.functions, args.m, algorithms)
    closed = cup.is_cup(doc.functions)

    print(f"functions: {len(doc.functions)}")
    print(f"m: {args.m}")
    print(f"algorithms: {len(algorithms)}")
    for i, a in enumerate(algorithms):
        print(f"[{i}] {a.name}")
    for i, a in enumerate(algorithms):
        print(f"tables [{i}] {a.name}")
        for measure in harness.builtin_measures():
            table = harness.performance_table(a, doc.functions, args.m, measure)
            print(f"  {measure.name}: {_fmt_table(table)}")
    print("multiset equality")
    for i in range(len(algorithms)):
        for j in range(i + 1, len(algorithms)):
            verdict = "equal" if report.multisets[i] == report.multisets[j] else "different"
            print(f"  [{i}] vs [{j}]: {verdict}")
    cup_text = f"c.u.p.: {'yes' if closed else 'no'}"
    if report.equal_for_all_pairs:
        print(f"verdict: all pairs equal; {cup_text}")
    else:
        a, b = report.witness
        print(f"verdict: witness pair found ([{a}] vs [{b}]); {cup_text}")


def cmd_landscape(args: argparse.Namespace) -> None:
    doc = fileformat.load_document(args.file)
    sig = doc.signature
    nb = _resolve_neighborhood(args, doc)
    if nb is None:
        raise ValueError(
            "no neighborhood: provide one in the file or pass --hypercube"
        )
    metric = None
    bound: float | int = args.bound
    if args.kind == landscape.STEEPNESS:
        metric = doc.metric or landscape.ValueMetric.index_distance(sig.codomain_size)
    else:
        if bound != int(bound):
            raise ValueError(f"minima bound must be an integer, got {bound}")
        bound = int(bound)
    cc = landscape.ConstraintClass(
        signature=sig, neighborhood=nb, kind=args.kind, bound=bound, metric=metric
    )
    members = landscape.build_constraint_class(cc, cap=args.cap)
    closed = cup.is_cup(members)

    print(f"domain_size: {sig.domain_size}")
    print(f"codomain_size: {sig.codomain_size}")
    print(f"kind: {cc.kind}")
    print(f"bound: {_fmt_real(bound)}")
    print(f"class size: {len(members)}")
    if len(members) == 0:
        print("c.u.p.: yes (vacuous)")
        print("witness: none (class is empty)")
        return
    if closed:
        print("c.u.p.: yes")
        print("witness: none (bound does not bite)")
        return
    print("c.u.p.: no")
    g, p = landscape.witness_not_cup(members, cc)
    moved = cc.measure(compose(g, p))
    print(f"witness g: {_fmt_values(g.values)}")
    print(f"witness p: {_fmt_values(p.mapping)}")
    print(f"witness measure: {cc.kind}(compose(g,p)) = {_fmt_real(moved)}")


def _build_algorithms(
    args: argparse.Namespace, doc: fileformat.FunctionSetDocument
) -> list[harness.SearchAlgorithm]:
    names = [part.strip() for part in args.algorithms.split(",") if part.strip()]
    if not names:
        raise ValueError("no algorithms requested")
    if "all" in names:
        if len(names) > 1:
            raise ValueError("'all' cannot be combined with named algorithms")
        return list(
            harness.enumerate_algorithms(doc.signature, args.m, cap=args.cap)
        )
    algorithms: list[harness.SearchAlgorithm] = []
    for name in names:
        if name == "lexicographic":
            algorithms.append(harness.Lexicographic())
        elif name in ("reverse", "reverse-lexicographic"):
            algorithms.append(harness.ReverseLexicographic())
        elif name == "seeded-random":
            algorithms.append(harness.SeededRandom(args.seed))
        elif name in ("greedy", "greedy-neighbor"):
            nb = _resolve_neighborhood(args, doc)
            if nb is None:
                raise ValueError(
                    "greedy-neighbor needs a neighborhood: provide one in the "
                    "file or pass --hypercube"
                )
            algorithms.append(harness.GreedyNeighbor(nb))
        else:
            raise ValueError(
                f"unknown algorithm {name!r}; choose from: {_ALGORITHM_CHOICES}"
            )
    return algorithms


def _resolve_neighborhood(
    args: argparse.Namespace, doc: fileformat.FunctionSetDocument
) -> landscape.Neighborhood | None:
    if getattr(args, "hypercube", None) is not None:
        nb = landscape.hypercube_neighborhood(args.hypercube)
        if nb.domain_size != doc.signature.domain_size:
            raise ValueError(
                f"--hypercube {args.hypercube} gives {nb.domain_size} points, "
                f"file has domain size {doc.signature.domain_size}"
            )
        return nb
    return doc.neighborhood


def _emit_document(
    result: FunctionSet, doc: fileformat.FunctionSetDocument, out: Path | None
) -> None:
    text = fileformat.render_document(
        result, neighborhood=doc.neighborhood, metric=doc.metric
    )
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {len(result)} functions to {out}")


def _fmt_histogram(h: Histogram) -> str:
    return "[" + ",".join(str(c) for c in h.counts) + "]"


def _fmt_values(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _fmt_table(table: dict) -> str:
    if not table:
        return "(empty)"
    return " ".join(f"{k}:{table[k]}" for k in sorted(table))


def _fmt_real(value: float | int) -> str:
    if isinstance(value, int):
        return str(value)
    if value == int(value):
        return str(int(value))
    return repr(value)


if __name__ == "__main__":
    sys.exit(main())
