"""Command-line front end.

    rigid-symbols classify  --theory C "2^2"
    rigid-symbols symbol    --theory B "9^4 8^2 7^3 6^4 5^4 4^2 3^4 2^2 1^4" --method all
    rigid-symbols enumerate --theory D --rank 4
    rigid-symbols verify    --theory B --max-rank 7
    rigid-symbols explain   --theory B "1^3"

Exit status: 0 on success, 1 when a verification or cross-method check
fails, 2 on bad input. ``--format machine`` prints one JSON object per line.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Iterable, TextIO

from .closed import explain, symbol_closed
from .legacy import symbol_legacy
from .partition import (
    Gap,
    Partition,
    PartitionError,
    Theory,
    enumerate_rigid,
    parse_partition,
    render_partition,
    rigidity_failure,
    validate,
)
from .symbol import Symbol, compute_symbol, contribution_map, render, render_grid, to_record
from .validators import METHODS, Outcome, verify_range

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(out: TextIO, record: dict) -> None:
    out.write(json.dumps(record, separators=(",", ":")) + "\n")


def _argument(convert):
    """Wrap a parser so argparse reports its own message on bad input."""
    def wrapped(text: str):
        try:
            return convert(text)
        except PartitionError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    wrapped.__name__ = convert.__name__
    return wrapped


_partition_arg = _argument(parse_partition)
_theory_arg = _argument(Theory.coerce)
_gap_arg = _argument(Gap.coerce)


def _require_valid(p: Partition, theory: Theory) -> int:
    report = validate(p, theory)
    if not report:
        raise PartitionError(f"{render_partition(p)} is not a {theory} partition: {report.reason}")
    return report.rank


def cmd_classify(args, out: TextIO) -> int:
    p, theory, gap = args.partition, args.theory, args.gap_convention
    report = validate(p, theory)
    reason = rigidity_failure(p, theory, gap) if report else None
    rigid = bool(report) and reason is None
    if args.format == "machine":
        _emit(out, {
            "theory": theory.value, "partition": list(p.parts), "valid": report.valid,
            "rank": report.rank, "rigid": rigid,
            "reason": report.reason if not report else reason,
        })
        return EXIT_OK
    out.write(f"partition: {render_partition(p)}\ntheory: {theory}\n")
    if not report:
        out.write(f"valid: no ({report.reason})\n")
        return EXIT_OK
    out.write(f"valid: yes, rank {report.rank}\n")
    out.write("rigid: yes\n" if rigid else f"rigid: no ({reason})\n")
    return EXIT_OK


_COMPUTE = {
    "def": lambda p, th, gap: compute_symbol(p, th),
    "closed": symbol_closed,
    "legacy": symbol_legacy,
}


def cmd_symbol(args, out: TextIO) -> int:
    p, theory, gap = args.partition, args.theory, args.gap_convention
    _require_valid(p, theory)
    methods = ["def", "closed", "legacy"] if args.method == "all" else [args.method]
    if methods != ["def"]:
        reason = rigidity_failure(p, theory, gap)
        if reason is not None:
            raise PartitionError(f"{render_partition(p)} is not rigid in {theory} ({reason}); "
                                 "only --method def accepts non-rigid partitions")
    results: dict[str, Symbol] = {}
    for name in methods:
        s = _COMPUTE[name](p, theory, gap)
        results[name] = Symbol(s.top, s.bottom, theory, p.length, p.parts)
    reference = results[methods[0]]
    agree = all(s.rows_equal(reference) for s in results.values())

    if args.format == "machine":
        for name, s in results.items():
            _emit(out, {**to_record(s), "method": name})
        if not agree:
            _emit(out, {"theory": theory.value, "partition": list(p.parts), "check": "methods-agree",
                        "outcome": Outcome.FAIL.value, "contribution_map": _cmap_records(p, theory)})
        return EXIT_OK if agree else EXIT_FAIL

    if agree:
        out.write(f"{render(reference)}\n{render_grid(reference)}\n")
        if len(methods) > 1:
            out.write(f"methods agree: {', '.join(methods)}\n")
        return EXIT_OK
    out.write("methods disagree\n")
    for name, s in results.items():
        out.write(f"{name:>7}: {render(s)}\n")
    out.write("contribution map of the definition:\n")
    for k, c in enumerate(contribution_map(p, theory), 1):
        out.write(f"  position {k}: {c.row} {c.index} = {c.value}\n")
    return EXIT_FAIL


def _cmap_records(p: Partition, theory: Theory) -> list[dict]:
    return [{"position": k, "row": c.row, "index": c.index, "value": c.value}
            for k, c in enumerate(contribution_map(p, theory), 1)]


def cmd_enumerate(args, out: TextIO) -> int:
    theory, gap = args.theory, args.gap_convention
    if args.rank is not None:
        ranks: Iterable[int] = [args.rank]
    elif args.max_rank is not None:
        ranks = range(1, args.max_rank + 1)
    else:
        raise PartitionError("enumerate needs --rank or --max-rank")
    count = 0
    for rank in ranks:
        for p in enumerate_rigid(rank, theory, gap):
            count += 1
            if args.format == "machine":
                _emit(out, {"theory": theory.value, "rank": rank, "partition": list(p.parts)})
            else:
                out.write(f"{rank}\t{render_partition(p)}\n")
    if args.format == "machine":
        _emit(out, {"theory": theory.value, "count": count})
    else:
        out.write(f"# {count} rigid {theory} partitions\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    theory, gap = args.theory, args.gap_convention
    if args.max_rank < 1:
        raise PartitionError(f"--max-rank must be >= 1, got {args.max_rank}")
    seen: set[tuple[int, ...]] = set()
    n_checks = n_failed = 0
    first_failure = None
    for record in verify_range(args.max_rank, theory, gap, args.method, workers=args.workers):
        seen.add(record.partition)
        n_checks += 1
        if record.outcome is Outcome.FAIL:
            n_failed += 1
            first_failure = first_failure or record
        if args.format == "machine":
            _emit(out, record.to_record())
    status = EXIT_FAIL if n_failed else EXIT_OK
    if args.format == "machine":
        _emit(out, {"theory": theory.value, "partitions": len(seen), "checks": n_checks, "failures": n_failed})
        return status
    out.write(f"{theory}: {len(seen)} rigid partitions, ranks 1..{args.max_rank}, {n_checks} checks, "
              f"{n_failed} failures\n")
    if first_failure is not None:
        p = Partition(first_failure.partition)
        out.write(f"first counterexample: {render_partition(p)} [{first_failure.check}] {first_failure.detail or ''}\n")
    else:
        out.write("all checks pass\n")
    return status


def cmd_explain(args, out: TextIO) -> int:
    p, theory, gap = args.partition, args.theory, args.gap_convention
    _require_valid(p, theory)
    records = explain(p, theory, gap)
    if args.format == "machine":
        for r in records:
            _emit(out, r)
        return EXIT_OK
    total = compute_symbol(p, theory)
    out.write(f"{theory} {render_partition(p)}: {len(records)} block{'' if len(records) == 1 else 's'}\n")
    for r in records:
        params = ", ".join(f"{k}={v}" for k, v in r["params"].items())
        delta = Symbol(tuple(r["delta"]["top"]), tuple(r["delta"]["bottom"]))
        out.write(f"{r['kind']} (level {r['level']}; {params}; offset {r['offset']})\n  {render(delta)}\n")
    out.write(f"sum: {render(total)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigid-symbols", description="Symbols of rigid B/C/D partitions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", required=True, type=_theory_arg, help="B, C or D")
    common.add_argument("--gap-convention", default=Gap.STRICT, type=_gap_arg,
                        help="strict (default): the last part must be 1; loose: only inner gaps count")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--output", help="write to this file instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common], help="validity, rank and rigidity")
    p.add_argument("partition", type=_partition_arg)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("symbol", parents=[common], help="symbol by one or all methods")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("--method", choices=METHODS, default="def")
    p.set_defaults(run=cmd_symbol)

    p = sub.add_parser("enumerate", parents=[common], help="list rigid partitions")
    p.add_argument("--rank", type=int)
    p.add_argument("--max-rank", type=int)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="cross-check methods and structure facts")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="all")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("explain", parents=[common], help="block decomposition with per-block deltas")
    p.add_argument("partition", type=_partition_arg)
    p.set_defaults(run=cmd_explain)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        with contextlib.ExitStack() as stack:
            out = stack.enter_context(open(args.output, "w")) if args.output else sys.stdout
            return args.run(args, out)
    except (PartitionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
