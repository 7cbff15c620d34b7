"""Executable checks of the structural facts about partitions and their symbols.

Each check returns a plain result; ``verify_partition`` bundles them (plus the
cross-method comparisons) into ``CheckRecord`` rows for batch runs.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .closed import decompose_blocks, fold_blocks, symbol_closed, width_mismatches
from .legacy import symbol_legacy
from .partition import (
    Gap,
    Partition,
    PartitionError,
    Theory,
    conjugate,
    enumerate_rigid,
    pad,
    pairwise_patterns,
    rigidity_failure,
    validate,
)
from .symbol import TOP, Symbol, compute_symbol, contribution_map, render, symbol_shape


class Outcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


def _require(p: Partition, theory: Theory, gap: Gap | None = None) -> None:
    report = validate(p, theory)
    if not report:
        raise PartitionError(f"{p} is not a {theory} partition: {report.reason}")
    if gap is not None:
        reason = rigidity_failure(p, theory, gap)
        if reason is not None:
            raise PartitionError(f"{p} is not rigid in {theory}: {reason}")


def check_pairwise_parity(p: Partition, theory: Theory | str) -> bool:
    """Row-parity pattern of the Young diagram.

    B: first row odd, then rows (2,3), (4,5), ... pairwise of equal parity.
    C: rows (1,2), (3,4), ... pairwise equal.
    D: first row even, then (2,3), (4,5), ... pairwise equal.
    A top row left without a partner must be even.
    """
    theory = Theory.coerce(theory)
    _require(p, theory)
    rows = conjugate(p).parts
    if theory is Theory.B and rows[0] % 2 != 1:
        return False
    if theory is Theory.D and rows[0] % 2 != 0:
        return False
    for lower, upper in pairwise_patterns(p, theory):
        if upper > len(rows):
            if rows[lower - 1] % 2:
                return False
        elif rows[lower - 1] % 2 != rows[upper - 1] % 2:
            return False
    return True


@dataclass(frozen=True)
class PrefixReport:
    """Slots owned by the parts ``>= threshold`` and the counts they should have."""

    threshold: int
    prefix_length: int
    slots: frozenset[tuple[str, int]]
    counts: tuple[int, int]
    expected: tuple[int, int]
    right_aligned: bool

    @property
    def passed(self) -> bool:
        return self.right_aligned and self.counts == self.expected


def check_structure_theorem(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> list[PrefixReport]:
    """Support of the first ``L(k)`` parts at the first row and every row ``k`` of a pairwise pattern.

    The support must be a right-aligned run in each symbol row. An even
    ``L(k)`` splits evenly; an odd one gives the extra slot to the top row when
    ``l - L(u) + lambda_{L(u)}`` is odd and to the bottom row otherwise, where
    ``u`` is the upper row of the pattern containing ``k``.
    """
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    _require(p, theory, gap)
    seq = pad(p, theory).values
    n_pad = len(seq)
    cmap = contribution_map(seq)
    n_top, n_bottom = cmap.shape
    reports = []
    # the first row of B and D stands alone and is its own reference
    boundaries = pairwise_patterns(p, theory)
    if theory is not Theory.C:
        boundaries = [(1, 1)] + boundaries
    for lower, upper in boundaries:
        above = p.suffix_count(upper)
        ref_odd = above > 0 and (n_pad - above + seq[above - 1]) % 2 == 1
        for k in sorted({lower, upper}):
            size = p.suffix_count(k)
            if size == 0:
                continue
            slots = frozenset(cmap.slot(pos) for pos in range(1, size + 1))
            n_t = sum(1 for row, _ in slots if row == TOP)
            n_b = size - n_t
            if size % 2 == 0:
                expected = (size // 2, size // 2)
            elif ref_odd:
                expected = ((size + 1) // 2, (size - 1) // 2)
            else:
                expected = ((size - 1) // 2, (size + 1) // 2)
            aligned = slots == (
                {(TOP, i) for i in range(n_top - n_t + 1, n_top + 1)}
                | {("bottom", i) for i in range(n_bottom - n_b + 1, n_bottom + 1)}
            )
            reports.append(PrefixReport(k, size, slots, (n_t, n_b), expected, aligned))
    return reports


def check_monotonicity(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> Outcome:
    """``alpha_i <= beta_{i+t}`` for B and all-odd C; ``alpha_i >= beta_{i+t}`` for D and all-even C."""
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    _require(p, theory, gap)
    if theory is Theory.B:
        upper = True
    elif theory is Theory.D:
        upper = False
    elif all(x % 2 for x in p.parts):
        upper = True
    elif all(x % 2 == 0 for x in p.parts):
        upper = False
    else:
        return Outcome.NOT_APPLICABLE
    s = compute_symbol(p, theory)
    for i, a in enumerate(s.top):
        j = i + theory.t
        if 0 <= j < len(s.bottom):
            b = s.bottom[j]
            if (upper and a > b) or (not upper and a < b):
                return Outcome.FAIL
    return Outcome.PASS


@dataclass(frozen=True)
class CheckRecord:
    theory: Theory
    partition: tuple[int, ...]
    check: str
    outcome: Outcome
    detail: str | None = None

    def to_record(self) -> dict:
        return {
            "theory": self.theory.value,
            "partition": list(self.partition),
            "check": self.check,
            "outcome": self.outcome.value,
            "detail": self.detail,
        }


METHODS = ("def", "closed", "legacy", "all")


def _compare(name: str, got: Symbol, want: Symbol) -> tuple[str, Outcome, str | None]:
    if got.rows_equal(want):
        return name, Outcome.PASS, None
    return name, Outcome.FAIL, f"{name} gives {render(got)}, definition gives {render(want)}"


def verify_partition(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT, method: str = "all") -> list[CheckRecord]:
    """Every check for one rigid partition, in a fixed order."""
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    ref = compute_symbol(p, theory)
    results: list[tuple[str, Outcome, str | None]] = []

    shape = symbol_shape(p, theory)
    results.append(("shape", Outcome.PASS if ref.shape == shape else Outcome.FAIL,
                    None if ref.shape == shape else f"shape {ref.shape}, expected {shape}"))
    results.append(_compare("contribution-fold", contribution_map(p, theory).fold(), ref))
    if method in ("closed", "all"):
        results.append(_compare("closed", symbol_closed(p, theory, gap), ref))
        results.append(_compare("block-fold", fold_blocks(decompose_blocks(p, theory, gap), ref.shape), ref))
        bad = width_mismatches(p, theory, gap)
        results.append(("widths", Outcome.FAIL if bad else Outcome.PASS, f"{bad}" if bad else None))
    if method in ("legacy", "all"):
        results.append(_compare("legacy", symbol_legacy(p, theory, gap), ref))

    parity = check_pairwise_parity(p, theory)
    results.append(("pairwise-parity", Outcome.PASS if parity else Outcome.FAIL, None))
    failed = [r for r in check_structure_theorem(p, theory, gap) if not r.passed]
    results.append(("structure", Outcome.FAIL if failed else Outcome.PASS,
                    None if not failed else
                    f"k={failed[0].threshold}: counts {failed[0].counts}, expected {failed[0].expected}"))
    results.append(("monotonicity", check_monotonicity(p, theory, gap), None))
    return [CheckRecord(theory, p.parts, name, outcome, detail) for name, outcome, detail in results]


def _verify_task(args) -> list[CheckRecord]:
    return verify_partition(*args)


def verify_range(max_rank: int, theory: Theory | str, gap: Gap | str = Gap.STRICT, method: str = "all",
                 workers: int = 1) -> Iterator[CheckRecord]:
    """Records for every rigid partition of rank ``1..max_rank``, in enumeration order."""
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    tasks = ((p, theory, gap, method) for rank in range(1, max_rank + 1) for p in enumerate_rigid(rank, theory, gap))
    if workers <= 1:
        for task in tasks:
            yield from _verify_task(task)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps input order, so output does not depend on the worker count
        for records in pool.map(_verify_task, tasks, chunksize=16):
            yield from records
