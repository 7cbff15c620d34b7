"""Symbols of rigid partitions assembled from building blocks.

Two local moves drive everything:

* Rule A: adding 2 to one part raises the symbol slot that part owns by 1.
* Rule B: adding 1 to two equal neighbouring parts raises the slot owned by
  the second of them by 1 and leaves the first unchanged.

Iterating them gives four block shapes (a row ``1^{2m}``, a hook
``2 1^{2m}``, a ``(2m)^{2r}`` rectangle, and the first row of the diagram).
A rigid partition splits into one such family per pairwise row pattern, so
its symbol is a sum of right-aligned constant runs. ``decompose_blocks`` does
the split on the Young diagram itself; ``symbol_closed`` evaluates the same
sum from multiplicities alone.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .partition import (
    Gap,
    PaddedSequence,
    Partition,
    PartitionError,
    Theory,
    as_values,
    first_pattern_level,
    pad,
    rigidity_failure,
)
from .symbol import BOTTOM, TOP, Symbol, contribution_map, symbol_by_definition, symbol_shape, to_record


def rule_a_delta(seq: PaddedSequence | Sequence[int], k: int) -> Symbol:
    """Symbol change predicted by Rule A for ``s_k += 2`` (1-based ``k``)."""
    values = as_values(seq)
    if not 1 <= k <= len(values):
        raise PartitionError(f"position {k} out of range")
    if k > 1 and values[k - 2] < values[k - 1] + 2:
        raise PartitionError(f"adding 2 at position {k} breaks weak decrease")
    cmap = contribution_map(values)
    return _unit_delta(cmap.shape, *cmap.slot(k))


def rule_b_delta(seq: PaddedSequence | Sequence[int], i: int) -> Symbol:
    """Symbol change predicted by Rule B for ``s_i += 1, s_{i+1} += 1``.

    Requires ``s_i == s_{i+1}``; the slot owned by position ``i + 1`` goes up by one.
    """
    values = as_values(seq)
    if not 1 <= i < len(values):
        raise PartitionError(f"position pair ({i}, {i + 1}) out of range")
    if values[i - 1] != values[i]:
        raise PartitionError(f"parts at {i} and {i + 1} differ: {values[i - 1]} != {values[i]}")
    if i > 1 and values[i - 2] < values[i - 1] + 1:
        raise PartitionError(f"adding a row at ({i}, {i + 1}) breaks weak decrease")
    cmap = contribution_map(values)
    return _unit_delta(cmap.shape, *cmap.slot(i + 1))


def _unit_delta(shape: tuple[int, int], row: str, index: int) -> Symbol:
    top, bottom = [0] * shape[0], [0] * shape[1]
    (top if row == TOP else bottom)[index - 1] = 1
    return Symbol(tuple(top), tuple(bottom))


class BlockKind(enum.Enum):
    FIRST_ROW_B = "first-row-B"
    FIRST_ROW_D = "first-row-D"
    FRINGE_ROW = "fringe-row"      # 1^{2m}
    FRINGE_HOOK = "fringe-hook"    # 2 1^{2m}
    RECTANGLE = "rectangle"        # (2w)^{2r}


@dataclass(frozen=True)
class Block:
    """One building block placed in the diagram.

    ``m`` is the fringe parameter (or, for first rows, the number of ones);
    ``parity`` is that of ``l - i + lambda_i`` at the block's first column
    before the block is added. ``offset`` counts slots from the right end of
    each symbol row. ``level`` is the lower row ``j`` of the owning pattern.
    """

    kind: BlockKind
    level: int | None = None
    m: int = 0
    parity: int = 1
    height: int = 0
    width: int = 0
    offset: int = 0
    first_column: int | None = None

    def params(self) -> dict:
        if self.kind is BlockKind.RECTANGLE:
            return {"height": self.height, "width": self.width}
        if self.kind in (BlockKind.FRINGE_ROW, BlockKind.FRINGE_HOOK):
            return {"m": self.m, "parity": "odd" if self.parity else "even"}
        return {"ones": self.m}


class BlockPlacementError(ValueError):
    pass


def block_contribution(block: Block, shape: tuple[int, int]) -> Symbol:
    """Sparse symbol delta of ``block`` in a symbol with ``shape = (#top, #bottom)``."""
    top, bottom = [0] * shape[0], [0] * shape[1]

    def write(row: list[int], count: int, value: int) -> None:
        end = len(row) - block.offset
        start = end - count
        if block.offset < 0 or start < 0:
            raise BlockPlacementError(
                f"{block.kind.value} of {count} slots at offset {block.offset} does not fit a row of {len(row)}"
            )
        for s in range(start, end):
            row[s] += value

    kind = block.kind
    if kind is BlockKind.FIRST_ROW_B:
        write(bottom, block.m, 1)
    elif kind is BlockKind.FIRST_ROW_D:
        write(top, block.m, 1)
    elif kind is BlockKind.FRINGE_ROW:
        write(bottom if block.parity else top, block.m, 1)
    elif kind is BlockKind.FRINGE_HOOK:
        write(top if block.parity else bottom, block.m + 1, 1)
    elif kind is BlockKind.RECTANGLE:
        if block.height % 2 or block.width % 2:
            raise BlockPlacementError(f"rectangle {block.height}x{block.width} needs even height and width")
        write(top, block.width // 2, block.height // 2)
        write(bottom, block.width // 2, block.height // 2)
    return Symbol(tuple(top), tuple(bottom))


def _require_rigid(p: Partition, theory: Theory, gap: Gap) -> None:
    reason = rigidity_failure(p, theory, gap)
    if reason is not None:
        raise PartitionError(f"{p} is not rigid in {theory}: {reason}")


def decompose_blocks(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> list[Block]:
    """Cut the Young diagram of a rigid ``p`` into blocks.

    Order: the first row (B, D), then for each pairwise pattern from the top
    of the diagram down, its rectangle followed by its fringe. Empty
    rectangles (height 0) are omitted.
    """
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    _require_rigid(p, theory, gap)
    seq = pad(p, theory).values
    n_pad = len(seq)
    length = p.length
    heights = list(seq)
    blocks: list[Block] = []

    if theory is Theory.B:
        blocks.append(Block(BlockKind.FIRST_ROW_B, level=1, m=(length - 1) // 2, first_column=1))
    elif theory is Theory.D:
        blocks.append(Block(BlockKind.FIRST_ROW_D, level=1, m=length // 2, first_column=1))
    base = 0 if theory is Theory.C else 1
    for k in range(length):
        heights[k] -= base

    # strip the fringes; each column is left with the height of its rectangle
    fringes: dict[int, Block] = {}
    for j in range(first_pattern_level(theory), p.largest + 1, 2):
        above, here = p.suffix_count(j + 1), p.suffix_count(j)
        if above % 2:
            first = above
            heights[first - 1] -= 2
            kind = BlockKind.FRINGE_HOOK
        else:
            if here == above:
                continue
            first = above + 1
            kind = BlockKind.FRINGE_ROW
        for col in range(above + 1, here + 1):
            heights[col - 1] -= 1
        n_cols = here - first + 1
        parity = (n_pad - first + (j - 1)) % 2
        fringes[j] = Block(kind, level=j, m=n_cols // 2, parity=parity, offset=(first - 1) // 2, first_column=first)

    if any(h < 0 or h % 2 for h in heights):
        raise PartitionError(f"{p} does not split into even rectangles in {theory}: {heights}")
    rectangles: dict[int, Block] = {}
    col = 0
    while col < n_pad:
        h = heights[col]
        end = col
        while end < n_pad and heights[end] == h:
            end += 1
        if h:
            j = h + 2 - (1 - base)  # rows base+1 .. j-1
            if j in rectangles or col % 2 or (end - col) % 2:
                raise PartitionError(f"{p} has a misaligned rectangle at columns {col + 1}..{end}")
            rectangles[j] = Block(BlockKind.RECTANGLE, level=j, height=h, width=end - col,
                                  offset=col // 2, first_column=col + 1)
        col = end

    for j in sorted(set(fringes) | set(rectangles), reverse=True):
        if j in rectangles:
            blocks.append(rectangles[j])
        if j in fringes:
            blocks.append(fringes[j])
    return blocks


def fold_blocks(blocks: Sequence[Block], shape: tuple[int, int]) -> Symbol:
    total = Symbol.zeros(*shape)
    for b in blocks:
        total = total + block_contribution(b, shape)
    return total


@dataclass(frozen=True)
class PatternTerm:
    """Closed-formula quantities for the pairwise pattern on rows ``(level, level+1)``.

    ``width`` and ``fringe_width`` count symbol slots; ``spacing`` is the
    right offset ``(L(j+1) - Delta(j+1)) / 2``.
    """

    level: int
    n: int
    suffix: int
    delta: int
    delta_above: int
    width: int
    width_prose: int
    fringe_width: int
    spacing: int
    rect_value: int


@dataclass(frozen=True)
class ClosedParams:
    theory: Theory
    length: int
    padded_length: int
    first_term: tuple[str, int] | None
    terms: tuple[PatternTerm, ...] = field(default_factory=tuple)


def closed_params(p: Partition, theory: Theory | str) -> ClosedParams:
    """Per-pattern quantities ``L(j)``, ``Delta(j)``, ``W(j)``, ``Sp(j+1)`` of the closed formula."""
    theory = Theory.coerce(theory)
    n_pad = pad(p, theory).padded_length
    length = p.length

    def n(j: int) -> int:
        return n_pad - length if j == 0 else p.count(j)

    def L(j: int) -> int:
        return n_pad if j == 0 else p.suffix_count(j)

    def delta(j: int) -> int:
        return L(j) % 2

    terms = []
    for j in range(first_pattern_level(theory), p.largest + 2, 2):
        w_boxes = (n(j) + delta(j)) + (n(j - 1) - delta(j - 1))
        b = -1 if L(j - 1) % 2 else 0
        w_prose = (n(j) + delta(j)) + (n(j - 1) + b)
        height = j - 1 if theory is Theory.C else j - 2
        terms.append(PatternTerm(
            level=j,
            n=n(j),
            suffix=L(j),
            delta=delta(j),
            delta_above=delta(j + 1),
            width=w_boxes // 2,
            width_prose=w_prose // 2,
            fringe_width=n(j) // 2 + delta(j + 1),
            spacing=(L(j + 1) - delta(j + 1)) // 2,
            rect_value=height // 2,
        ))
    first = {Theory.B: (BOTTOM, (length - 1) // 2), Theory.D: (TOP, length // 2)}.get(theory)
    return ClosedParams(theory, length, n_pad, first, tuple(terms))


def symbol_closed(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> Symbol:
    """Symbol of a rigid partition from the closed formula.

    First term: ``(l-1)/2`` ones on the bottom row for B, ``l/2`` ones on the
    top row for D, nothing for C. Then for each pattern ``j``: the rectangle
    value on ``W(j)`` slots of both rows, and ``n_j/2 + Delta(j+1)`` ones on
    the top row when the pattern's rows are odd, on the bottom row when even,
    all shifted ``Sp(j+1)`` slots from the right.
    """
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    _require_rigid(p, theory, gap)
    params = closed_params(p, theory)
    n_top, n_bottom = symbol_shape(p, theory)
    top, bottom = [0] * n_top, [0] * n_bottom

    def add(row: list[int], count: int, offset: int, value: int) -> None:
        if count and value:
            end = len(row) - offset
            if end - count < 0:
                raise PartitionError(f"closed-formula term overflows the symbol of {p}")
            for s in range(end - count, end):
                row[s] += value

    if params.first_term is not None:
        row, count = params.first_term
        add(top if row == TOP else bottom, count, 0, 1)
    for term in params.terms:
        add(top, term.width, term.spacing, term.rect_value)
        add(bottom, term.width, term.spacing, term.rect_value)
        add(top if term.delta_above else bottom, term.fringe_width, term.spacing, 1)
    return Symbol(tuple(top), tuple(bottom), theory, p.length, p.parts)


def width_mismatches(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> list[tuple[int, int, int, int | None]]:
    """Patterns where the closed-formula width, the ``b``-form width and the diagram's rectangle disagree.

    Returns ``(level, width, width_prose, width_in_diagram)`` in slots;
    height-0 rectangles do not appear in the diagram and are compared only
    between the two formulas.
    """
    theory = Theory.coerce(theory)
    drawn = {b.level: b.width // 2 for b in decompose_blocks(p, theory, gap) if b.kind is BlockKind.RECTANGLE}
    out = []
    for term in closed_params(p, theory).terms:
        geo = drawn.get(term.level)
        expected_geo = geo if geo is not None else (term.width if term.rect_value == 0 else 0)
        if not (term.width == term.width_prose == expected_geo):
            out.append((term.level, term.width, term.width_prose, geo))
    return out


def explain(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> list[dict]:
    """Block list with parameters, placement and each block's delta in machine form."""
    theory = Theory.coerce(theory)
    shape = symbol_shape(p, theory)
    records = []
    for b in decompose_blocks(p, theory, gap):
        delta = block_contribution(b, shape)
        delta = Symbol(delta.top, delta.bottom, theory, p.length, p.parts)
        records.append({
            "kind": b.kind.value,
            "level": b.level,
            "params": b.params(),
            "offset": b.offset,
            "first_column": b.first_column,
            "delta": to_record(delta),
        })
    return records
