"""The symbol of a partition, computed straight from its definition.

Given a padded sequence ``s_1 >= ... >= s_l`` form ``v_k = l - k + s_k``.
The odd values, ascending, are ``2 f_i + 1`` and give the top row
``alpha_i = f_i - i + 1``; the even values, ascending, are ``2 g_i`` and give
the bottom row ``beta_i = g_i - i + 1``.

This module is the reference every other construction is checked against.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .partition import PaddedSequence, Partition, PartitionError, Theory, as_values, pad

TOP = "top"
BOTTOM = "bottom"


@dataclass(frozen=True)
class Symbol:
    """Two integer rows; ``top`` holds the alphas, ``bottom`` the betas.

    Also used for sparse deltas (block contributions, rule increments), which
    need not be nondecreasing.
    """

    top: tuple[int, ...]
    bottom: tuple[int, ...]
    theory: Theory | None = None
    source_length: int | None = None
    partition: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(int(x) for x in self.top))
        object.__setattr__(self, "bottom", tuple(int(x) for x in self.bottom))

    @classmethod
    def zeros(cls, n_top: int, n_bottom: int, **meta) -> "Symbol":
        return cls((0,) * n_top, (0,) * n_bottom, **meta)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.top), len(self.bottom)

    def row(self, name: str) -> tuple[int, ...]:
        if name == TOP:
            return self.top
        if name == BOTTOM:
            return self.bottom
        raise ValueError(f"unknown row {name!r}")

    def rows_equal(self, other: "Symbol") -> bool:
        """Raw equality of the two rows, ignoring metadata."""
        return self.top == other.top and self.bottom == other.bottom

    def _check_shape(self, other: "Symbol") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Symbol") -> "Symbol":
        self._check_shape(other)
        return Symbol(
            tuple(a + b for a, b in zip(self.top, other.top)),
            tuple(a + b for a, b in zip(self.bottom, other.bottom)),
            self.theory, self.source_length, self.partition,
        )

    def __sub__(self, other: "Symbol") -> "Symbol":
        self._check_shape(other)
        return Symbol(
            tuple(a - b for a, b in zip(self.top, other.top)),
            tuple(a - b for a, b in zip(self.bottom, other.bottom)),
            self.theory, self.source_length, self.partition,
        )

    def support(self) -> list[tuple[str, int, int]]:
        """Nonzero entries as ``(row, 1-based index, value)``."""
        out = [(TOP, i, x) for i, x in enumerate(self.top, 1) if x]
        out += [(BOTTOM, i, x) for i, x in enumerate(self.bottom, 1) if x]
        return out

    def __str__(self) -> str:
        return render(self)


class Contribution(NamedTuple):
    row: str
    index: int
    value: int


@dataclass(frozen=True)
class ContributionMap:
    """Which symbol slot each padded position lands in (positions are 1-based)."""

    entries: tuple[Contribution, ...]
    shape: tuple[int, int]

    def __getitem__(self, position: int) -> Contribution:
        if position < 1:
            raise IndexError(position)
        return self.entries[position - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Contribution]:
        return iter(self.entries)

    def slot(self, position: int) -> tuple[str, int]:
        c = self[position]
        return c.row, c.index

    def owner(self, row: str, index: int) -> int:
        for k, c in enumerate(self.entries, 1):
            if c.row == row and c.index == index:
                return k
        raise KeyError((row, index))

    def fold(self, positions: Sequence[int] | None = None) -> Symbol:
        """Write the contributions of ``positions`` (default all) into a zero symbol."""
        top = [0] * self.shape[0]
        bottom = [0] * self.shape[1]
        chosen = range(1, len(self.entries) + 1) if positions is None else positions
        for k in chosen:
            c = self[k]
            (top if c.row == TOP else bottom)[c.index - 1] += c.value
        return Symbol(tuple(top), tuple(bottom))


def _split(values: Sequence[int]) -> tuple[list[int], list[int], list[tuple[str, int]]]:
    l = len(values)
    v = [l - k + s for k, s in enumerate(values, 1)]
    # weak decrease of s makes v strictly decreasing, so the sort has no ties
    assert all(a > b for a, b in zip(v, v[1:])), v
    odd = sorted(x for x in v if x % 2)
    even = sorted(x for x in v if x % 2 == 0)
    top = [(x - 1) // 2 - i for i, x in enumerate(odd)]
    bottom = [x // 2 - i for i, x in enumerate(even)]
    odd_rank = {x: i for i, x in enumerate(odd, 1)}
    even_rank = {x: i for i, x in enumerate(even, 1)}
    slots = [(TOP, odd_rank[x]) if x % 2 else (BOTTOM, even_rank[x]) for x in v]
    assert all(a <= b for a, b in zip(top, top[1:])) and all(a <= b for a, b in zip(bottom, bottom[1:]))
    assert min(top + bottom, default=0) >= 0
    return top, bottom, slots


def symbol_by_definition(seq: PaddedSequence | Sequence[int]) -> Symbol:
    values = as_values(seq)
    top, bottom, _ = _split(values)
    meta = {}
    if isinstance(seq, PaddedSequence) and seq.partition is not None:
        meta = dict(theory=seq.theory, source_length=seq.partition.length, partition=seq.partition.parts)
    return Symbol(tuple(top), tuple(bottom), **meta)


def symbol_shape(p: Partition, theory: Theory | str) -> tuple[int, int]:
    """Row lengths ``(p, p + t)`` with ``p = (l + (1 - (-1)^l)/2) / 2``, ``l`` unpadded."""
    theory = Theory.coerce(theory)
    n_top = (p.length + p.length % 2) // 2
    return n_top, n_top + theory.t


def compute_symbol(p: Partition, theory: Theory | str) -> Symbol:
    theory = Theory.coerce(theory)
    sym = symbol_by_definition(pad(p, theory))
    assert sym.shape == symbol_shape(p, theory), (p, theory, sym.shape)
    return sym


def contribution_map(p: Partition | PaddedSequence | Sequence[int], theory: Theory | str | None = None) -> ContributionMap:
    """Slot owned by each padded position.

    Accepts a partition plus theory, or an already padded sequence.
    """
    if isinstance(p, Partition):
        if theory is None:
            raise PartitionError("a theory is required to pad a partition")
        values = pad(p, theory).values
    else:
        values = as_values(p)
    top, bottom, slots = _split(values)
    entries = tuple(
        Contribution(row, index, (top if row == TOP else bottom)[index - 1]) for row, index in slots
    )
    return ContributionMap(entries, (len(top), len(bottom)))


def normalize(s: Symbol) -> Symbol:
    """Drop leading columns where the first top and first bottom entries are both 0."""
    top, bottom = list(s.top), list(s.bottom)
    while top and bottom and top[0] == 0 and bottom[0] == 0:
        top.pop(0)
        bottom.pop(0)
    return Symbol(tuple(top), tuple(bottom), s.theory, s.source_length, s.partition)


def render(s: Symbol) -> str:
    """One-line form, e.g. ``(0 0 / 1)``."""
    top = " ".join(str(x) for x in s.top)
    bottom = " ".join(str(x) for x in s.bottom)
    return f"({top} / {bottom})"


def render_grid(s: Symbol) -> str:
    """Two-line interleaved layout: alphas on the top line, betas set between them."""
    width = max((len(str(x)) for x in s.top + s.bottom), default=1)
    n_cells = max(2 * len(s.top) - 1, 2 * len(s.bottom), 1)
    top_cells = [" " * width] * n_cells
    bottom_cells = [" " * width] * n_cells
    for i, x in enumerate(s.top):
        top_cells[2 * i] = str(x).rjust(width)
    for i, x in enumerate(s.bottom):
        bottom_cells[2 * i + 1] = str(x).rjust(width)
    return "\n".join(" ".join(cells).rstrip() for cells in (top_cells, bottom_cells))


def to_record(s: Symbol) -> dict:
    """Machine form: ``{"theory", "partition", "top", "bottom"}``."""
    return {
        "theory": s.theory.value if s.theory is not None else None,
        "partition": list(s.partition) if s.partition is not None else None,
        "top": list(s.top),
        "bottom": list(s.bottom),
    }


def from_record(record: dict) -> Symbol:
    theory = Theory.coerce(record["theory"]) if record.get("theory") is not None else None
    parts = record.get("partition")
    return Symbol(
        tuple(record["top"]),
        tuple(record["bottom"]),
        theory=theory,
        source_length=len(parts) if parts is not None else None,
        partition=tuple(parts) if parts is not None else None,
    )


def dumps(s: Symbol) -> str:
    return json.dumps(to_record(s), separators=(",", ":"))


def loads(text: str) -> Symbol:
    return from_record(json.loads(text))
