"""Per-row closed formula: each conjugate row adds a run of ones.

Row ``i`` of the Young diagram has ``r_i = n_i + ... + n_m`` boxes. Depending
on the parity of ``r_i`` and of ``i + t + 1`` it adds ones to a suffix of the
top or bottom symbol row:

    r_i   i+t+1   row      suffix length
    odd   even    top      (r_i + 1) / 2
    even  odd     top      r_i / 2
    even  even    bottom   r_i / 2
    odd   odd     bottom   (r_i - 1) / 2

The same rule is also published as a single sum with projection factors
``(1 +- pi_i) / 2``; ``symbol_projection_form`` evaluates that printed sum
literally so the two can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .partition import Gap, Partition, PartitionError, Theory, conjugate, rigidity_failure
from .symbol import BOTTOM, TOP, Symbol, compute_symbol, symbol_shape

_TABLE = {
    (1, 0): (TOP, +1),
    (0, 1): (TOP, 0),
    (0, 0): (BOTTOM, 0),
    (1, 1): (BOTTOM, -1),
}


@dataclass(frozen=True)
class LegacyRowContribution:
    row_index: int
    row_length: int
    parity_key: tuple[int, int]
    length: int
    target: str


def legacy_rows(p: Partition, theory: Theory | str) -> list[LegacyRowContribution]:
    theory = Theory.coerce(theory)
    rows = []
    for i, r in enumerate(conjugate(p).parts, 1):
        key = (r % 2, (i + theory.t + 1) % 2)
        target, shift = _TABLE[key]
        rows.append(LegacyRowContribution(i, r, key, (r + shift) // 2, target))
    return rows


def symbol_legacy(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> Symbol:
    theory = Theory.coerce(theory)
    reason = rigidity_failure(p, theory, gap)
    if reason is not None:
        raise PartitionError(f"{p} is not rigid in {theory}: {reason}")
    n_top, n_bottom = symbol_shape(p, theory)
    top, bottom = [0] * n_top, [0] * n_bottom
    for c in legacy_rows(p, theory):
        row = top if c.target == TOP else bottom
        if c.length > len(row):
            raise PartitionError(f"row {c.row_index} of {p} overflows the {c.target} row")
        for s in range(len(row) - c.length, len(row)):
            row[s] += 1
    return Symbol(tuple(top), tuple(bottom), theory, p.length, p.parts)


def symbol_projection_form(p: Partition, theory: Theory | str) -> Symbol:
    """Literal evaluation of the projection-operator sum.

    ``pi_i = (-1)^{r_i} (-1)^{i+1+t}``; the top row gets
    ``P^T_i Delta^T_i`` ones with ``Delta^T_i = (r_i + (1 + (-1)^{i+1})/2)/2``
    and the bottom row ``P^B_i Delta^B_i`` with
    ``Delta^B_i = (r_i + (1 + (-1)^i)/2)/2``. Raises ``ValueError`` when a
    run length is not an integer or exceeds its row.
    """
    theory = Theory.coerce(theory)
    n_top, n_bottom = symbol_shape(p, theory)
    top, bottom = [0] * n_top, [0] * n_bottom
    for i, r in enumerate(conjugate(p).parts, 1):
        pi = (-1) ** r * (-1) ** (i + 1 + theory.t)
        if pi == 1:
            twice, row, name = r + (1 + (-1) ** (i + 1)) // 2, top, TOP
        else:
            twice, row, name = r + (1 + (-1) ** i) // 2, bottom, BOTTOM
        if twice % 2:
            raise ValueError(f"row {i}: {name} run length {twice}/2 is not an integer")
        if twice // 2 > len(row):
            raise ValueError(f"row {i}: {name} run of {twice // 2} exceeds {len(row)} slots")
        for s in range(len(row) - twice // 2, len(row)):
            row[s] += 1
    return Symbol(tuple(top), tuple(bottom), theory, p.length, p.parts)


@dataclass(frozen=True)
class ProjectionDisagreement:
    partition: Partition
    expected: Symbol
    projection: Symbol | None
    error: str | None


def projection_disagreements(items: Iterable[Partition], theory: Theory | str) -> list[ProjectionDisagreement]:
    """Partitions where the literal projection sum differs from the symbol."""
    theory = Theory.coerce(theory)
    out = []
    for p in items:
        expected = compute_symbol(p, theory)
        try:
            got = symbol_projection_form(p, theory)
        except ValueError as exc:
            out.append(ProjectionDisagreement(p, expected, None, str(exc)))
            continue
        if not got.rows_equal(expected):
            out.append(ProjectionDisagreement(p, expected, got, None))
    return out
