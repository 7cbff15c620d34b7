"""Partitions of classical types B, C and D.

A partition is stored as a weakly decreasing tuple of positive parts, with
the multiplicity view ``{value: count}`` derived once at construction.
Everything here is pure and works on immutable values.
"""
from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence


class PartitionError(ValueError):
    """Raised for malformed partition text or an invalid (partition, theory) pair."""


class Theory(enum.Enum):
    B = "B"
    C = "C"
    D = "D"

    @property
    def t(self) -> int:
        """Row-length offset: the bottom symbol row has ``#top + t`` entries."""
        return {"B": -1, "C": 0, "D": 1}[self.value]

    @classmethod
    def coerce(cls, value: "Theory | str") -> "Theory":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise PartitionError(f"unknown theory {value!r}; expected B, C or D") from None

    def __str__(self) -> str:
        return self.value


class Gap(enum.Enum):
    """How the no-gap condition treats the step after the last part.

    ``STRICT`` compares the last part with an implicit trailing 0, so a rigid
    partition must end in 1. ``LOOSE`` only compares consecutive parts.
    """

    STRICT = "strict"
    LOOSE = "loose"

    @classmethod
    def coerce(cls, value: "Gap | str") -> "Gap":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise PartitionError(f"unknown gap convention {value!r}") from None


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    multiplicities: Mapping[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "multiplicities", dict(sorted(Counter(parts).items(), reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> "Partition":
        parts: list[int] = []
        for value in sorted(mult, reverse=True):
            if mult[value] < 0:
                raise PartitionError(f"negative multiplicity for {value}")
            parts.extend([value] * mult[value])
        return cls(tuple(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def count(self, value: int) -> int:
        """Multiplicity ``n_j`` of the part value ``j`` (0 when absent)."""
        return self.multiplicities.get(value, 0)

    def suffix_count(self, value: int) -> int:
        """Number of parts ``>= value``; this is the length of conjugate row ``value``."""
        return sum(n for j, n in self.multiplicities.items() if j >= value)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return render_partition(self)


def render_partition(p: Partition, form: str = "exponent") -> str:
    """Text form of ``p``: ``"3^2 2 1^3"`` (exponent) or ``"3,3,2,1,1,1"`` (list)."""
    if form == "list":
        return ",".join(str(x) for x in p.parts)
    if form != "exponent":
        raise ValueError(f"unknown form {form!r}")
    return " ".join(f"{j}^{n}" if n > 1 else str(j) for j, n in p.multiplicities.items())


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse exponent notation (``"9^4 8^2 7"``) or a comma list (``"3,3,1"``)."""
    text = text.strip()
    if not text:
        raise PartitionError("empty partition text")
    if "," in text:
        parts = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok.lstrip("-").isdigit():
                raise PartitionError(f"malformed part {tok!r}")
            parts.append(int(tok))
        return Partition(tuple(parts))

    mult: dict[int, int] = {}
    previous = None
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise PartitionError(f"malformed token {tok!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value < 1 or count < 1:
            raise PartitionError(f"token {tok!r} needs a positive value and multiplicity")
        if previous is not None and value >= previous:
            raise PartitionError(f"values must strictly decrease, got {value} after {previous}")
        mult[value] = count
        previous = value
    return Partition.from_multiplicities(mult)


@dataclass(frozen=True)
class Validity:
    valid: bool
    rank: int | None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate(p: Partition, theory: Theory | str) -> Validity:
    """Check the parity rules that make ``p`` a nilpotent orbit of the given type.

    B: total odd, even parts with even multiplicity, rank (total-1)/2.
    C: total even, odd parts with even multiplicity, rank total/2.
    D: total even, even parts with even multiplicity, rank total/2.
    """
    theory = Theory.coerce(theory)
    total = p.total
    if theory is Theory.B:
        if total % 2 == 0:
            return Validity(False, None, f"total {total} must be odd for B")
        restricted = 0
    else:
        if total % 2:
            return Validity(False, None, f"total {total} must be even for {theory}")
        restricted = 1 if theory is Theory.C else 0
    for j, n in p.multiplicities.items():
        if j % 2 == restricted and n % 2:
            kind = "odd" if restricted else "even"
            return Validity(False, None, f"{kind} part {j} has odd multiplicity {n}")
    return Validity(True, total // 2)


def _require_valid(p: Partition, theory: Theory) -> None:
    report = validate(p, theory)
    if not report:
        raise PartitionError(f"{p} is not a {theory} partition: {report.reason}")


def rigidity_failure(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> str | None:
    """Reason ``p`` is not rigid, or None. ``p`` must already be valid."""
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    _require_valid(p, theory)
    seq = list(p.parts) + ([0] if gap is Gap.STRICT else [])
    for a, b in zip(seq, seq[1:]):
        if a - b > 1:
            return f"gap between {a} and {b}"
    twice_parity = 0 if theory is Theory.C else 1
    for j, n in p.multiplicities.items():
        if n == 2 and j % 2 == twice_parity:
            return f"part {j} appears exactly twice"
    return None


def is_rigid(p: Partition, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> bool:
    return rigidity_failure(p, theory, gap) is None


def partitions(total: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in lexicographically decreasing order."""
    for parts in _partition_tuples(total, total if largest is None else largest):
        yield Partition(parts)


def _partition_tuples(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partition_tuples(total - first, first):
            yield (first,) + rest


def theory_total(rank: int, theory: Theory | str) -> int:
    return 2 * rank + 1 if Theory.coerce(theory) is Theory.B else 2 * rank


def enumerate_valid(rank: int, theory: Theory | str) -> Iterator[Partition]:
    theory = Theory.coerce(theory)
    for p in partitions(theory_total(rank, theory)):
        if validate(p, theory):
            yield p


def enumerate_rigid(rank: int, theory: Theory | str, gap: Gap | str = Gap.STRICT) -> Iterator[Partition]:
    """Valid rigid partitions of rank ``rank``, lexicographically decreasing."""
    if rank < 1:
        raise PartitionError(f"rank must be >= 1, got {rank}")
    theory, gap = Theory.coerce(theory), Gap.coerce(gap)
    for p in enumerate_valid(rank, theory):
        if rigidity_failure(p, theory, gap) is None:
            yield p


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram; row ``i`` has ``#{parts >= i}`` boxes."""
    return Partition(tuple(sum(1 for x in p.parts if x >= i) for i in range(1, p.largest + 1)))


@dataclass(frozen=True)
class PaddedSequence:
    """Parts after the theory-specific trailing zero, as fed to the symbol definition."""

    values: tuple[int, ...]
    partition: Partition | None = None
    theory: Theory | None = None

    def __post_init__(self) -> None:
        values = tuple(int(x) for x in self.values)
        if any(x < 0 for x in values):
            raise PartitionError(f"entries must be nonnegative: {values}")
        if any(a < b for a, b in zip(values, values[1:])):
            raise PartitionError(f"entries must be weakly decreasing: {values}")
        object.__setattr__(self, "values", values)

    @property
    def padded_length(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]


def pad(p: Partition, theory: Theory | str) -> PaddedSequence:
    """B: unchanged. C: one trailing 0 when the length is odd. D: always one trailing 0."""
    theory = Theory.coerce(theory)
    _require_valid(p, theory)
    if theory is Theory.D or (theory is Theory.C and p.length % 2):
        values = p.parts + (0,)
    else:
        values = p.parts
    return PaddedSequence(values, p, theory)


def as_values(seq: PaddedSequence | Sequence[int]) -> tuple[int, ...]:
    if isinstance(seq, PaddedSequence):
        return seq.values
    return PaddedSequence(tuple(seq)).values


def first_pattern_level(theory: Theory | str) -> int:
    """Lower row of the first pairwise pattern: rows (1,2) for C, rows (2,3) for B and D."""
    return 1 if Theory.coerce(theory) is Theory.C else 2


def pairwise_patterns(p: Partition, theory: Theory | str) -> list[tuple[int, int]]:
    """Row pairs ``(j, j+1)`` of the Young diagram whose lengths share parity.

    Rows are indexed by level: row ``j`` has ``#{parts >= j}`` boxes. A lone
    top row is returned paired with the empty row above it.
    """
    start = first_pattern_level(theory)
    return [(j, j + 1) for j in range(start, p.largest + 1, 2)]
