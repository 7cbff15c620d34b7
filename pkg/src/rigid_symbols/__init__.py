"""Symbols of rigid partitions in the B, C and D theories, by three independent methods."""
from .closed import (
    Block,
    BlockKind,
    BlockPlacementError,
    ClosedParams,
    block_contribution,
    closed_params,
    decompose_blocks,
    explain,
    fold_blocks,
    rule_a_delta,
    rule_b_delta,
    symbol_closed,
    width_mismatches,
)
from .legacy import legacy_rows, projection_disagreements, symbol_legacy, symbol_projection_form
from .partition import (
    Gap,
    PaddedSequence,
    Partition,
    PartitionError,
    Theory,
    Validity,
    conjugate,
    enumerate_rigid,
    enumerate_valid,
    is_rigid,
    pad,
    pairwise_patterns,
    parse_partition,
    partitions,
    render_partition,
    rigidity_failure,
    validate,
)
from .symbol import (
    BOTTOM,
    TOP,
    ContributionMap,
    Symbol,
    compute_symbol,
    contribution_map,
    dumps,
    from_record,
    loads,
    normalize,
    render,
    render_grid,
    symbol_by_definition,
    symbol_shape,
    to_record,
)
from .validators import (
    CheckRecord,
    Outcome,
    PrefixReport,
    check_monotonicity,
    check_pairwise_parity,
    check_structure_theorem,
    verify_partition,
    verify_range,
)

__all__ = [name for name, obj in list(globals().items())
           if not name.startswith("_") and not isinstance(obj, type(__import__("sys")))]
__version__ = "0.1.0"
