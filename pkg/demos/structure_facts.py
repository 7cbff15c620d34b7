"""Check the structural facts about rigid partitions and their symbols, and show one counterexample.

Run: python demos/structure_facts.py
"""
from rigid_symbols import (
    Outcome,
    check_monotonicity,
    check_structure_theorem,
    compute_symbol,
    enumerate_rigid,
    parse_partition,
    projection_disagreements,
    render,
)

# Parts >= k own a right-aligned run of slots in each row.
p = parse_partition("3 2^2 1^4")
print(f"B {p}: symbol {render(compute_symbol(p, 'B'))}")
for r in check_structure_theorem(p, "B"):
    print(f"  parts >= {r.threshold}: {r.prefix_length} positions, top/bottom {r.counts}, expected {r.expected}")

# Monotonicity between the rows holds for B and D, and for C when all parts share a parity.
for theory in "BCD":
    tally = {o: 0 for o in Outcome}
    for n in range(1, 11):
        for q in enumerate_rigid(n, theory):
            tally[check_monotonicity(q, theory)] += 1
    print(theory, {o.value: c for o, c in tally.items()})

# The single-sum projection form, read literally, does not reproduce the symbol.
ps = [q for n in range(1, 6) for q in enumerate_rigid(n, "B")]
bad = projection_disagreements(ps, "B")
print(f"projection form disagrees on {len(bad)} of {len(ps)} small B partitions, e.g. "
      f"{bad[0].partition}: {render(bad[0].projection)} vs {render(bad[0].expected)}")
