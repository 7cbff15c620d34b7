"""Compute a symbol straight from the definition and see where each part lands.

Run: python demos/symbol_by_definition.py
"""
from rigid_symbols import compute_symbol, contribution_map, pad, parse_partition, render_grid

# A small D partition: the definition pads it with a trailing zero first.
p = parse_partition("3 2^2 1")
seq = pad(p, "D")
print(f"partition {p} in D, padded to {seq.values}")

# v_k = l - k + s_k splits by parity into the two rows.
l = seq.padded_length
v = [l - k + s for k, s in enumerate(seq.values, 1)]
print(f"shifted values v = {v}")
print("odd values feed the top row, even values the bottom row")

s = compute_symbol(p, "D")
print(render_grid(s))

# Every padded position owns exactly one slot of the symbol.
for k, c in enumerate(contribution_map(p, "D"), 1):
    print(f"  position {k} (part {seq.values[k - 1]}) -> {c.row} slot {c.index}, value {c.value}")
