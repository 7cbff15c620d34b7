"""Compare the definition, the block formula and the per-row formula on every small rigid partition.

Run: python demos/three_way_check.py [max_rank]
"""
import sys
import time

from rigid_symbols import compute_symbol, enumerate_rigid, symbol_closed, symbol_legacy

max_rank = int(sys.argv[1]) if len(sys.argv) > 1 else 10
for theory in "BCD":
    start = time.perf_counter()
    count = disagreements = 0
    for n in range(1, max_rank + 1):
        for p in enumerate_rigid(n, theory):
            ref = compute_symbol(p, theory)
            count += 1
            if not (symbol_closed(p, theory).rows_equal(ref) and symbol_legacy(p, theory).rows_equal(ref)):
                disagreements += 1
                print(f"  {theory} {p}: methods disagree")
    print(f"{theory}: {count} rigid partitions up to rank {max_rank}, "
          f"{disagreements} disagreements, {time.perf_counter() - start:.2f}s")
