"""Split a rigid partition into blocks and add up their symbol contributions.

Run: python demos/block_decomposition.py
"""
from rigid_symbols import Symbol, compute_symbol, explain, parse_partition, render

p = parse_partition("9^4 8^2 7^3 6^4 5^4 4^2 3^4 2^2 1^4")
print(f"B partition {p}, total {p.total}, rank {(p.total - 1) // 2}")

running = None
for record in explain(p, "B"):
    delta = Symbol(tuple(record["delta"]["top"]), tuple(record["delta"]["bottom"]))
    running = delta if running is None else running + delta
    print(f"{record['kind']:<12} level {record['level']:<2} {record['params']}")
    print(f"    {render(delta)}")

print("sum of blocks:", render(running))
print("definition:   ", render(compute_symbol(p, "B")))
