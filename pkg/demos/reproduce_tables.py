"""
Characteristic numbers of contact curves
========================================

Every admissible set of incidence conditions for P^3 up to degree 3 and
for P^5 up to degree 2, compared with the published values.
"""
import time

from contact_curves import KNOWN_COUNTS, full_table
from contact_curves.cli import render_table

for n, d in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]:
    t0 = time.perf_counter()
    rows = [(spec.conditions, value) for spec, value in full_table(n, d)]
    print(f"P^{2 * n + 1}, degree {d}  ({time.perf_counter() - t0:.2f}s)")
    print(render_table(rows, "markdown", n, d))

    known = KNOWN_COUNTS[(n, d)]
    for cond, value in rows:
        if cond not in known:
            print(f"  {cond}: {value} (no published value)")
        elif known[cond] != value:
            print(f"  {cond}: computed {value}, published {known[cond]}")
    print()
