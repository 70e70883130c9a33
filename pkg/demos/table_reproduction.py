"""Regenerating the published regularity grid and diffing it.

Run:  python demos/table_reproduction.py
"""

import time

from solvdeg.bounds import regularity_from_series, regularity_table, render_table_tsv
from solvdeg.tabledata import covered_n_values, reference_entries

print("A corner of the grid (k down, n across):")
ks = list(range(2, 8))
ns = list(range(2, 12))
print(render_table_tsv(ks, ns, regularity_table(ks, ns)))

print("Regenerating every published entry and comparing...")
t0 = time.time()
ref = reference_entries()
bad = 0
for (k, n), v in ref.items():
    if regularity_from_series(n, [2] * (n + k)) != v:
        bad += 1
print(f"  {len(ref)} entries over n in {covered_n_values()[0]}..",
      f"{covered_n_values()[-1]} (three published ranges), "
      f"{time.time() - t0:.1f}s, mismatches: {bad}")
print()
print("The published block for 27 <= n <= 51 duplicates the 52..76 block,")
print("so that range has no independent printed data; the closed forms")
print("cover it instead:")
from solvdeg.bounds import quadratic_regularity

t0 = time.time()
bad = sum(
    1
    for k in (2, 3, 4, 5)
    for n in range(27, 52)
    if regularity_from_series(n, [2] * (n + k)) != quadratic_regularity(n + k, n)
)
print(f"  series vs closed form agree on all of k=2..5, n=27..51 "
      f"({time.time() - t0:.2f}s, mismatches: {bad})")
