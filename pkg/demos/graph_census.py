"""
The fixed-locus census
======================

Torus-fixed stable maps are colored trees: vertices sit at fixed points
of P^N, edges are multiple covers of coordinate lines.  This script
counts them, looks at their symmetry factors, and saves one census to disk.
"""
import collections
import tempfile
from pathlib import Path

from contact_curves import enumerate_graphs, load_census, save_census

# Class counts grow quickly with the degree.
for N in (3, 5, 7):
    print(f"N={N}:", [len(enumerate_graphs(N, d)) for d in (1, 2, 3)])

# Symmetric trees carry automorphisms: a star with three equal legs
# and repeated leaf labels is the extreme case.
census = enumerate_graphs(3, 3)
hist = collections.Counter((g.aut_order, g.a_gamma) for g in census)
for (aut, a), k in sorted(hist.items()):
    print(f"|Aut|={aut}  a_gamma={a}: {k} classes")

most = max(census, key=lambda g: g.aut_order)
print("most symmetric:", most.code, most.tree.labels, most.tree.edges)

# The on-disk format is one JSON object per line after a header.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "census.jsonl"
    save_census(path, 3, 3, census)
    print(path.read_text().splitlines()[:3])
    header, back = load_census(path)
    print(header, len(back) == len(census))
