"""
Magnitude homology over the intercrossing distance
==================================================

Stepping into a sub- or super-edge costs 1/2, any other overlapping step
costs 1.  Generators are edge tuples whose consecutive entries intersect.
"""
from fractions import Fraction

from hyperhom import intercrossing_distances, magnitude_betti_table, parse_hypergraph

H = parse_hypergraph("F: a b c\nD: a b\nA: a\nB: b\nC: c\n")
labels = H.edge_labels
d = intercrossing_distances(H)
print("   " + "  ".join(f"{l:>3}" for l in labels))
for l, row in zip(labels, d):
    print(f"{l:>3} " + "  ".join(f"{str(x):>3}" for x in row))

table = magnitude_betti_table(H, k_max=2, l_max=Fraction(3, 2), field="q")
for (k, l), rank in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0])):
    if rank:
        print(f"MH_{{{k},{l}}} = {rank}")

# the other convention allows a step from an edge to itself
loose = magnitude_betti_table(H, k_max=1, l_max=1, field="q", allow_repeats=True)
print("with repeats, MH_{0,0} =", loose[(0, Fraction(0))])
