"""
Weighted nerves, barcodes and reconstruction
============================================

Weighting each nerve simplex by the size of the common intersection
gives a descending filtration.  The weights also determine the hypergraph
up to relabeling the vertices.
"""
from hyperhom import dual, is_isomorphic, parse_hypergraph, reconstruct_from_weighted_nerve
from hyperhom import weighted_nerve, wnerve_barcode

H = parse_hypergraph("F: a b c\nD: a b\nA: a\nB: b\nC: c\n")
N = weighted_nerve(H)
for s in N.complex.sorted_simplices():
    print("".join(s), N.weights[s])

# one class appears at weight 3 and never dies
print(wnerve_barcode(H).to_json())

G = reconstruct_from_weighted_nerve(N)
print(G.edge_map())
print("isomorphic:", is_isomorphic(G, H, match_edge_labels=True))

# inflating C to n vertices: H keeps a single bar, its dual does not
n = 3
cs = " ".join(f"c{i}" for i in range(1, n + 1))
Hn = parse_hypergraph(f"F: a b {cs}\nD: a b\nA: a\nB: b\nC: {cs}\n")
print("PH(H)  ", wnerve_barcode(Hn).to_json())
print("PH(H*) ", wnerve_barcode(dual(Hn)).to_json())
# every c_i* is {C, F}, so they merge with each other at weight 2 first
