"""
Chromatic homology
==================

States are edge subsets; each component of the partial hypergraph carries
1 or x.  Adding an edge either keeps the components or merges them, and
merging two x labels kills the state.
"""
from hyperhom import chromatic_betti_table, parse_hypergraph
from hyperhom.chains.chromatic import chain_dimensions

for text in ("ab: a b", "abc: a b c", "ab: a b\nbc: b c\nca: c a", "abc: a b c\nc: c"):
    H = parse_hypergraph(text)
    table = chromatic_betti_table(H)
    nonzero = {k: v for k, v in table.items() if v}
    print(" ".join(H.edge_labels), "->", nonzero or "all zero")

# chain dimensions give the same Euler characteristic per j
H = parse_hypergraph("abc: a b c")
print(chain_dimensions(H))
