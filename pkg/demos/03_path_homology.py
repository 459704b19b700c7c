"""
Path homology at density q
==========================

A vertex sequence is allowed when every q consecutive entries fit in an
edge.  Omega keeps the chains whose boundary is still allowed.
"""
from hyperhom import allowed_paths, parse_hypergraph, path_betti
from hyperhom.chains.path import omega_complex

H = parse_hypergraph("ab: a b\nbc: b c\n")
P = allowed_paths(H, q=2, p_max=1)
print(["".join(x) for x in P.paths[1]])   # ac is not allowed

for q in (1, 2, 3):
    print("q =", q, path_betti(H, q=q, p_max=3), "regular:", path_betti(H, q=q, p_max=3, regular=True))

# Omega_2 generators can be combinations of elementary paths
C = omega_complex(H, q=2, p_max=2, field="q")
print(C.bases[2][:6])

# adding sub-edges does not change anything: only toplexes matter
H2 = parse_hypergraph("ab: a b\nbc: b c\na: a\nb: b\n")
print(path_betti(H2) == path_betti(H))
