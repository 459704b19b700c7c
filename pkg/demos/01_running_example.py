"""
Six simplicial views of one small hypergraph
============================================

Edges F=abc, D=ab and the three singletons.  Each theory turns the
hypergraph into a different complex and reads off Betti numbers.
"""
from hyperhom import (
    closure_betti, embedded_betti, incidence_matrix, parse_hypergraph, polar_complex,
    rbs_betti, relbs_betti, restricted_barycentric_complex, upper_closure,
)
from hyperhom.simplicial.polar import polar_betti

H = parse_hypergraph("""
F: a b c
D: a b
A: a
B: b
C: c
""")

# rows are vertices, columns edges
print(incidence_matrix(H))

# the closure is the full triangle: contractible
K = upper_closure(H)
print("closure simplices:", len(K.simplices), "betti:", closure_betti(H))

# order complex of edge containment; F sits above everything
R = restricted_barycentric_complex(H)
print("restricted facets:", sorted(R.facets()), "betti:", rbs_betti(H))

# ac and bc are missing, so collapsing them leaves one loop
print("relative betti:", relbs_betti(H))

# octahedron with three faces removed
P = polar_complex(H)
print("polar facets:", len(P.facets()), "betti:", polar_betti(H))

# only ab survives in degree 1, so a+b and c give two classes
print("embedded betti:", embedded_betti(H))

# the lower closure forgets abc since ac, bc are absent
print("lower closure betti:", closure_betti(H, which="lower"))
