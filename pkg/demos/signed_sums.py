"""
Signed 1-factorization sums
===========================

A k-regular graph of even order whose signed sum over 1-factorizations is
nonzero can be edge-coloured from any lists of size k.
"""

from trilec import catalog_graph, signed_factorization_sum
from trilec.factor_sign import oracle_signed_sum
from trilec.graph import complete_graph

# the three 6-regular graphs, straight from their upper-adjacency lists
for name in ("G4P", "G15P", "G16P"):
    r = signed_factorization_sum(catalog_graph(name).graph)
    print(f"{name:5} value {r.value:6d} over {r.factorization_count} factorizations")

# on small graphs the recursive engine can be checked by brute force
k6 = complete_graph(6)
print("K6 engine", signed_factorization_sum(k6).value, "oracle", oracle_signed_sum(k6).value)

# relabelling may flip the sign but never the magnitude
g = catalog_graph("G4P").graph
print("G4P reversed labels:", signed_factorization_sum(g.relabel(list(range(7, -1, -1)))).value)
