"""
Named graphs and how they sit inside each other
===============================================
"""

from trilec.catalog import CONTAINMENTS, NAMES, catalog_graph, regularize
from trilec.graph import degree_profile, is_isomorphic, subgraph_embedding

entries = {name: catalog_graph(name) for name in NAMES}
for name, e in entries.items():
    print(f"{name:5} {e.graph.order:2d} vertices  {degree_profile(e.graph)}  {e.provenance}")

for h, g in CONTAINMENTS:
    m = subgraph_embedding(entries[h].graph, entries[g].graph)
    print(f"{h} inside {g}: {m}")

# padding G4 to a 6-regular graph lands on G4P again
r = regularize(entries["G4"].graph, 6)
print("regularised G4 is G4P:", is_isomorphic(r, entries["G4P"].graph) is not None)
