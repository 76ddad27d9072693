"""
List edge colouring
===================
"""

from trilec import catalog_graph, chromatic_index, find_list_edge_coloring, sample_list_assignments
from trilec.edge_color import exhaustive_choosability
from trilec.graph import cycle_graph

ico = catalog_graph("ICOSA").graph
print("chromatic index of the icosahedron:", chromatic_index(ico))

# random 6-element lists from 12 colours; the solver should never get stuck
g = catalog_graph("G4P").graph
found = sum(find_list_edge_coloring(g, lists) is not None for lists in sample_list_assignments(g, 6, 12, 200, seed=1))
print(f"G4P coloured from {found}/200 random list assignments")

# exhaustive checks only scale to a handful of edges
print("triangle 2-choosable:", exhaustive_choosability(cycle_graph(3), 2))
print("C4 2-choosable:", exhaustive_choosability(cycle_graph(4), 2))
