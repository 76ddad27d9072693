"""
Rotation systems, flips and reductions
======================================
"""

from trilec.graph import degree_profile
from trilec.plane import (
    canonical_triangulation_code,
    collapse_degree4_vertex,
    faces,
    flip_edge,
    octahedron,
    stacked_triangulation,
)

t = octahedron()
print("octahedron faces:", faces(t))

# flipping any edge leaves two 3-, two 4- and two 5-vertices
f = flip_edge(t, t.edges()[0])
print("after a flip:", degree_profile(f.graph()))

# removing a 4-vertex and closing the hole gives the 5-vertex triangulation
r = t.rotations[0]
small = collapse_degree4_vertex(t, 0, (r[0], r[2]))
same = canonical_triangulation_code(small) == canonical_triangulation_code(stacked_triangulation(5))
print("collapse matches the unique 5-vertex triangulation:", same)
