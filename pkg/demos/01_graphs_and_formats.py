"""Tour of the graph core: bitset graphs, constructors, and the two
text formats (graph6 and edge lists)."""

import math

from asymindex import (Graph, cartesian_product, disjoint_union, distance,
                       from_graph6, join, to_edge_list, to_graph6)
from asymindex.families import cycle, path

# Every graph is an immutable value: edits return new graphs.
p6 = path(6)
chorded = p6.add_edge(1, 3)
print("P_6:", to_graph6(p6).decode(), "->", to_graph6(chorded).decode(),
      "after adding the chord (1,3)")

# Constructors compose. The wheel on 7 vertices is a hub joined to C_6.
w7 = join(Graph.empty(1), cycle(6))
print("W_7 degrees:", w7.degree_sequence())

# The box product of two cycles is the torus grid.
t = cartesian_product(cycle(4), cycle(5))
print(f"C_4 x C_5: {t.n} vertices, {t.edge_count} edges, 4-regular:",
      set(t.degree_sequence()) == {4})

# Distances are plain BFS; disconnected pairs come back as infinity.
two_islands = disjoint_union(Graph.empty(1), Graph.empty(1))
print("distance across components:", distance(two_islands, 0, 1),
      "(infinite:", math.isinf(distance(two_islands, 0, 1)), ")")

# graph6 is bit-exact and round-trips, including past the 62-vertex
# single-byte size boundary.
big = path(70)
assert from_graph6(to_graph6(big)) == big
print("graph6 round-trip on 70 vertices: ok")

# The edge-list format is the friendlier hand-editable option.
print("edge list of C_5:")
print(to_edge_list(cycle(5)))
