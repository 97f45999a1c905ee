# # Signed multigraphs, balance and switching
#
# A signed graph labels every edge +1 or -1. Loops and parallel edges are
# allowed. A circuit is balanced when it carries an even number of negative
# edges.

from signedcover import (
    SignedGraph,
    balancing_switch_set,
    degree,
    enumerate_circuits,
    format_edge_list,
    is_balanced,
    is_eulerian,
    negative_count,
    normalize_signature,
    parse_edge_list,
    switch_at,
)

# Graphs are easiest to write in the edge-list format: one `e u v sign` per line.

bowtie = parse_edge_list("""
# two triangles sharing vertex 0
e 0 1 -
e 1 2 -
e 0 2 +
e 0 3 +
e 3 4 +
e 0 4 -
""")
print(bowtie)
print("degree of the shared vertex:", degree(bowtie, 0))
print("Eulerian:", is_eulerian(bowtie))

# Each triangle is a circuit. The first has two negative edges, the second one.

for c in enumerate_circuits(bowtie):
    print(sorted(c.edges), "negatives:", negative_count(bowtie, c.edges))

# Switching at a vertex set S flips every edge with exactly one end in S.
# Circuit parities never change, so balance is a property of the switching class.

switched = switch_at(bowtie, {1})
print(format_edge_list(switched))
for c in enumerate_circuits(switched):
    print(sorted(c.edges), "negatives:", negative_count(switched, c.edges))

# The first triangle is balanced, so some switch makes it all-positive.

s = balancing_switch_set(bowtie, [0, 1, 2])
print("switch set for the first triangle:", sorted(s))
print("whole graph balanced:", is_balanced(bowtie))

# normalize_signature finds a switching with as few negative edges as possible.

print(format_edge_list(normalize_signature(bowtie)))

# Loops count twice toward degree and never change sign under switching.

fig8 = SignedGraph.from_edges([(0, 0, -1), (0, 0, -1)])
print("figure-eight degree:", degree(fig8, 0), "after switching:", switch_at(fig8, {0}) == fig8)
