# # Necklaces and optimal circuit decompositions
#
# Double every edge of a k-cycle and subdivide: the circuits through exactly
# two degree-4 vertices are small, the rest are long. With all small circuits
# balanced and all long ones unbalanced, the graph is a necklace.

from signedcover import (
    build_necklace,
    detect_necklace,
    find_k_cover,
    format_edge_list,
    intersection_graph,
    optimal_decompositions,
    switch_at,
)

n = build_necklace(4, [1, 2, 1, 1, 3, 1, 1, 1], negative_index=1)
print(format_edge_list(n))

s = detect_necklace(n)
print("length:", s.length, "hubs:", s.hubs, "profile:", s.profile)
print("negative pair:", s.negative_pair)

# Detection only looks at circuit parities, so it survives switching.
# The structure reports how to switch back to a two-negative-edge form.

scrambled = switch_at(n, {0, 5, 6})
t = detect_necklace(scrambled)
print("negatives after scrambling:", sorted(scrambled.negative_edges()))
print("switch", sorted(t.switch_set), "->", sorted(switch_at(scrambled, t.switch_set).negative_edges()))

# The small circuits form a 1-cover.

cert = find_k_cover(n, 1)
print([sorted(sc.edges) for sc, _ in cert.members])

# An optimal decomposition first maximizes the unbalanced circuits and then
# the number of circuits. Here the two long circuits win over four small ones.

for d in optimal_decompositions(n):
    h = intersection_graph(n, d)
    print(d.edge_lists(), "unbalanced:", d.unbalanced, "shared:", h.shared)
