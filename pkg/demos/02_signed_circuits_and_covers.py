# # Signed circuits and k-covers
#
# The signed circuits are the balanced circuits plus the barbells: two
# unbalanced circuits that touch in one vertex or are joined by a path.
# A k-cover uses signed circuits (with repetition) so that every edge is
# covered exactly k times.

from signedcover import (
    SignedGraph,
    coloops,
    enumerate_signed_circuits,
    find_k_cover,
    is_flow_admissible,
    min_uniform_cover_certificate,
    parse_edge_list,
    verify_cover,
)

# Two negative loops joined by an edge: the only signed circuit is a barbell.

dumbbell = SignedGraph.from_edges([(0, 0, -1), (0, 1, 1), (1, 1, -1)])
for sc in enumerate_signed_circuits(dumbbell):
    print(sc.kind, sorted(sc.edges), "path:", sc.shape.path)

# A lone negative loop lies in no signed circuit. Such an edge is a coloop,
# and a graph with a coloop has no cover at all.

loop = SignedGraph.from_edges([(0, 0, -1)])
print("coloops:", sorted(coloops(loop)), "flow-admissible:", is_flow_admissible(loop))
print("1-cover:", find_k_cover(loop, 1))

# The search is exact: a None answer is a proof that no k-cover exists.
# Here is a small Eulerian graph whose least cover needs k = 6.

g = parse_edge_list("""
e 0 0 -
e 0 1 +
e 0 1 +
e 1 1 +
e 1 2 -
e 1 2 +
e 2 2 -
e 2 2 +
""")
for k in range(1, 6):
    print(k, "->", find_k_cover(g, k))
cert = min_uniform_cover_certificate(g)
print("least k:", cert.k)
for record in cert.to_records():
    print(" ", record)

# Every certificate can be re-checked from scratch: members are re-recognized
# from their edge sets and the edge multiplicities are recounted.

check = verify_cover(g, cert)
print("verified:", bool(check), check.multiplicity)
