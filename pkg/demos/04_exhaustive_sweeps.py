# # Exhaustive sweeps over small graphs
#
# Every signed Eulerian multigraph up to a size bound is generated once per
# class (up to relabelling and switching), and a property is checked on each.

from collections import Counter

from signedcover import canonical_form, generate_instances, run_sweep
from signedcover.survey import PROPERTIES

for name, prop in sorted(PROPERTIES.items()):
    print(f"{name:18s} {prop.description}")

# Instance counts by number of vertices.

graphs = list(generate_instances(4, 7, "flow_admissible_eulerian"))
print(Counter(g.num_vertices() for g in graphs))
print("all classes distinct:", len({canonical_form(g) for g in graphs}) == len(graphs))

# Every flow-admissible signed Eulerian graph here has a 6-cover; the
# histogram records the least k for each instance.

report = run_sweep("thm_6cover", max_v=5, max_e=8)
print(report.to_text())

# A false statement is caught with a concrete counterexample.

bad = run_sweep("one_cover", max_v=1, max_e=2)
print("passed:", bad.passed)
print(bad.counterexamples[0]["graph"])
