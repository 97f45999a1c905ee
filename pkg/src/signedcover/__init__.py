"""Signed circuit covers of signed multigraphs.

Graphs, switching, circuit and barbell enumeration, exact k-cover search,
optimal circuit decompositions, necklaces, and exhaustive small-graph sweeps.
"""

from .circuits import (
    Barbell,
    Circuit,
    SignedCircuit,
    coloops,
    edge_disjoint_unbalanced_circuits,
    edge_disjoint_unbalanced_pair,
    enumerate_barbells,
    enumerate_circuits,
    enumerate_signed_circuits,
    is_flow_admissible,
    recognize_signed_circuit,
    theta_balance_profile,
    unbalanced_circuits,
)
from .cover import (
    CoverCertificate,
    CoverCheck,
    combine_covers,
    find_k_cover,
    min_uniform_cover,
    min_uniform_cover_certificate,
    repeat_cover,
    verify_cover,
)
from .decomposition import (
    CircuitDecomposition,
    IntersectionGraph,
    all_decompositions,
    cover_decompose,
    greedy_decomposition,
    intersection_graph,
    is_cover_decomposable,
    iter_decompositions,
    nonseparating_disjoint_circuit,
    one_decomposition,
    optimal_decomposition,
    optimal_decompositions,
    removable_edge,
)
from .errors import EdgeListError, InvalidArgument, ResourceLimit
from .graph import (
    Components,
    SignedGraph,
    bridges,
    components,
    cut_vertices,
    degree,
    degrees,
    format_edge_list,
    is_connected,
    is_eulerian,
    is_even,
    is_two_connected,
    is_two_edge_connected,
    loops,
    max_degree,
    min_degree,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .necklace import NecklaceStructure, SmallCircuit, build_necklace, detect_necklace, is_necklace
from .signing import (
    balancing_switch_set,
    is_balanced,
    is_balanced_circuit,
    is_balanced_subgraph,
    negative_count,
    normalize_signature,
    switch_at,
)
from .survey import (
    PROPERTIES,
    Outcome,
    SweepReport,
    canonical_form,
    check_property,
    generate_instances,
    replay,
    run_sweep,
    theta_graphs,
    two_connected_atlas,
)

__version__ = "0.1.0"
