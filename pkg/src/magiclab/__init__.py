"""Zero-sum magic labelings of regular graphs.

Constructive labelings via perfect matchings, degree-sequence machinery,
maximum matching with blossom contraction, inductive and random regular
graph builders, an exhaustive per-modulus membership search, and graph6 /
edge-list serialization.
"""

from . import errors
from .construct import (
    SurgeryPlan,
    base_k6,
    base_octahedron,
    build_regular,
    expand_two,
    find_surgery_plan,
    random_regular,
    validate_plan,
)
from .degseq import (
    DegreeSequence,
    is_graphical,
    necessary_conditions,
    one_factor_condition,
    realize,
)
from .formats import (
    LabelingRecord,
    decode_graph6,
    encode_graph6,
    make_labeling_record,
    read_edge_list,
    read_labeling_record,
    write_edge_list,
    write_labeling_record,
)
from .graph import (
    Graph,
    build_graph,
    degrees,
    is_regular,
    is_two_edge_connected,
)
from .magic import (
    DEFAULT_BUDGET,
    Labeling,
    NullSetReport,
    h2_membership,
    is_zero_sum,
    label_five_regular,
    label_odd_regular_via_factor,
    null_set_oracle,
    oracle_backend,
    vertex_sums,
)
from .matching import (
    Matching,
    MatchingReport,
    brute_force_max_matching,
    max_matching,
    perfect_matching,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "DegreeSequence",
    "Graph",
    "Labeling",
    "LabelingRecord",
    "Matching",
    "MatchingReport",
    "NullSetReport",
    "SurgeryPlan",
    "base_k6",
    "base_octahedron",
    "brute_force_max_matching",
    "build_graph",
    "build_regular",
    "decode_graph6",
    "degrees",
    "encode_graph6",
    "errors",
    "expand_two",
    "find_surgery_plan",
    "h2_membership",
    "is_graphical",
    "is_regular",
    "is_two_edge_connected",
    "is_zero_sum",
    "label_five_regular",
    "label_odd_regular_via_factor",
    "make_labeling_record",
    "max_matching",
    "necessary_conditions",
    "null_set_oracle",
    "one_factor_condition",
    "oracle_backend",
    "perfect_matching",
    "random_regular",
    "read_edge_list",
    "read_labeling_record",
    "realize",
    "validate_plan",
    "vertex_sums",
    "write_edge_list",
    "write_labeling_record",
]
