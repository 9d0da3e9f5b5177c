"""Minimum vertex cut structure and (kappa+1)-connectivity queries."""

from .errors import (
    GraphFormatError,
    IndexFormatError,
    NoVertexCutError,
    NotMinimumConfigError,
    OracleSizeError,
    UnclassifiedRegimeError,
    VertexCutError,
)
from .graph import (
    Graph,
    IN_CUT,
    SidePartition,
    components_after_removal,
    is_cut,
    load_edge_list,
    neighborhood_in,
    parse_edge_list,
    region_of,
    side_of,
)
from .flow import (
    PQDag,
    SplitNetwork,
    bulk_small_cuts,
    min_vertex_cut,
    minimal_cut_toward,
    mixed_connectivity,
    pq_dag,
    vertex_connectivity,
)
from .sparsify import nagamochi_ibaraki
from .local_cut import (
    build_overlay,
    expand,
    find_small,
    find_small_reference,
    small_side_threshold,
)
from .structure import (
    CrossingMatchingRelation,
    CutRelation,
    LaminarRelation,
    SmallRelation,
    Wheel,
    WheelRelation,
    classify_pair,
    matching_cut,
    min_crossing_matching,
    reduce_crossing_matching,
    theta_star,
    verify_wheel,
    wheel_cut,
)
from .index import (
    AtLeastKappaPlus1,
    MixedSeparated,
    Separated,
    SmallCutIndex,
    SmallRecord,
    build,
    compute_small_reference,
    deserialize,
    query,
    serialize,
)

__version__ = "0.1.0"
