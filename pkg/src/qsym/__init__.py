"""qsym: checkable certificates for quantum symmetries of finite graphs."""

from .automorphisms import (
    AutomorphismSet,
    Permutation,
    automorphisms,
    find_disjoint_pair,
    find_edge_free_disjoint_pair,
    is_automorphism,
    support,
)
from .graphs import (
    UNREACHABLE,
    Cherry,
    GenerationPartition,
    Graph,
    are_isomorphic,
    build,
    complement,
    complete,
    complete_bipartite,
    components,
    contains_quadrangle,
    cycle,
    distance_matrix,
    edgeless,
    find_cherries,
    generations,
    induced_subgraph,
    is_connected,
    is_forest,
    is_isomorphism,
    is_tree,
    line_graph,
    path,
    star,
    tree_center,
)
from .products import (
    cartesian,
    copies,
    corona,
    direct,
    disjoint_union,
    lexicographic,
    strong,
)
from .reduction import (
    RULE_ANTIPODE,
    RULE_DEGREE,
    RULE_DISTANCE_DEGREE,
    BlockStructure,
    ZeroPattern,
    blocks,
    degree_pattern,
    distance_degree_pattern,
    render_pattern,
    strip_high_degree,
    strip_high_degree_fixpoint,
    zero_pattern,
)
from .classify import (
    Report,
    Status,
    Verdict,
    classify,
    classify_line_graph,
    classify_with_complement,
    verify_certificate,
)
from .construct import (
    ConstructionTrace,
    build_free,
    build_tensor,
    build_wreath,
    cone,
    corona_k1,
    distinct_orders,
    join,
    make_connected_preserving,
    replay,
)
from .gallery import gallery, gallery_names

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
