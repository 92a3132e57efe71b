"""Conformal blocks of the skein TQFT over trivalent graphs.

Dimensions, Dehn-twist orders along decomposition curves and signatures of the
Hermitian form, computed exactly and checked against closed formulas.
"""

from .blocks import (
    Coloring,
    DeltaReport,
    delta,
    delta_by_enumeration,
    delta_one_handle,
    delta_one_handle_by_enumeration,
    dim_blocks,
    dim_genus1_pair,
    enumerate_colorings,
    genus0_nonzero,
    j1_bounds,
    j_bounds,
)
from .cyclo import (
    CycloField,
    CycloNum,
    RootSelector,
    admissible_ells,
    cyclo_field,
    quantum_factorial,
    quantum_integer,
    sign_under_embedding,
    unitary_root,
)
from .errors import *  # noqa: F401,F403
from .form import (
    SignaturePair,
    WeightVector,
    diagonal_weights,
    edge_weight,
    is_indefinite_some_embedding,
    signature_up_to_sign,
    vertex_weight,
)
from .graph import (
    CurveType,
    TrivalentGraph,
    builtin_graph,
    caterpillar,
    chain,
    classify_edge,
    curve_types,
    cut_edge,
    dumbbell,
    necklace,
    parse_graph,
    tetrahedron,
    theta,
)
from .level import LevelSpec, admissible_table, admissible_triple, make_level
from .twist import (
    CurveSituation,
    OrderReport,
    bracket_vector,
    check_factorization,
    curve_situation,
    effective_colors,
    order_report,
    predicted_order,
    twist_exponent,
    twist_projective_order,
)

__version__ = "0.1.0"
