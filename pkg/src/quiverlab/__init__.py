"""Exact-arithmetic workbench for acyclic cluster algebras.

Quiver mutation, seed mutation with Laurent-polynomial clusters,
exchange-graph and mutation-class enumeration, finite-type
classification, positive-root comparisons, and the Caldero-Chapoton
map computed through quiver Grassmannian point counts.
"""

from .laurent import LaurentPoly, NotDivisible, ZeroDivisor
from .quiver import (
    DynkinType,
    Quiver,
    QuiverFormatError,
    arrows,
    canonical_form,
    canonical_key,
    dynkin_type,
    is_acyclic,
    is_connected,
    mutate_quiver,
    parse_quiver,
    quiver_from_data,
    quiver_to_data,
    serialize_quiver,
    to_dot,
)
from .reptheory import (
    CCObject,
    InterpolationInconsistent,
    PrimeCollision,
    Representation,
    ShiftedProjective,
    arrow_slots,
    cc_value,
    count_subreps,
    direct_sum,
    euler_form,
    ext1_cluster_dim,
    ext1_module_dim,
    grassmannian_euler_char,
    hom_basis,
    hom_dim,
    interval_module,
    is_cluster_tilting,
    is_rigid,
    path_order,
    reduce_mod,
    rep_from_data,
    rep_to_data,
    verify_cc_bijection,
    verify_gen_exchange_instance,
)
from .seed import (
    ClassificationResult,
    ClusterVariables,
    EdgeCheckReport,
    ExchangeGraph,
    MutationClass,
    RootBijectionReport,
    Seed,
    canonical_seed_key,
    classify,
    collect_cluster_variables,
    exchange_graph,
    graph_id,
    graph_to_data,
    graph_to_dot,
    initial_seed,
    mutate_seed,
    mutation_class,
    positive_roots,
    seed_from_data,
    seed_to_data,
    variables_of,
    verify_exchange_edges,
    verify_root_bijection,
)

__version__ = "0.1.0"

__all__ = [
    "CCObject",
    "ClassificationResult",
    "ClusterVariables",
    "DynkinType",
    "EdgeCheckReport",
    "ExchangeGraph",
    "InterpolationInconsistent",
    "LaurentPoly",
    "MutationClass",
    "NotDivisible",
    "PrimeCollision",
    "Quiver",
    "QuiverFormatError",
    "Representation",
    "RootBijectionReport",
    "Seed",
    "ShiftedProjective",
    "ZeroDivisor",
    "arrow_slots",
    "arrows",
    "canonical_form",
    "canonical_key",
    "canonical_seed_key",
    "cc_value",
    "classify",
    "collect_cluster_variables",
    "count_subreps",
    "direct_sum",
    "dynkin_type",
    "euler_form",
    "exchange_graph",
    "ext1_cluster_dim",
    "ext1_module_dim",
    "graph_id",
    "graph_to_data",
    "graph_to_dot",
    "grassmannian_euler_char",
    "hom_basis",
    "hom_dim",
    "initial_seed",
    "interval_module",
    "is_acyclic",
    "is_cluster_tilting",
    "is_connected",
    "is_rigid",
    "mutate_quiver",
    "mutate_seed",
    "mutation_class",
    "parse_quiver",
    "path_order",
    "positive_roots",
    "quiver_from_data",
    "reduce_mod",
    "quiver_to_data",
    "rep_from_data",
    "rep_to_data",
    "seed_from_data",
    "seed_to_data",
    "serialize_quiver",
    "to_dot",
    "variables_of",
    "verify_cc_bijection",
    "verify_exchange_edges",
    "verify_gen_exchange_instance",
    "verify_root_bijection",
]
