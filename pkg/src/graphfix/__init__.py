"""Fixing numbers of finite graphs and fixing sets of finite groups."""

from .autengine import (
    OrderedPartition,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_graph,
    equitable_refinement,
)
from .constructions import (
    CatalogEntry,
    ConstructionError,
    LabeledCayleyDigraph,
    a4_fix2_graph,
    abelian_achiever,
    catalog_entry,
    catalog_keys,
    cayley_digraph,
    coset_action,
    coset_action_kernel,
    frucht_family_zn,
    frucht_graph,
    orbital_graph_search,
    product_union,
)
from .fixing import (
    FixReport,
    build_fix_report,
    enumerate_graphs,
    fix_upper_bound,
    fixing_number,
    greedy_all_sizes,
    greedy_fix,
    group_fixing_numbers_observed,
    is_determining_set,
    is_fixing_set,
    verify_orbit_product,
)
from .graphs import (
    Graph,
    RootedGadget,
    attach_gadget,
    complement,
    disjoint_union,
    gadget_a,
    gadget_y,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    inflate,
    inflate_k,
    new_graph,
    relabel,
    sequence_graph,
    sequence_labels,
    standard,
    to_dot,
)
from .permgroup import (
    CapExceeded,
    GroupTable,
    PermGroup,
    all_subgroups,
    direct_product,
    elementary_divisors,
    format_cycles,
    group_from_generators,
    group_length,
    has_pk_cycle,
    identify_group,
    is_isomorphic_groups,
    named_group,
    parse_cycles,
    prime_factor_count,
    sn_fix_upper_bound,
    sn_length_formula,
    to_table,
)

__version__ = "0.1.0"
