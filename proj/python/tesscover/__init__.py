"""Tessellation covers of graphs."""

from ._tesscover import (
    Graph,
    c1_add_star,
    c2_add_pendants,
    c4_fixed_t,
    c5_chordal21,
    c6_12graph,
    c7_nae_to_kg,
    c8_kg_to_graph,
    clique_graph,
    exact_chromatic_index,
    exact_chromatic_number,
    greedy_cover,
    is_t_tessellable,
    is_two_tessellable,
    line_graph,
    lower_bound,
    min_cover_exact,
    nae_brute_force,
    parse_graph,
    two_tess_reference,
    upper_bounds,
    validate_cover,
)

__all__ = [
    "Graph",
    "c1_add_star",
    "c2_add_pendants",
    "c4_fixed_t",
    "c5_chordal21",
    "c6_12graph",
    "c7_nae_to_kg",
    "c8_kg_to_graph",
    "clique_graph",
    "exact_chromatic_index",
    "exact_chromatic_number",
    "greedy_cover",
    "is_t_tessellable",
    "is_two_tessellable",
    "line_graph",
    "lower_bound",
    "min_cover_exact",
    "nae_brute_force",
    "parse_graph",
    "two_tess_reference",
    "upper_bounds",
    "validate_cover",
]
