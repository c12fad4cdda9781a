"""Queen placements minimizing attacked squares.

Thin re-export of the compiled core: constructions, exact bound tables,
lower-bound certificates, and exact search.
"""

from ._core import (
    BudgetError,
    DomainError,
    F_closed,
    F_of,
    F_split,
    Placement,
    analyze_report,
    attacked_count,
    bound_table_csv,
    canonical_form,
    construct_best,
    corner_bound,
    corner_hexagon,
    covered_count,
    covered_squares,
    delta,
    diag_length_histogram,
    exact_min_covered,
    f_bound,
    four_corner,
    g_of,
    hexagon_block_count,
    line_budget,
    lines_of,
    lower_bound_certificate,
    m_star,
    m_star_table_csv,
    max_nonsharing_queens,
    max_triple_points,
    min_diag_cover,
    nine_queens,
    placement_from_json,
    regular_hexagon_count,
    render_ascii,
    render_svg,
    run_suites,
    square_block,
    suite_names,
    uneven_hexagon,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "F_closed",
    "F_of",
    "F_split",
    "Placement",
    "analyze_report",
    "attacked_count",
    "bound_table_csv",
    "canonical_form",
    "construct_best",
    "corner_bound",
    "corner_hexagon",
    "covered_count",
    "covered_squares",
    "delta",
    "diag_length_histogram",
    "exact_min_covered",
    "f_bound",
    "four_corner",
    "g_of",
    "hexagon_block_count",
    "line_budget",
    "lines_of",
    "lower_bound_certificate",
    "m_star",
    "m_star_table_csv",
    "max_nonsharing_queens",
    "max_triple_points",
    "min_diag_cover",
    "nine_queens",
    "placement_from_json",
    "regular_hexagon_count",
    "render_ascii",
    "render_svg",
    "run_suites",
    "square_block",
    "suite_names",
    "uneven_hexagon",
]
