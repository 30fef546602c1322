"""Exact and heuristic solvers for multipacking problems on finite point sets."""

from .geometry import (
    GeneralPositionError,
    NeighborTable,
    ParseError,
    PerturbationError,
    PointSet,
    assert_general_position,
    assert_global_distinct_distances,
    build_neighbor_table,
    load_points,
    load_points_csv,
    load_points_json,
    perturb,
    save_points_csv,
    save_points_json,
    squared_distance,
)
from .multipacking import (
    BudgetExceededError,
    SolveReport,
    Violation,
    bruteforce_max_r_multipacking,
    bruteforce_profile,
    is_r_multipacking,
    load_witness,
    multipacking_number,
    save_witness,
)
from .line import (
    greedy_max_r_multipacking_1d,
    lower_family_1d,
    upper_family_1d,
    verify_1d_bounds,
)
from .plane import (
    ConflictGraph,
    DegreeAudit,
    NotAForestError,
    build_conflict_graph,
    build_nearest_neighbor_graph,
    edge_list_text,
    exact_max_is,
    forest_max_independent_set,
    fpt_2_multipacking,
    fpt_find_in_graph,
    greedy_2_multipacking,
    max_1_multipacking,
    max_2_multipacking_exact,
    max_degree_audit,
    parse_edge_list,
)
from .instances import (
    pentagon_five,
    random_point_set,
    scan_six_point_sets,
    search_pentagon_fixture,
    search_square_fixture,
    square_four,
)
from .render import render_svg, render_to_file

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ConflictGraph",
    "DegreeAudit",
    "GeneralPositionError",
    "NeighborTable",
    "NotAForestError",
    "ParseError",
    "PerturbationError",
    "PointSet",
    "SolveReport",
    "Violation",
    "assert_general_position",
    "assert_global_distinct_distances",
    "bruteforce_max_r_multipacking",
    "bruteforce_profile",
    "build_conflict_graph",
    "build_neighbor_table",
    "build_nearest_neighbor_graph",
    "edge_list_text",
    "exact_max_is",
    "forest_max_independent_set",
    "fpt_2_multipacking",
    "fpt_find_in_graph",
    "greedy_2_multipacking",
    "greedy_max_r_multipacking_1d",
    "is_r_multipacking",
    "load_points",
    "load_points_csv",
    "load_points_json",
    "load_witness",
    "lower_family_1d",
    "max_1_multipacking",
    "max_2_multipacking_exact",
    "max_degree_audit",
    "multipacking_number",
    "parse_edge_list",
    "pentagon_five",
    "perturb",
    "random_point_set",
    "render_svg",
    "render_to_file",
    "save_points_csv",
    "save_points_json",
    "save_witness",
    "scan_six_point_sets",
    "search_pentagon_fixture",
    "search_square_fixture",
    "square_four",
    "squared_distance",
    "upper_family_1d",
    "verify_1d_bounds",
]
