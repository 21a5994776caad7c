"""Exact geometry of solution-set cones for linear combinatorial
optimization problems.

Rationals cross the boundary as canonical "p/q" strings; structured
results are plain dicts mirroring the JSON document formats of the
command line tool.
"""

from ._core import (
    SizeCapError,
    SplinterlabError,
    __version__,
    ap_solution_vector,
    brute_force_optima,
    build_tournament_tree,
    check_prop1,
    classify,
    cone_member,
    conjecture_probe,
    difference_query,
    face_scrape_coverage,
    facet_structure,
    is_balanced_query,
    is_fully_dimensional,
    is_proportional,
    objective_value,
    permutation_rank_lex,
    permutation_unrank_lex,
    prop2_face_witness,
    prop2_interior_witness,
    random_instance,
    rank,
    rational_str,
    run_tree,
    solution_set,
    solve_feasibility,
    splinter_census,
    tsp_solution_vector,
    verify_tree,
)

__all__ = [
    "SizeCapError",
    "SplinterlabError",
    "__version__",
    "ap_solution_vector",
    "brute_force_optima",
    "build_tournament_tree",
    "check_prop1",
    "classify",
    "cone_member",
    "conjecture_probe",
    "difference_query",
    "face_scrape_coverage",
    "facet_structure",
    "is_balanced_query",
    "is_fully_dimensional",
    "is_proportional",
    "objective_value",
    "permutation_rank_lex",
    "permutation_unrank_lex",
    "prop2_face_witness",
    "prop2_interior_witness",
    "random_instance",
    "rank",
    "rational_str",
    "run_tree",
    "solution_set",
    "solve_feasibility",
    "splinter_census",
    "tsp_solution_vector",
    "verify_tree",
]
