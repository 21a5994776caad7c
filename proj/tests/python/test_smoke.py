"""Smoke tests for the python module: every exposed operation runs and
returns the documented shapes on small inputs."""

from fractions import Fraction

import pytest

import splinterlab as sl


def frac(s):
    return Fraction(s)


def test_rational_strings_are_canonical():
    assert sl.rational_str("-6/8") == "-3/4"
    assert sl.rational_str("5") == "5"
    with pytest.raises(sl.SplinterlabError):
        sl.rational_str("1/0")


def test_feasibility_and_cone_membership():
    witness = sl.solve_feasibility([["1", "0"], ["0", "1"]], [True, True])
    assert witness is not None
    assert all(frac(f) < 0 for f in witness)
    assert sl.solve_feasibility([["1", "0"], ["-1", "0"]], [True, True]) is None

    member = sl.cone_member(["1", "1"], [["1", "0"], ["0", "1"]])
    assert member["member"] is True
    assert member["multipliers"] == ["1", "1"]

    non = sl.cone_member(["1", "-1"], [["1", "0"], ["0", "1"]])
    assert non["member"] is False
    sep = [frac(x) for x in non["separator"]]
    assert sep[0] <= 0 and sep[1] <= 0
    assert sep[0] * 1 + sep[1] * (-1) > 0


def test_linear_algebra_helpers():
    assert sl.rank([["1", "0"], ["0", "1"]]) == 2
    assert sl.rank([["2", "4"], ["1", "2"]]) == 1
    assert sl.is_proportional(["2", "-2"], ["1", "-1"]) == "2"
    assert sl.is_proportional(["1", "1"], ["1", "-1"]) is None


def test_permutations_and_encodings():
    assert sl.permutation_unrank_lex(3, 0) == [1, 2, 3]
    assert sl.permutation_unrank_lex(3, 5) == [3, 2, 1]
    assert sl.permutation_rank_lex([3, 2, 1]) == 5
    assert sl.tsp_solution_vector(3, 0) == [
        "1", "0", "0", "0", "1", "0", "0", "0", "1", "1", "0", "0"]
    ap = sl.ap_solution_vector(3, 0)
    assert ap == ["1", "0", "0", "0", "1", "0", "0", "0", "1"]
    diff = sl.difference_query("tsp", 3, 0, 1)
    assert sum(frac(x) for x in diff) == 0


def test_witness_instances_and_brute_force():
    interior = sl.prop2_interior_witness(3)
    assert interior["problem"] == "tsp"
    assert sl.brute_force_optima(interior) == [0]
    assert sl.objective_value(interior, 0) == "0"

    face = sl.prop2_face_witness(3, 2)
    assert sl.brute_force_optima(face) == [0, 2]

    with pytest.raises(sl.SizeCapError):
        sl.brute_force_optima(sl.prop2_interior_witness(9))


def test_solution_set_geometry():
    cone = sl.solution_set("tsp", 3, 0)
    assert cone["dim"] == 12
    assert len(cone["normals"]) == 5
    assert cone["labels"][0] == "0-1"
    assert sl.is_fully_dimensional(cone) is not None

    faces = sl.facet_structure(cone)
    assert faces["facet_count"] == 5

    flat = sl.is_fully_dimensional(
        {"dim": 2, "normals": [["1", "0"], ["-1", "0"]], "labels": ["q0", "q1"]})
    assert flat is None


def test_classification_verdicts():
    facet = sl.difference_query("tsp", 3, 0, 1)
    assert sl.classify("tsp", 3, 0, facet)["verdict"] == "sCp"

    e01 = ["1"] + ["0"] * 11
    assert sl.classify("tsp", 3, 0, e01)["verdict"] == "spL"
    assert sl.classify("tsp", 3, 0, e01, path="geometric")["verdict"] == "spL"
    assert sl.is_balanced_query(facet) is True
    assert sl.is_balanced_query(e01) is False

    report = sl.check_prop1("tsp", 3, 4, e01)
    assert report["hypothesis_applies"] is True
    assert report["violation"] is False


def test_tournament_tree_roundtrip():
    tree = sl.build_tournament_tree("tsp", 3)
    assert len(tree["nodes"]) == 31
    report = sl.verify_tree(tree)
    assert report["solved"] is True
    assert report["cells_certified"] == 32

    run = sl.run_tree(tree, sl.prop2_interior_witness(3))
    assert run["solution"] == 0

    inst = sl.random_instance("tsp", 3, seed=11)
    assert sl.run_tree(tree, inst)["solution"] in sl.brute_force_optima(inst)


def test_census_and_probe():
    query = ["1", "-1"] + ["0"] * 10
    report = sl.splinter_census("tsp", 3, None, query)
    assert report["counts"] == {"spL": 6, "sCp": 0, "Rsp": 0}
    assert report["e_before"] == 6
    assert report["e_after_plus"] == 6

    probe = sl.conjecture_probe("tsp", 3, 0, "coordinate-difference", 66, seed=5)
    assert len(probe["trials"]) == 66
    assert probe["best_census"]["counts"]["spL"] == 6

    again = sl.splinter_census("tsp", 3, None, query, jobs=4)
    assert again == report


def test_coverage_smoke():
    tree = sl.build_tournament_tree("tsp", 3)
    report = sl.face_scrape_coverage(tree, samples=5, seed=3)
    assert len(report["facets"]) == 30
    by_facet = {(f["set"], f["facet"]): f for f in report["facets"]}
    root = by_facet[(0, "0-1")]
    assert root["covered"] == root["samples"]
