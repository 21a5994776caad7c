#include <doctest.h>

#include <cstdio>

#include "splinterlab/errors.hpp"
#include "splinterlab/io.hpp"
#include "splinterlab/rng.hpp"
#include "support/test_util.hpp"

using namespace splinterlab;
using testing::sparse;

TEST_CASE("instance documents round trip") {
    Instance inst = prop2_interior_witness(3);
    Json doc = instance_to_json(inst);
    CHECK(doc["problem"] == "tsp");
    CHECK(doc["n"] == 3);
    Instance back = instance_from_json(doc);
    CHECK(back.costs == inst.costs);
    CHECK(back.n == 3);
    CHECK(back.spec.name() == "tsp");

    Json bad = doc;
    bad["problem"] = "lp";
    CHECK_THROWS_AS(instance_from_json(bad), ValueError);
    Json short_costs = doc;
    short_costs["costs"] = {"1", "2"};
    CHECK_THROWS_AS(instance_from_json(short_costs), DimensionError);
}

TEST_CASE("query documents round trip and validate dim") {
    Query q = make_query(sparse(12, {{0, 1}, {1, -1}}), "e01-e02");
    Json doc = query_to_json(q);
    CHECK(doc["dim"] == 12);
    Query back = query_from_json(doc);
    CHECK(back.vector == q.vector);
    CHECK(back.id == "e01-e02");

    Json bad = doc;
    bad["dim"] = 11;
    CHECK_THROWS_AS(query_from_json(bad), DimensionError);
    Json zero = doc;
    zero["vector"] = std::vector<std::string>(12, "0");
    CHECK_THROWS_AS(query_from_json(zero), ValueError);
}

TEST_CASE("polyhedron documents round trip with labels") {
    ConePolyhedron cone = solution_set(tsp_spec(), 3, 0);
    Json doc = polyhedron_to_json(cone);
    ConePolyhedron back = polyhedron_from_json(doc);
    CHECK(back == cone);
    CHECK(doc["labels"][0] == "0-1");
}

TEST_CASE("stream documents round trip") {
    Query a = make_query(sparse(12, {{0, 1}, {4, -1}}), "a");
    Query b = make_query(sparse(12, {{2, 1}, {3, -1}}), "b");
    HalfSpaceStream stream = make_stream({a, b}, {+1, -1});
    HalfSpaceStream back = stream_from_json(stream_to_json(stream));
    CHECK(back.length() == 2);
    CHECK(back.queries[0].vector == a.vector);
    CHECK(back.signs == std::vector<int>{+1, -1});
}

TEST_CASE("tree documents round trip and reject malformed input") {
    QueryTree tree = build_tournament_tree(tsp_spec(), 3);
    Json doc = tree_to_json(tree);
    QueryTree back = tree_from_json(doc);
    CHECK(back.node_count() == 31);
    CHECK(back.leaf_count() == 16);
    CHECK(back.leaf_label("++++", +1) == 0);
    CHECK(back.leaf_label("++++", -1) == 5);
    CHECK(to_output_string(tree_to_json(back)) == to_output_string(doc));

    Json bad = doc;
    bad["nodes"].erase("+");  // breaks tree-likeness
    CHECK_THROWS_AS(tree_from_json(bad), ValueError);
}

TEST_CASE("rationals serialize canonically inside documents") {
    RatVec v{parse_rational("4/8"), parse_rational("-10/5"), Rational(3)};
    Query q = make_query(v, "frac");
    Json doc = query_to_json(q);
    CHECK(doc["vector"][0] == "1/2");
    CHECK(doc["vector"][1] == "-2");
    CHECK(doc["vector"][2] == "3");
}

TEST_CASE("census emission re-checks the bookkeeping identity") {
    Query q = make_query(sparse(12, {{0, 1}, {1, -1}}), "e01-e02");
    CensusReport report = splinter_census(tsp_spec(), 3, {}, q);
    Json doc = census_report_to_json(report);
    CHECK(doc["counts"]["spL"] == 6);
    CHECK(doc["e_before"] == 6);

    report.e_after_plus = 99;  // corrupt a derived field
    CHECK_THROWS_AS(census_report_to_json(report), InternalError);
}

TEST_CASE("csv tables carry the promised columns") {
    FaceStructure faces = facet_normals(solution_set(tsp_spec(), 3, 0));
    std::string csv = facet_report_csv("0", faces);
    CHECK(csv.rfind("set,label,facet,witness\n", 0) == 0);
    CHECK(csv.find("0,0-1,1,witness:0:0") != std::string::npos);

    Query q = make_query(sparse(12, {{0, 1}, {1, -1}}), "e01-e02");
    CensusReport report = splinter_census(tsp_spec(), 3, {}, q);
    std::string census_csv = census_report_csv(report, "census.certs.json");
    CHECK(census_csv.rfind("set,verdict,side,certificate\n", 0) == 0);
    CHECK(census_csv.find("0,spL,0,census.certs.json#0") != std::string::npos);
}

TEST_CASE("file helpers write and read back") {
    const std::string path = "splinterlab_io_test.tmp";
    write_text_file(path, "payload\n");
    CHECK(read_text_file(path) == "payload\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("missing-file-odd-name.json"), ValueError);
}
