#pragma once

#include <string>

#include <json.hpp>

#include "splinterlab/census.hpp"
#include "splinterlab/classify.hpp"
#include "splinterlab/polyhedra.hpp"
#include "splinterlab/query_tree.hpp"
#include "splinterlab/rilcop.hpp"

namespace splinterlab {

using Json = nlohmann::json;

// Documents carry rationals as canonical "p/q" strings throughout.

Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& doc);  // problem must be "tsp" or "ap"

Json query_to_json(const Query& query);
Query query_from_json(const Json& doc);

Json polyhedron_to_json(const ConePolyhedron& p);
ConePolyhedron polyhedron_from_json(const Json& doc);

Json stream_to_json(const HalfSpaceStream& stream);
HalfSpaceStream stream_from_json(const Json& doc);

Json tree_to_json(const QueryTree& tree);             // explicit trees only
QueryTree tree_from_json(const Json& doc);

Json face_structure_to_json(const FaceStructure& faces);

Json classification_to_json(const Query& query, const std::string& set_id,
                            const QueryClassification& c);

Json census_report_to_json(const CensusReport& report);  // re-checks the bookkeeping
Json probe_report_to_json(const ProbeReport& report);
Json solve_report_to_json(const SolveReport& report);
Json coverage_report_to_json(const CoverageReport& report);
Json prop1_report_to_json(const Prop1Report& report);

/// Canonical text for a document: 2-space indent plus trailing newline.
/// Reports promised to be byte-identical go through this.
std::string to_output_string(const Json& doc);

/// CSV tables. Facet rows: set id, normal label, facet flag, witness
/// reference. Classification rows: set id, verdict, certificate file.
std::string facet_report_csv(const std::string& set_id, const FaceStructure& faces);
std::string census_report_csv(const CensusReport& report, const std::string& certificate_file);
std::string coverage_report_csv(const CoverageReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace splinterlab
