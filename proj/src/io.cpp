#include "splinterlab/io.hpp"

#include <fstream>
#include <sstream>

#include "splinterlab/errors.hpp"

namespace splinterlab {

namespace {

Json vec_to_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_to_string(x));
    return arr;
}

RatVec vec_from_json(const Json& arr, const char* what) {
    if (!arr.is_array()) throw ValueError(std::string(what) + ": expected an array");
    RatVec out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_string()) throw ValueError(std::string(what) + ": expected rational strings");
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

const Json& field(const Json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw ValueError(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Json instance_to_json(const Instance& instance) {
    Json doc;
    doc["problem"] = instance.spec.name();
    doc["n"] = instance.n;
    doc["costs"] = vec_to_json(instance.costs);
    return doc;
}

Instance instance_from_json(const Json& doc) {
    const RilcopSpec& spec = spec_by_name(field(doc, "problem").get<std::string>());
    const int n = field(doc, "n").get<int>();
    return make_instance(spec, n, vec_from_json(field(doc, "costs"), "costs"));
}

Json query_to_json(const Query& query) {
    Json doc;
    doc["dim"] = query.vector.size();
    doc["vector"] = vec_to_json(query.vector);
    if (!query.id.empty()) doc["id"] = query.id;
    return doc;
}

Query query_from_json(const Json& doc) {
    RatVec v = vec_from_json(field(doc, "vector"), "vector");
    if (doc.contains("dim") && doc["dim"].get<std::size_t>() != v.size()) {
        throw DimensionError("query document: dim disagrees with the vector length");
    }
    std::string id = doc.contains("id") ? doc["id"].get<std::string>() : std::string{};
    return make_query(std::move(v), std::move(id));
}

Json polyhedron_to_json(const ConePolyhedron& p) {
    Json doc;
    doc["dim"] = p.dim();
    Json normals = Json::array();
    for (const auto& f : p.normals()) normals.push_back(vec_to_json(f));
    doc["normals"] = std::move(normals);
    Json labels = Json::array();
    for (const auto& l : p.labels()) labels.push_back(l.to_string());
    doc["labels"] = std::move(labels);
    return doc;
}

ConePolyhedron polyhedron_from_json(const Json& doc) {
    const int dim = field(doc, "dim").get<int>();
    std::vector<RatVec> normals;
    for (const auto& row : field(doc, "normals")) {
        normals.push_back(vec_from_json(row, "normals"));
    }
    std::vector<NormalLabel> labels;
    if (doc.contains("labels")) {
        for (const auto& l : doc["labels"]) {
            labels.push_back(NormalLabel::from_string(l.get<std::string>()));
        }
    } else {
        for (std::size_t i = 0; i < normals.size(); ++i) {
            labels.push_back(NormalLabel::query(i));
        }
    }
    return ConePolyhedron(dim, std::move(normals), std::move(labels));
}

Json stream_to_json(const HalfSpaceStream& stream) {
    Json doc;
    Json queries = Json::array();
    for (const auto& q : stream.queries) queries.push_back(query_to_json(q));
    doc["queries"] = std::move(queries);
    doc["signs"] = stream.signs;
    return doc;
}

HalfSpaceStream stream_from_json(const Json& doc) {
    std::vector<Query> queries;
    for (const auto& q : field(doc, "queries")) queries.push_back(query_from_json(q));
    std::vector<int> signs = field(doc, "signs").get<std::vector<int>>();
    return make_stream(std::move(queries), std::move(signs));
}

Json tree_to_json(const QueryTree& tree) {
    Json doc;
    doc["problem"] = tree.spec().name();
    doc["n"] = tree.n();
    Json nodes = Json::object();
    for (const auto& [path, query] : tree.explicit_nodes()) {
        nodes[path] = vec_to_json(query);
    }
    doc["nodes"] = std::move(nodes);
    Json leaves = Json::object();
    for (const auto& [key, label] : tree.explicit_leaf_labels()) {
        leaves[key] = label;
    }
    doc["leaves"] = std::move(leaves);
    return doc;
}

QueryTree tree_from_json(const Json& doc) {
    const RilcopSpec& spec = spec_by_name(field(doc, "problem").get<std::string>());
    const int n = field(doc, "n").get<int>();
    std::map<std::string, RatVec> nodes;
    for (const auto& [path, query] : field(doc, "nodes").items()) {
        nodes[path] = vec_from_json(query, "nodes");
    }
    std::map<std::string, std::uint64_t> leaves;
    for (const auto& [key, label] : field(doc, "leaves").items()) {
        leaves[key] = label.get<std::uint64_t>();
    }
    return QueryTree(spec, n, std::move(nodes), std::move(leaves));
}

Json face_structure_to_json(const FaceStructure& faces) {
    Json doc;
    doc["dim"] = faces.polyhedron.dim();
    Json rows = Json::array();
    for (std::size_t i = 0; i < faces.polyhedron.size(); ++i) {
        Json row;
        row["label"] = faces.polyhedron.labels()[i].to_string();
        row["normal"] = vec_to_json(faces.polyhedron.normals()[i]);
        row["facet"] = static_cast<bool>(faces.facet_flags[i]);
        if (faces.witnesses[i]) row["witness"] = vec_to_json(*faces.witnesses[i]);
        rows.push_back(std::move(row));
    }
    doc["normals"] = std::move(rows);
    doc["facet_count"] = faces.facet_count();
    return doc;
}

namespace {

Json classification_body(const QueryClassification& c) {
    Json doc;
    doc["verdict"] = verdict_name(c.verdict);
    switch (c.verdict) {
        case Verdict::sCp:
            doc["scraped_facet"] = c.scraped_facet ? c.scraped_facet->to_string() : "";
            doc["scale"] = rational_to_string(*c.scale);
            break;
        case Verdict::Rsp: {
            doc["orientation"] = c.orientation == QueryClassification::Orientation::Plus ? "+"
                                 : c.orientation == QueryClassification::Orientation::Minus
                                     ? "-"
                                     : "+-";
            doc["multipliers"] = vec_to_json(c.multipliers);
            break;
        }
        case Verdict::spL:
            if (c.side_witnesses) {
                doc["c_plus"] = vec_to_json(c.side_witnesses->first);
                doc["c_minus"] = vec_to_json(c.side_witnesses->second);
            }
            break;
    }
    return doc;
}

}  // namespace

Json classification_to_json(const Query& query, const std::string& set_id,
                            const QueryClassification& c) {
    Json doc;
    doc["query_id"] = query.id;
    doc["set_id"] = set_id;
    doc["certificate"] = classification_body(c);
    doc["verdict"] = verdict_name(c.verdict);
    return doc;
}

Json census_report_to_json(const CensusReport& report) {
    if (!census_bookkeeping_holds(report)) {
        throw InternalError("census_report_to_json: bookkeeping identity failed");
    }
    Json doc;
    doc["problem"] = report.problem;
    doc["n"] = report.n;
    doc["stream_length"] = report.stream_length;
    doc["query_id"] = report.query_id;
    doc["solution_count"] = report.solution_count;
    doc["e_before"] = report.e_before;
    doc["dropped"] = report.dropped;
    doc["counts"] = {{"spL", report.spl_count},
                     {"sCp", report.scp_count},
                     {"Rsp", report.rsp_count}};
    doc["one_sided_plus"] = report.one_sided_plus;
    doc["one_sided_minus"] = report.one_sided_minus;
    doc["e_after_plus"] = report.e_after_plus;
    doc["e_after_minus"] = report.e_after_minus;
    doc["seed"] = report.seed;
    doc["config"] = report.config;
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        Json row;
        row["set"] = v.s;
        row["verdict"] = verdict_name(v.verdict);
        row["side"] = v.side;
        row["certificate"] = classification_body(v.classification);
        verdicts.push_back(std::move(row));
    }
    doc["verdicts"] = std::move(verdicts);
    return doc;
}

Json probe_report_to_json(const ProbeReport& report) {
    Json doc;
    doc["problem"] = report.problem;
    doc["n"] = report.n;
    doc["stream_length"] = report.stream_length;
    doc["strategy"] = strategy_name(report.strategy);
    doc["trials_requested"] = report.trials_requested;
    doc["seed"] = report.seed;
    Json trials = Json::array();
    for (const auto& t : report.trials) {
        Json row;
        row["trial"] = t.trial;
        row["skipped"] = t.skipped;
        row["query"] = t.query_desc;
        if (t.target_set) row["target_set"] = *t.target_set;
        if (t.target_verdict) row["target_verdict"] = verdict_name(*t.target_verdict);
        if (!t.skipped) {
            row["spL"] = t.spl_count;
            row["sCp"] = t.scp_count;
            row["Rsp"] = t.rsp_count;
            row["e_before"] = t.e_before;
        }
        trials.push_back(std::move(row));
    }
    doc["trials"] = std::move(trials);
    if (report.best_trial) {
        doc["best_trial"] = *report.best_trial;
        doc["best_query"] = query_to_json(report.best_query);
        doc["best_stream"] = stream_to_json(report.best_stream);
        doc["best_census"] = census_report_to_json(*report.best_census);
    }
    return doc;
}

Json solve_report_to_json(const SolveReport& report) {
    Json doc;
    doc["solved"] = report.solved;
    doc["cells_total"] = report.cells_total;
    doc["cells_certified"] = report.cells_certified;
    doc["node_count"] = report.node_count;
    doc["leaf_count"] = report.leaf_count;
    doc["max_depth"] = report.max_depth;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json row;
        row["leaf"] = f.leaf;
        row["final_sign"] = f.final_sign;
        row["labeled"] = f.labeled;
        if (f.labeled) {
            row["label"] = f.label;
            row["failing_solution"] = f.failing_solution;
            row["counterexample"] = vec_to_json(f.counterexample);
        }
        failures.push_back(std::move(row));
    }
    doc["failures"] = std::move(failures);
    return doc;
}

Json coverage_report_to_json(const CoverageReport& report) {
    Json doc;
    doc["samples_per_facet"] = report.samples_per_facet;
    doc["seed"] = report.seed;
    Json rows = Json::array();
    for (const auto& f : report.facets) {
        Json row;
        row["set"] = f.set_index;
        row["facet"] = f.facet.to_string();
        row["samples"] = f.samples;
        row["covered"] = f.covered;
        row["fraction"] = f.samples == 0
                              ? "0"
                              : rational_to_string(Rational(static_cast<long long>(f.covered),
                                                            static_cast<long long>(f.samples)));
        rows.push_back(std::move(row));
    }
    doc["facets"] = std::move(rows);
    return doc;
}

Json prop1_report_to_json(const Prop1Report& report) {
    Json doc;
    doc["hypothesis_applies"] = report.hypothesis_applies;
    doc["query_balanced"] = report.query_balanced;
    doc["polyhedron_balanced"] = report.polyhedron_balanced;
    if (report.algebraic_verdict) doc["algebraic_verdict"] = verdict_name(*report.algebraic_verdict);
    if (report.geometric_verdict) doc["geometric_verdict"] = verdict_name(*report.geometric_verdict);
    doc["violation"] = report.violation;
    return doc;
}

std::string to_output_string(const Json& doc) { return doc.dump(2) + "\n"; }

std::string facet_report_csv(const std::string& set_id, const FaceStructure& faces) {
    std::ostringstream out;
    out << "set,label,facet,witness\n";
    for (std::size_t i = 0; i < faces.polyhedron.size(); ++i) {
        out << set_id << ',' << faces.polyhedron.labels()[i].to_string() << ','
            << (faces.facet_flags[i] ? 1 : 0) << ',';
        if (faces.witnesses[i]) out << "witness:" << set_id << ":" << i;
        out << '\n';
    }
    return out.str();
}

std::string census_report_csv(const CensusReport& report, const std::string& certificate_file) {
    if (!census_bookkeeping_holds(report)) {
        throw InternalError("census_report_csv: bookkeeping identity failed");
    }
    std::ostringstream out;
    out << "set,verdict,side,certificate\n";
    for (const auto& v : report.verdicts) {
        out << v.s << ',' << verdict_name(v.verdict) << ',' << v.side << ',';
        if (!certificate_file.empty()) out << certificate_file << "#" << v.s;
        out << '\n';
    }
    return out.str();
}

std::string coverage_report_csv(const CoverageReport& report) {
    std::ostringstream out;
    out << "set,facet,samples,covered\n";
    for (const auto& f : report.facets) {
        out << f.set_index << ',' << f.facet.to_string() << ',' << f.samples << ',' << f.covered
            << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValueError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValueError("cannot open '" + path + "' for writing");
    out << content;
}

}  // namespace splinterlab
