// Python bindings for the main operations. Rationals cross the boundary
// as canonical "p/q" strings; structured results cross as plain dicts
// mirroring the JSON document formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splinterlab/census.hpp"
#include "splinterlab/classify.hpp"
#include "splinterlab/errors.hpp"
#include "splinterlab/feasibility.hpp"
#include "splinterlab/io.hpp"
#include "splinterlab/linalg.hpp"
#include "splinterlab/polyhedra.hpp"
#include "splinterlab/query_tree.hpp"
#include "splinterlab/rilcop.hpp"
#include "splinterlab/rng.hpp"

namespace py = pybind11;
using namespace splinterlab;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json arr = Json::array();
        for (const auto& item : obj) arr.push_back(py_to_json(item));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& [key, value] : obj.cast<py::dict>()) {
            out[key.cast<std::string>()] = py_to_json(value);
        }
        return out;
    }
    throw ValueError("unsupported python value in document");
}

RatVec vec_from_strings(const std::vector<std::string>& parts) {
    return parse_rational_vector(parts);
}

std::vector<RatVec> rows_from_strings(const std::vector<std::vector<std::string>>& rows) {
    std::vector<RatVec> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(parse_rational_vector(r));
    return out;
}

Instance instance_from_py(const py::dict& doc) { return instance_from_json(py_to_json(doc)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact geometry of solution-set cones for linear combinatorial"
              " optimization problems";

    // translators run newest-first: the subclass must be registered after
    // its base to win the dispatch
    auto base = py::register_exception<Error>(m, "SplinterlabError");
    py::register_exception<SizeCapError>(m, "SizeCapError", base.ptr());

    // exact arithmetic and feasibility
    m.def("rational_str", [](const std::string& text) {
        return rational_to_string(parse_rational(text));
    }, py::arg("text"), "canonical form of a rational string");

    m.def("solve_feasibility",
          [](const std::vector<std::vector<std::string>>& normals, const std::vector<bool>& strict)
              -> py::object {
              FeasibilityResult r = solve_feasibility(rows_from_strings(normals), strict);
              if (!r.feasible) return py::none();
              return py::cast(rational_vector_to_strings(r.witness));
          },
          py::arg("normals"), py::arg("strict"));

    m.def("cone_member",
          [](const std::vector<std::string>& target,
             const std::vector<std::vector<std::string>>& generators) {
              ConeMembershipResult r =
                  cone_member(vec_from_strings(target), rows_from_strings(generators));
              py::dict out;
              out["member"] = r.member;
              if (r.member) out["multipliers"] = rational_vector_to_strings(r.multipliers);
              else out["separator"] = rational_vector_to_strings(r.separator);
              return out;
          },
          py::arg("target"), py::arg("generators"));

    m.def("rank", [](const std::vector<std::vector<std::string>>& rows) {
        return rank(rows_from_strings(rows));
    }, py::arg("rows"));

    m.def("is_proportional",
          [](const std::vector<std::string>& a, const std::vector<std::string>& b) -> py::object {
              auto lambda = proportionality_factor(vec_from_strings(a), vec_from_strings(b));
              if (!lambda) return py::none();
              return py::str(rational_to_string(*lambda));
          },
          py::arg("a"), py::arg("b"));

    // encodings
    m.def("permutation_unrank_lex", [](int n, std::uint64_t s) {
        return permutation_unrank_lex(n, s).images;
    }, py::arg("n"), py::arg("s"));
    m.def("permutation_rank_lex", [](const std::vector<int>& images) {
        return permutation_rank_lex(Permutation{images});
    }, py::arg("images"));

    m.def("tsp_solution_vector", [](int n, std::uint64_t s) {
        return rational_vector_to_strings(tsp_solution_vector(n, s));
    }, py::arg("n"), py::arg("s"));
    m.def("ap_solution_vector", [](int n, std::uint64_t s) {
        return rational_vector_to_strings(ap_solution_vector(n, s));
    }, py::arg("n"), py::arg("s"));

    m.def("difference_query",
          [](const std::string& problem, int n, std::uint64_t s, std::uint64_t sp) {
              return rational_vector_to_strings(difference_query(spec_by_name(problem), n, s, sp));
          },
          py::arg("problem"), py::arg("n"), py::arg("s"), py::arg("s_prime"));

    m.def("objective_value", [](const py::dict& instance, std::uint64_t s) {
        return rational_to_string(objective_value(instance_from_py(instance), s));
    }, py::arg("instance"), py::arg("s"));

    m.def("brute_force_optima", [](const py::dict& instance) {
        return brute_force_optima(instance_from_py(instance));
    }, py::arg("instance"));

    m.def("prop2_interior_witness", [](int n) {
        return json_to_py(instance_to_json(prop2_interior_witness(n)));
    }, py::arg("n"));
    m.def("prop2_face_witness", [](int n, std::uint64_t s_prime) {
        return json_to_py(instance_to_json(prop2_face_witness(n, s_prime)));
    }, py::arg("n"), py::arg("s_prime"));

    m.def("random_instance", [](const std::string& problem, int n, std::uint64_t seed) {
        SeededRng rng(seed);
        return json_to_py(instance_to_json(random_instance(spec_by_name(problem), n, rng)));
    }, py::arg("problem"), py::arg("n"), py::arg("seed"));

    // polyhedra
    m.def("solution_set", [](const std::string& problem, int n, std::uint64_t s) {
        return json_to_py(polyhedron_to_json(solution_set(spec_by_name(problem), n, s)));
    }, py::arg("problem"), py::arg("n"), py::arg("s"));

    m.def("is_fully_dimensional", [](const py::dict& polyhedron) -> py::object {
        InteriorPoint p = is_fully_dimensional(polyhedron_from_json(py_to_json(polyhedron)));
        if (!p.full_dimensional) return py::none();
        return py::cast(rational_vector_to_strings(p.witness));
    }, py::arg("polyhedron"));

    m.def("facet_structure", [](const py::dict& polyhedron) {
        return json_to_py(
            face_structure_to_json(facet_normals(polyhedron_from_json(py_to_json(polyhedron)))));
    }, py::arg("polyhedron"));

    m.def("is_balanced_query", [](const std::vector<std::string>& q) {
        return is_balanced_query(vec_from_strings(q));
    }, py::arg("query"));

    // classification
    m.def("classify",
          [](const std::string& problem, int n, std::uint64_t s,
             const std::vector<std::string>& query, const std::string& path) {
              const RilcopSpec& spec = spec_by_name(problem);
              Query q = make_query(vec_from_strings(query));
              ConePolyhedron cone = solution_set(spec, n, s);
              FaceStructure faces = facet_normals(cone);
              QueryClassification c = path == "geometric"
                                          ? classify_geometric(q, cone, faces)
                                          : classify_algebraic(q, faces);
              return json_to_py(classification_to_json(
                  q, problem + ":" + std::to_string(n) + ":" + std::to_string(s), c));
          },
          py::arg("problem"), py::arg("n"), py::arg("s"), py::arg("query"),
          py::arg("path") = "algebraic");

    m.def("check_prop1",
          [](const std::string& problem, int n, std::uint64_t s,
             const std::vector<std::string>& query) {
              const RilcopSpec& spec = spec_by_name(problem);
              return json_to_py(prop1_report_to_json(
                  check_prop1(make_query(vec_from_strings(query)), solution_set(spec, n, s))));
          },
          py::arg("problem"), py::arg("n"), py::arg("s"), py::arg("query"));

    // trees
    m.def("build_tournament_tree", [](const std::string& problem, int n) {
        return json_to_py(tree_to_json(build_tournament_tree(spec_by_name(problem), n)));
    }, py::arg("problem"), py::arg("n"));

    m.def("run_tree", [](const py::dict& tree, const py::dict& instance) {
        TreeRunResult r = run_tree(tree_from_json(py_to_json(tree)), instance_from_py(instance));
        py::dict out;
        out["leaf"] = r.leaf;
        out["final_sign"] = r.final_sign;
        out["solution"] = r.solution;
        return out;
    }, py::arg("tree"), py::arg("instance"));

    m.def("verify_tree", [](const py::dict& tree) {
        return json_to_py(solve_report_to_json(verify_solves(tree_from_json(py_to_json(tree)))));
    }, py::arg("tree"));

    m.def("face_scrape_coverage",
          [](const py::dict& tree, std::size_t samples, std::uint64_t seed) {
              return json_to_py(coverage_report_to_json(
                  face_scrape_coverage(tree_from_json(py_to_json(tree)), samples, seed)));
          },
          py::arg("tree"), py::arg("samples"), py::arg("seed"));

    // census
    m.def("splinter_census",
          [](const std::string& problem, int n, const py::object& stream,
             const std::vector<std::string>& query, int jobs, std::uint64_t seed) {
              const RilcopSpec& spec = spec_by_name(problem);
              HalfSpaceStream hs;
              if (!stream.is_none()) hs = stream_from_json(py_to_json(stream));
              ReportMeta meta{seed, "python census"};
              return json_to_py(census_report_to_json(
                  splinter_census(spec, n, hs, make_query(vec_from_strings(query)), jobs, meta)));
          },
          py::arg("problem"), py::arg("n"), py::arg("stream"), py::arg("query"),
          py::arg("jobs") = 1, py::arg("seed") = 0);

    m.def("conjecture_probe",
          [](const std::string& problem, int n, std::size_t stream_length,
             const std::string& strategy, std::size_t trials, std::uint64_t seed, int jobs) {
              return json_to_py(probe_report_to_json(
                  conjecture_probe(spec_by_name(problem), n, stream_length,
                                   strategy_from_name(strategy), trials, seed, jobs)));
          },
          py::arg("problem"), py::arg("n"), py::arg("stream_length"), py::arg("strategy"),
          py::arg("trials"), py::arg("seed"), py::arg("jobs") = 1);

    m.attr("__version__") = "0.1.0";
}
