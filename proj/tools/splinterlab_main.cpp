// Command line front end: instance generation, facet reports, query
// classification, tree certification, splinter censuses, conjecture
// probes, and face-scrape coverage.
//
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage
// error, 3 size-cap refusal.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "splinterlab/census.hpp"
#include "splinterlab/classify.hpp"
#include "splinterlab/errors.hpp"
#include "splinterlab/io.hpp"
#include "splinterlab/polyhedra.hpp"
#include "splinterlab/query_tree.hpp"
#include "splinterlab/rilcop.hpp"
#include "splinterlab/rng.hpp"

namespace {

using namespace splinterlab;

/// A report failed verification and the process should exit with 1.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

struct GlobalOptions {
    std::string problem = "tsp";
    int n = 3;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string cache_dir = ".splinterlab-cache";
    int jobs = 1;
    bool no_cache = false;
    bool unsafe_large = false;
};

void emit(const GlobalOptions& opts, const std::string& content) {
    if (opts.out.empty()) {
        std::cout << content;
    } else {
        write_text_file(opts.out, content);
    }
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string effective_cache_dir(const GlobalOptions& opts) {
    if (const char* env = std::getenv("SPLINTERLAB_CACHE")) return env;
    return opts.cache_dir;
}

std::uint64_t census_cap(const GlobalOptions& opts) {
    return opts.unsafe_large ? UINT64_MAX : kDefaultCensusCap;
}

HalfSpaceStream load_stream(const std::string& path) {
    if (path.empty()) return {};
    return stream_from_json(Json::parse(read_text_file(path)));
}

QueryTree load_tree(const GlobalOptions& opts, const std::string& tree_path, bool tournament) {
    if (tournament) {
        return build_tournament_tree(spec_by_name(opts.problem), opts.n);
    }
    if (tree_path.empty()) {
        throw CLI::ValidationError("verify-tree", "either --tree or --tournament is required");
    }
    return tree_from_json(Json::parse(read_text_file(tree_path)));
}

std::string faces_report_text(const GlobalOptions& opts) {
    const RilcopSpec& spec = spec_by_name(opts.problem);
    const std::uint64_t count = spec.solution_count(opts.n);
    if (count > census_cap(opts)) {
        throw SizeCapError("faces: " + std::to_string(count) +
                           " solution sets exceed the desk-scale cap (use --unsafe-large)");
    }
    if (opts.format == "csv") {
        std::string out;
        for (std::uint64_t s = 0; s < count; ++s) {
            FaceStructure faces = facet_normals(solution_set(spec, opts.n, s));
            std::string table = facet_report_csv(std::to_string(s), faces);
            if (s > 0) table.erase(0, table.find('\n') + 1);  // keep one header
            out += table;
        }
        return out;
    }
    Json doc;
    doc["problem"] = opts.problem;
    doc["n"] = opts.n;
    Json sets = Json::array();
    for (std::uint64_t s = 0; s < count; ++s) {
        FaceStructure faces = facet_normals(solution_set(spec, opts.n, s));
        Json entry = face_structure_to_json(faces);
        entry["set"] = s;
        sets.push_back(std::move(entry));
    }
    doc["sets"] = std::move(sets);
    return to_output_string(doc);
}

int cmd_gen(const GlobalOptions& opts, const std::string& kind, std::size_t count,
            std::uint64_t s_prime) {
    const RilcopSpec& spec = spec_by_name(opts.problem);
    if (kind == "random") {
        SeededRng rng(opts.seed);
        if (count == 1) {
            emit(opts, to_output_string(instance_to_json(random_instance(spec, opts.n, rng))));
        } else {
            Json doc;
            Json arr = Json::array();
            for (std::size_t i = 0; i < count; ++i) {
                arr.push_back(instance_to_json(random_instance(spec, opts.n, rng)));
            }
            doc["instances"] = std::move(arr);
            doc["seed"] = opts.seed;
            emit(opts, to_output_string(doc));
        }
        return 0;
    }
    if (kind == "interior") {
        emit(opts, to_output_string(instance_to_json(prop2_interior_witness(opts.n))));
        return 0;
    }
    if (kind == "face") {
        emit(opts, to_output_string(instance_to_json(prop2_face_witness(opts.n, s_prime))));
        return 0;
    }
    if (kind == "tournament-tree") {
        emit(opts, to_output_string(tree_to_json(build_tournament_tree(spec, opts.n))));
        return 0;
    }
    throw CLI::ValidationError("gen", "unknown kind '" + kind + "'");
}

int cmd_faces(const GlobalOptions& opts) {
    namespace fs = std::filesystem;
    const std::string key = opts.problem + "|" + std::to_string(opts.n) + "|" + opts.format + "|";
    const fs::path cache_file = fs::path(effective_cache_dir(opts)) /
                                ("faces_" + opts.problem + "_" + std::to_string(opts.n) + "_" +
                                 std::to_string(fnv1a64(key)) + (opts.format == "csv" ? ".csv" : ".json"));

    if (opts.no_cache) {
        // comparison mode: recompute and audit any existing cache entry
        const std::string fresh = faces_report_text(opts);
        if (fs::exists(cache_file)) {
            if (read_text_file(cache_file.string()) != fresh) {
                throw VerificationFailure("faces: cache entry " + cache_file.string() +
                                          " differs from fresh recomputation");
            }
        }
        emit(opts, fresh);
        return 0;
    }
    if (fs::exists(cache_file)) {
        emit(opts, read_text_file(cache_file.string()));
        return 0;
    }
    const std::string fresh = faces_report_text(opts);
    fs::create_directories(cache_file.parent_path());
    write_text_file(cache_file.string(), fresh);
    emit(opts, fresh);
    return 0;
}

int cmd_classify(const GlobalOptions& opts, const std::string& query_path, std::uint64_t set_index,
                 const std::string& path_choice) {
    const RilcopSpec& spec = spec_by_name(opts.problem);
    Query query = query_from_json(Json::parse(read_text_file(query_path)));
    ConePolyhedron cone = solution_set(spec, opts.n, set_index);
    FaceStructure faces = facet_normals(cone);

    Json doc;
    const std::string set_id = opts.problem + ":" + std::to_string(opts.n) + ":" +
                               std::to_string(set_index);
    bool disagree = false;
    if (path_choice == "algebraic" || path_choice == "both") {
        QueryClassification c = classify_algebraic(query, faces);
        doc["algebraic"] = classification_to_json(query, set_id, c);
    }
    if (path_choice == "geometric" || path_choice == "both") {
        QueryClassification c = classify_geometric(query, cone, faces);
        doc["geometric"] = classification_to_json(query, set_id, c);
    }
    if (path_choice == "both") {
        disagree = doc["algebraic"]["verdict"] != doc["geometric"]["verdict"];
        doc["agreement"] = !disagree;
    }
    emit(opts, to_output_string(doc));
    if (disagree) throw VerificationFailure("classify: the two paths disagree");
    return 0;
}

int cmd_verify_tree(const GlobalOptions& opts, const std::string& tree_path, bool tournament) {
    QueryTree tree = load_tree(opts, tree_path, tournament);
    SolveReport report = verify_solves(tree);
    emit(opts, to_output_string(solve_report_to_json(report)));
    if (!report.solved) {
        throw VerificationFailure("verify-tree: " + std::to_string(report.failures.size()) +
                                  " cell(s) failed certification");
    }
    return 0;
}

int cmd_census(const GlobalOptions& opts, const std::string& query_path,
               const std::string& stream_path) {
    const RilcopSpec& spec = spec_by_name(opts.problem);
    Query query = query_from_json(Json::parse(read_text_file(query_path)));
    HalfSpaceStream stream = load_stream(stream_path);
    // the worker count stays out of the echo so reports are byte-identical
    // for any --jobs value
    ReportMeta meta{opts.seed,
                    "census --problem " + opts.problem + " --n " + std::to_string(opts.n)};
    CensusReport report =
        splinter_census(spec, opts.n, stream, query, opts.jobs, meta, census_cap(opts));
    if (opts.format == "csv") {
        std::string cert_file;
        if (!opts.out.empty()) {
            cert_file = opts.out + ".certs.json";
            write_text_file(cert_file, to_output_string(census_report_to_json(report)));
        }
        emit(opts, census_report_csv(report, cert_file));
    } else {
        emit(opts, to_output_string(census_report_to_json(report)));
    }
    return 0;
}

int cmd_probe(const GlobalOptions& opts, std::size_t stream_length, const std::string& strategy,
              std::size_t trials) {
    const RilcopSpec& spec = spec_by_name(opts.problem);
    ProbeReport report = conjecture_probe(spec, opts.n, stream_length,
                                          strategy_from_name(strategy), trials, opts.seed,
                                          opts.jobs, census_cap(opts));
    emit(opts, to_output_string(probe_report_to_json(report)));
    return 0;
}

int cmd_coverage(const GlobalOptions& opts, const std::string& tree_path, bool tournament,
                 std::size_t samples) {
    QueryTree tree = load_tree(opts, tree_path, tournament);
    CoverageReport report = face_scrape_coverage(tree, samples, opts.seed);
    if (opts.format == "csv") {
        emit(opts, coverage_report_csv(report));
    } else {
        emit(opts, to_output_string(coverage_report_to_json(report)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry lab for solution-set cones of linear"
                 " combinatorial optimization problems"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--problem", opts.problem, "problem family")
        ->check(CLI::IsMember({"tsp", "ap"}));
    app.add_option("--n", opts.n, "size parameter")->check(CLI::PositiveNumber);
    app.add_option("--seed", opts.seed, "seed for all randomized steps");
    app.add_option("--out", opts.out, "output path (default: stdout)");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", opts.cache_dir,
                   "cache directory (SPLINTERLAB_CACHE overrides)");
    app.add_option("--jobs", opts.jobs, "parallel workers")->check(CLI::PositiveNumber);
    app.add_flag("--no-cache", opts.no_cache,
                 "recompute and audit the cache instead of reading it");
    app.add_flag("--unsafe-large", opts.unsafe_large, "lift the desk-scale size caps");

    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "emit instance, witness, or tree files");
    {
        auto kind = std::make_shared<std::string>("random");
        auto count = std::make_shared<std::size_t>(1);
        auto s_prime = std::make_shared<std::uint64_t>(1);
        gen->add_option("--kind", *kind, "random | interior | face | tournament-tree")
            ->check(CLI::IsMember({"random", "interior", "face", "tournament-tree"}));
        gen->add_option("--count", *count, "number of random instances");
        gen->add_option("--sprime", *s_prime, "tied solution index for --kind face");
        gen->callback([&, kind, count, s_prime] {
            action = [&, kind, count, s_prime] { return cmd_gen(opts, *kind, *count, *s_prime); };
        });
    }

    auto* faces = app.add_subcommand("faces", "facet structure of every solution cone");
    faces->callback([&] {
        action = [&] { return cmd_faces(opts); };
    });

    auto* classify = app.add_subcommand("classify", "classify a query against a solution cone");
    {
        auto query_path = std::make_shared<std::string>();
        auto set_index = std::make_shared<std::uint64_t>(0);
        auto path_choice = std::make_shared<std::string>("both");
        classify->add_option("--query", *query_path, "query document")->required();
        classify->add_option("--set", *set_index, "solution index of the target cone");
        classify->add_option("--path", *path_choice, "algebraic | geometric | both")
            ->check(CLI::IsMember({"algebraic", "geometric", "both"}));
        classify->callback([&, query_path, set_index, path_choice] {
            action = [&, query_path, set_index, path_choice] {
                return cmd_classify(opts, *query_path, *set_index, *path_choice);
            };
        });
    }

    auto* verify = app.add_subcommand("verify-tree", "certify every cell of a query tree");
    {
        auto tree_path = std::make_shared<std::string>();
        auto tournament = std::make_shared<bool>(false);
        verify->add_option("--tree", *tree_path, "tree document");
        verify->add_flag("--tournament", *tournament, "use the built-in tournament tree");
        verify->callback([&, tree_path, tournament] {
            action = [&, tree_path, tournament] {
                return cmd_verify_tree(opts, *tree_path, *tournament);
            };
        });
    }

    auto* census = app.add_subcommand("census", "splinter census of a fresh query");
    {
        auto query_path = std::make_shared<std::string>();
        auto stream_path = std::make_shared<std::string>();
        census->add_option("--query", *query_path, "query document")->required();
        census->add_option("--stream", *stream_path, "half-space stream document");
        census->callback([&, query_path, stream_path] {
            action = [&, query_path, stream_path] {
                return cmd_census(opts, *query_path, *stream_path);
            };
        });
    }

    auto* probe = app.add_subcommand("probe", "search queries that splinter few sets");
    {
        auto stream_length = std::make_shared<std::size_t>(0);
        auto strategy = std::make_shared<std::string>("random-balanced");
        auto trials = std::make_shared<std::size_t>(16);
        probe->add_option("--length,-p", *stream_length, "stream length per trial");
        probe->add_option("--strategy", *strategy,
                          "random-balanced | facet-combination | coordinate-difference");
        probe->add_option("--trials", *trials, "number of trials");
        probe->callback([&, stream_length, strategy, trials] {
            action = [&, stream_length, strategy, trials] {
                return cmd_probe(opts, *stream_length, *strategy, *trials);
            };
        });
    }

    auto* coverage = app.add_subcommand("coverage", "sampled face-scrape coverage of a tree");
    {
        auto tree_path = std::make_shared<std::string>();
        auto tournament = std::make_shared<bool>(false);
        auto samples = std::make_shared<std::size_t>(100);
        coverage->add_option("--tree", *tree_path, "tree document");
        coverage->add_flag("--tournament", *tournament, "use the built-in tournament tree");
        coverage->add_option("--samples", *samples, "samples per facet");
        coverage->callback([&, tree_path, tournament, samples] {
            action = [&, tree_path, tournament, samples] {
                return cmd_coverage(opts, *tree_path, *tournament, *samples);
            };
        });
    }

    try {
        app.parse(argc, argv);
        return action ? action() : 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal assertion failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
