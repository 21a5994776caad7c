// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. Expected total runtime is a few minutes on a desktop.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "splinterlab/census.hpp"
#include "splinterlab/classify.hpp"
#include "splinterlab/feasibility.hpp"
#include "splinterlab/io.hpp"
#include "splinterlab/linalg.hpp"
#include "splinterlab/polyhedra.hpp"
#include "splinterlab/query_tree.hpp"
#include "splinterlab/rilcop.hpp"
#include "splinterlab/rng.hpp"
#include "../support/fm_oracle.hpp"

using namespace splinterlab;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// facet structures shared across criteria, computed once
std::map<std::pair<int, std::uint64_t>, FaceStructure>& face_cache() {
    static std::map<std::pair<int, std::uint64_t>, FaceStructure> cache;
    return cache;
}

const FaceStructure& faces_of(int n, std::uint64_t s) {
    auto key = std::make_pair(n, s);
    auto it = face_cache().find(key);
    if (it == face_cache().end()) {
        it = face_cache().emplace(key, facet_normals(solution_set(tsp_spec(), n, s))).first;
    }
    return it->second;
}

bool full_dimensionality(std::string& detail) {
    std::size_t witnesses = 0;
    for (int n : {3, 4}) {
        for (std::uint64_t s = 0; s < factorial(n); ++s) {
            ConePolyhedron cone = solution_set(tsp_spec(), n, s);
            InteriorPoint interior = is_fully_dimensional(cone);
            if (!interior.full_dimensional) {
                detail = "set " + std::to_string(s) + " at n=" + std::to_string(n) +
                         " has no interior witness";
                return false;
            }
            for (const auto& f : cone.normals()) {
                if (!(dot(f, interior.witness) < 0)) {
                    detail = "witness not strict on every inequality";
                    return false;
                }
            }
            ++witnesses;
        }
    }
    detail = std::to_string(witnesses) + " strict interior witnesses (6 at n=3, 24 at n=4)";
    return witnesses == 30;
}

bool facet_completeness(std::string& detail) {
    std::size_t certified = 0;
    for (int n : {3, 4}) {
        for (std::uint64_t s = 0; s < factorial(n); ++s) {
            const FaceStructure& faces = faces_of(n, s);
            for (std::size_t i = 0; i < faces.polyhedron.size(); ++i) {
                if (!faces.facet_flags[i] || !faces.witnesses[i] ||
                    !facet_witness_valid(faces.polyhedron, i, *faces.witnesses[i])) {
                    detail = "normal " + std::to_string(i) + " of set " + std::to_string(s) +
                             " at n=" + std::to_string(n) + " is not a certified facet";
                    return false;
                }
                ++certified;
            }
        }
        // the tied-tour instances are themselves valid facet witnesses
        ConePolyhedron cone0 = solution_set(tsp_spec(), n, 0);
        for (std::uint64_t sp = 1; sp < factorial(n); ++sp) {
            if (!facet_witness_valid(cone0, static_cast<std::size_t>(sp - 1),
                                     prop2_face_witness(n, sp).costs)) {
                detail = "tied-tour witness rejected for pair (0," + std::to_string(sp) +
                         ") at n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = std::to_string(certified) + " facets certified (30 at n=3, 552 at n=4)";
    return certified == 30 + 552;
}

bool balancedness(std::string& detail) {
    std::size_t checked = 0;
    for (const RilcopSpec* spec : {&tsp_spec(), &ap_spec()}) {
        for (int n = 2; n <= 5; ++n) {
            const std::uint64_t count = factorial(n);
            std::vector<RatVec> vectors;
            vectors.reserve(count);
            for (std::uint64_t s = 0; s < count; ++s) {
                vectors.push_back(spec->solution_vector(n, s));
            }
            for (std::uint64_t s = 0; s < count; ++s) {
                for (std::uint64_t sp = 0; sp < count; ++sp) {
                    if (s == sp) continue;
                    const RatVec d = sub(vectors[s], vectors[sp]);
                    std::size_t plus = 0, minus = 0;
                    for (const auto& x : d) {
                        if (x == 1) ++plus;
                        else if (x == -1) ++minus;
                        else if (x != 0) {
                            detail = "difference entry outside {-1,0,1}";
                            return false;
                        }
                    }
                    if (plus != minus || component_sum(d) != 0) {
                        detail = spec->name() + " difference (" + std::to_string(s) + "," +
                                 std::to_string(sp) + ") at n=" + std::to_string(n) +
                                 " is unbalanced";
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " difference vectors balanced (both problems, n <= 5)";
    return true;
}

bool prop1_sweep(std::string& detail) {
    SeededRng rng(20260810);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = trial % 2 == 0 ? 3 : 4;
        const std::uint64_t s = rng.uniform_u64(factorial(n));
        Query q = make_query(
            rng.random_unbalanced_vector(static_cast<std::size_t>(tsp_spec().dimension(n)), 9, 4),
            "sweep" + std::to_string(trial));
        const FaceStructure& faces = faces_of(n, s);
        if (classify_algebraic(q, faces).verdict != Verdict::spL) {
            detail = "algebraic path violation at trial " + std::to_string(trial);
            return false;
        }
        if (classify_geometric(q, faces.polyhedron, faces).verdict != Verdict::spL) {
            detail = "geometric path violation at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "1000 seeded unbalanced queries vs balanced cones at n=3,4: all spL on both paths";
    return true;
}

bool trichotomy_agreement(std::string& detail) {
    std::size_t pairs = 0;
    for (std::uint64_t s = 0; s < 6; ++s) {
        for (std::uint64_t sp = 0; sp < 6; ++sp) {
            if (s == sp) continue;
            Query q = make_query(difference_query(tsp_spec(), 3, s, sp));
            for (std::uint64_t target = 0; target < 6; ++target) {
                const FaceStructure& faces = faces_of(3, target);
                QueryClassification a = classify_algebraic(q, faces);
                QueryClassification g = classify_geometric(q, faces.polyhedron, faces);
                if (a.verdict != g.verdict || !classification_valid(q, faces, a) ||
                    !classification_valid(q, faces, g)) {
                    detail = "disagreement on difference pair (" + std::to_string(s) + "," +
                             std::to_string(sp) + ") vs set " + std::to_string(target);
                    return false;
                }
                ++pairs;
            }
        }
    }
    SeededRng rng(424242);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t s = rng.uniform_u64(24);
        Query q = make_query(rng.random_balanced_vector(20, 9, 4), "n4-" + std::to_string(trial));
        const FaceStructure& faces = faces_of(4, s);
        QueryClassification a = classify_algebraic(q, faces);
        QueryClassification g = classify_geometric(q, faces.polyhedron, faces);
        if (a.verdict != g.verdict) {
            detail = "disagreement at n=4 trial " + std::to_string(trial);
            return false;
        }
        ++pairs;
    }
    detail = std::to_string(pairs) + " pairs agree (180 exhaustive at n=3, 500 seeded at n=4)";
    return pairs == 180 + 500;
}

bool eq7_certification(std::string& detail) {
    QueryTree tree = build_tournament_tree(tsp_spec(), 3);
    SolveReport report = verify_solves(tree);
    if (!report.solved || report.cells_certified != 32) {
        detail = "tournament tree failed certification: " +
                 std::to_string(report.cells_certified) + "/32 cells";
        return false;
    }
    // every certificate recomputes to an exact vector identity
    for (const auto& cert : report.certificates) {
        std::vector<RatVec> normals;
        for (std::size_t j = 0; j < cert.leaf.size(); ++j) {
            RatVec q = tree.query_at(cert.leaf.substr(0, j));
            normals.push_back(cert.leaf[j] == '+' ? q : negated(q));
        }
        RatVec q = tree.query_at(cert.leaf);
        normals.push_back(cert.final_sign > 0 ? q : negated(q));
        for (const auto& [sp, lambda] : cert.multipliers) {
            if (!membership_certificate_valid(
                    difference_query(tsp_spec(), 3, cert.solution, sp), normals, lambda)) {
                detail = "certificate for leaf " + cert.leaf + " does not recompute";
                return false;
            }
        }
    }
    SeededRng rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        Instance inst = random_instance(tsp_spec(), 3, rng);
        const std::uint64_t solution = run_tree(tree, inst).solution;
        const auto optima = brute_force_optima(inst);
        if (std::find(optima.begin(), optima.end(), solution) == optima.end()) {
            detail = "certified tree contradicted brute force at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "32/32 cells carry exact certificates; 1000 seeded runs match brute force";
    return true;
}

bool perturbation_robustness(std::string& detail) {
    std::size_t trials_done = 0;
    for (int n : {3, 4}) {
        ConePolyhedron cone = solution_set(tsp_spec(), n, 0);
        const Rational bound(1, 2 * n + 2);
        SeededRng rng(1000 + n);
        for (std::uint64_t sp = 1; sp < factorial(n); ++sp) {
            const RatVec base = prop2_face_witness(n, sp).costs;
            const RatVec& normal = cone.normals()[static_cast<std::size_t>(sp - 1)];
            const Rational normal_sq = dot(normal, normal);
            for (int trial = 0; trial < 100; ++trial) {
                RatVec delta(base.size());
                for (auto& x : delta) x = rng.uniform_rational(100, 100) * bound / 100;
                // keep the facet equality, then rescale into the bound
                delta = sub(delta, scaled(normal, dot(normal, delta) / normal_sq));
                Rational max_abs = 0;
                for (const auto& x : delta) {
                    if (abs(x) > max_abs) max_abs = abs(x);
                }
                if (max_abs > bound) delta = scaled(delta, bound / max_abs);
                const RatVec perturbed = add(base, delta);
                if (dot(normal, perturbed) != 0) {
                    detail = "perturbation broke the facet equality";
                    return false;
                }
                for (std::size_t j = 0; j < cone.size(); ++j) {
                    if (j == static_cast<std::size_t>(sp - 1)) continue;
                    if (!(dot(cone.normals()[j], perturbed) < 0)) {
                        detail = "inequality " + std::to_string(j) + " lost strictness at n=" +
                                 std::to_string(n) + ", pair (0," + std::to_string(sp) + ")";
                        return false;
                    }
                }
                ++trials_done;
            }
        }
    }
    detail = std::to_string(trials_done) + " equality-preserving perturbations kept all other"
             " inequalities strict (100 per facet, n=3,4)";
    return trials_done == 100 * (5 + 23);
}

bool census_reproducibility(std::string& detail) {
    Query q = make_query(
        sub(tsp_solution_vector(3, 0), tsp_solution_vector(3, 2)), "census-query");
    ReportMeta meta{2026, "acceptance census"};
    std::string census_bytes;
    for (int rep = 0; rep < 3; ++rep) {
        for (int jobs : {1, 4}) {
            CensusReport report = splinter_census(tsp_spec(), 3, {}, q, jobs, meta);
            if (!census_bookkeeping_holds(report)) {
                detail = "bookkeeping identity failed";
                return false;
            }
            std::string text = to_output_string(census_report_to_json(report));
            if (census_bytes.empty()) census_bytes = text;
            if (text != census_bytes) {
                detail = "census bytes changed across repetition/jobs";
                return false;
            }
        }
    }
    std::string probe_bytes;
    for (int rep = 0; rep < 3; ++rep) {
        for (int jobs : {1, 4}) {
            ProbeReport probe = conjecture_probe(tsp_spec(), 3, 1,
                                                 ProbeStrategy::RandomBalanced, 8, 2026, jobs);
            std::string text = to_output_string(probe_report_to_json(probe));
            if (probe_bytes.empty()) probe_bytes = text;
            if (text != probe_bytes) {
                detail = "probe bytes changed across repetition/jobs";
                return false;
            }
        }
    }
    detail = "census and probe bytes identical over 3 repetitions x jobs {1,4};"
             " bookkeeping holds";
    return true;
}

bool census_content(std::string& detail) {
    // independent facet normals straight from next_permutation tours
    const std::vector<RatVec> tours = testing::oracle_tsp_vectors(3);
    std::vector<std::vector<RatVec>> oracle_normals(6);
    for (std::size_t s = 0; s < 6; ++s) {
        for (std::size_t sp = 0; sp < 6; ++sp) {
            if (s == sp) continue;
            oracle_normals[s].push_back(sub(tours[s], tours[sp]));
        }
    }

    std::size_t entries = 0;
    for (std::size_t a = 0; a < 12; ++a) {
        for (std::size_t b = a + 1; b < 12; ++b) {
            RatVec v(12, Rational(0));
            v[a] = 1;
            v[b] = -1;
            Query q = make_query(std::move(v),
                                 "e" + std::to_string(a) + "-e" + std::to_string(b));
            CensusReport report = splinter_census(tsp_spec(), 3, {}, q);
            if (report.verdicts.size() != 6) {
                detail = "census did not report all six sets";
                return false;
            }
            for (const auto& verdict : report.verdicts) {
                const std::string expected = testing::fm_oracle_verdict(
                    oracle_normals[static_cast<std::size_t>(verdict.s)], q.vector);
                if (verdict_name(verdict.verdict) != expected) {
                    detail = "query " + q.id + " vs set " + std::to_string(verdict.s) +
                             ": census says " + verdict_name(verdict.verdict) +
                             ", oracle says " + expected;
                    return false;
                }
                ++entries;
            }
        }
    }
    detail = std::to_string(entries) +
             " verdicts match the elimination-based two-witness oracle (66 queries x 6 sets)";
    return entries == 66 * 6;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"full-dimensionality: strict interior witnesses at n=3 and n=4", full_dimensionality},
        {"facet completeness: every difference query a certified facet", facet_completeness},
        {"balancedness: zero-sum +-1 differences for n <= 5", balancedness},
        {"unbalanced-query sweep: spL on both paths, no violations", prop1_sweep},
        {"trichotomy: algebraic and geometric paths agree", trichotomy_agreement},
        {"leaf certification: tournament tree fully certified and oracle-consistent",
         eq7_certification},
        {"perturbation robustness: facet witnesses tolerate bounded noise",
         perturbation_robustness},
        {"census reproducibility: byte-identical reports, bookkeeping identity",
         census_reproducibility},
        {"census content: verdicts match the independent two-witness oracle", census_content},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("%s  %s  [%lldms]%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    static_cast<long long>(ms), detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
