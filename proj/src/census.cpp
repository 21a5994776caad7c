#include "splinterlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "splinterlab/errors.hpp"
#include "splinterlab/feasibility.hpp"
#include "splinterlab/linalg.hpp"
#include "splinterlab/rng.hpp"

namespace splinterlab {

namespace {

/// Run fn(i) for i in [0, count) on up to `jobs` threads; exceptions are
/// rethrown and results land at their index, so output order does not
/// depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::vector<RatVec> stream_halfspaces(const HalfSpaceStream& stream) {
    std::vector<RatVec> out;
    out.reserve(stream.length());
    for (std::size_t i = 0; i < stream.length(); ++i) {
        out.push_back(stream.signs[i] > 0 ? stream.queries[i].vector
                                          : negated(stream.queries[i].vector));
    }
    return out;
}

}  // namespace

HalfSpaceStream make_stream(std::vector<Query> queries, std::vector<int> signs) {
    if (queries.size() != signs.size()) {
        throw DimensionError("make_stream: one sign per query required");
    }
    for (std::size_t i = 0; i < queries.size(); ++i) {
        if (is_zero_vector(queries[i].vector)) {
            throw ValueError("make_stream: stream query " + std::to_string(i) + " is zero");
        }
        if (!queries.empty() && queries[i].vector.size() != queries[0].vector.size()) {
            throw DimensionError("make_stream: stream queries of unequal dimension");
        }
        if (signs[i] != +1 && signs[i] != -1) {
            throw ValueError("make_stream: signs must be +1 or -1");
        }
    }
    return HalfSpaceStream{std::move(queries), std::move(signs)};
}

std::vector<RestrictedSet> restricted_solution_sets(const RilcopSpec& spec, int n,
                                                    const HalfSpaceStream& stream) {
    const int dim = spec.dimension(n);
    for (const auto& q : stream.queries) {
        if (static_cast<int>(q.vector.size()) != dim) {
            throw DimensionError("restricted_solution_sets: stream dimension mismatch");
        }
    }
    const std::vector<RatVec> halves = stream_halfspaces(stream);
    const std::uint64_t count = spec.solution_count(n);
    std::vector<RestrictedSet> out;
    out.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        ConePolyhedron restricted = intersect(solution_set(spec, n, s), halves);
        InteriorPoint interior = is_fully_dimensional(restricted);
        out.push_back(RestrictedSet{s, std::move(restricted), interior.full_dimensional,
                                    std::move(interior.witness)});
    }
    return out;
}

bool census_bookkeeping_holds(const CensusReport& r) {
    if (r.spl_count + r.scp_count + r.rsp_count != r.e_before) return false;
    if (r.one_sided_plus + r.one_sided_minus != r.scp_count + r.rsp_count) return false;
    if (r.e_after_plus != r.spl_count + r.one_sided_plus) return false;
    if (r.e_after_minus != r.spl_count + r.one_sided_minus) return false;
    if (r.e_after_plus != r.e_before - r.one_sided_minus) return false;
    if (r.e_after_minus != r.e_before - r.one_sided_plus) return false;
    if (r.dropped + r.e_before != r.solution_count) return false;
    return true;
}

CensusReport splinter_census(const RilcopSpec& spec, int n, const HalfSpaceStream& stream,
                             const Query& query, int jobs, const ReportMeta& meta,
                             std::uint64_t census_cap) {
    const int dim = spec.dimension(n);
    const std::uint64_t count = spec.solution_count(n);
    if (count > census_cap) {
        throw SizeCapError("splinter_census: " + std::to_string(count) +
                           " solution sets exceed the census cap of " +
                           std::to_string(census_cap));
    }
    if (static_cast<int>(query.vector.size()) != dim) {
        throw DimensionError("splinter_census: query dimension mismatch");
    }
    if (is_zero_vector(query.vector)) throw ValueError("splinter_census: zero query");
    for (std::size_t i = 0; i < stream.length(); ++i) {
        if (proportionality_factor(query.vector, stream.queries[i].vector)) {
            throw ProportionalQueryError(
                "splinter_census: query is proportional to stream query " + std::to_string(i), i);
        }
    }

    CensusReport report;
    report.problem = spec.name();
    report.n = n;
    report.stream_length = stream.length();
    report.query_id = query.id;
    report.solution_count = count;
    report.seed = meta.seed;
    report.config = meta.config;

    std::vector<RestrictedSet> sets = restricted_solution_sets(spec, n, stream);
    std::vector<const RestrictedSet*> survivors;
    for (const auto& set : sets) {
        if (set.full_dimensional) survivors.push_back(&set);
    }
    report.e_before = survivors.size();
    report.dropped = sets.size() - survivors.size();

    std::vector<SetVerdict> verdicts(survivors.size());
    parallel_for(survivors.size(), jobs, [&](std::size_t i) {
        const RestrictedSet& set = *survivors[i];
        FaceStructure faces = facet_normals(set.polyhedron);
        QueryClassification cls = classify_algebraic(query, faces);
        SetVerdict v;
        v.s = set.s;
        v.verdict = cls.verdict;
        switch (cls.verdict) {
            case Verdict::spL:
                v.side = 0;
                break;
            case Verdict::sCp:
                v.side = *cls.scale > 0 ? +1 : -1;
                break;
            case Verdict::Rsp:
                if (cls.orientation == QueryClassification::Orientation::Both) {
                    throw InternalError("splinter_census: lineality orientation on a"
                                        " fully-dimensional set");
                }
                v.side = cls.orientation == QueryClassification::Orientation::Plus ? +1 : -1;
                break;
        }
        v.classification = std::move(cls);
        verdicts[i] = std::move(v);
    });

    for (const auto& v : verdicts) {
        switch (v.verdict) {
            case Verdict::spL: ++report.spl_count; break;
            case Verdict::sCp: ++report.scp_count; break;
            case Verdict::Rsp: ++report.rsp_count; break;
        }
        if (v.side > 0) ++report.one_sided_plus;
        if (v.side < 0) ++report.one_sided_minus;
    }
    report.e_after_plus = report.spl_count + report.one_sided_plus;
    report.e_after_minus = report.spl_count + report.one_sided_minus;
    report.verdicts = std::move(verdicts);

    if (!census_bookkeeping_holds(report)) {
        throw InternalError("splinter_census: bookkeeping identity failed");
    }
    return report;
}

std::string strategy_name(ProbeStrategy s) {
    switch (s) {
        case ProbeStrategy::RandomBalanced: return "random-balanced";
        case ProbeStrategy::FacetCombination: return "facet-combination";
        case ProbeStrategy::CoordinateDifference: return "coordinate-difference";
    }
    return "random-balanced";
}

ProbeStrategy strategy_from_name(const std::string& name) {
    if (name == "random-balanced") return ProbeStrategy::RandomBalanced;
    if (name == "facet-combination") return ProbeStrategy::FacetCombination;
    if (name == "coordinate-difference") return ProbeStrategy::CoordinateDifference;
    throw ValueError("unknown probe strategy '" + name + "'");
}

ProbeReport conjecture_probe(const RilcopSpec& spec, int n, std::size_t stream_length,
                             ProbeStrategy strategy, std::size_t trials, std::uint64_t seed,
                             int jobs, std::uint64_t census_cap) {
    if (trials < 1) throw RangeError("conjecture_probe: trials must be >= 1");
    const std::size_t dim = static_cast<std::size_t>(spec.dimension(n));
    const std::uint64_t count = spec.solution_count(n);
    if (count > census_cap) {
        throw SizeCapError("conjecture_probe: solution count exceeds the census cap");
    }

    ProbeReport report;
    report.problem = spec.name();
    report.n = n;
    report.stream_length = stream_length;
    report.strategy = strategy;
    report.trials_requested = trials;
    report.seed = seed;

    std::size_t actual_trials = trials;
    if (strategy == ProbeStrategy::CoordinateDifference) {
        actual_trials = std::min(trials, dim * (dim - 1) / 2);
    }

    // Facets of the unrestricted solution cones, shared by the
    // facet-combination trials.
    std::vector<FaceStructure> base_faces;
    if (strategy == ProbeStrategy::FacetCombination) {
        base_faces.reserve(count);
        for (std::uint64_t s = 0; s < count; ++s) {
            base_faces.push_back(facet_normals(solution_set(spec, n, s)));
        }
    }

    std::size_t best = actual_trials;  // sentinel: none yet
    std::optional<CensusReport> best_census;
    HalfSpaceStream best_stream;
    Query best_query;

    for (std::size_t t = 0; t < actual_trials; ++t) {
        SeededRng rng(mix_seed(seed, t));

        std::vector<Query> stream_queries;
        std::vector<int> stream_signs;
        for (std::size_t j = 0; j < stream_length; ++j) {
            stream_queries.push_back(
                make_query(rng.random_balanced_vector(dim, 9, 4),
                           "stream" + std::to_string(j)));
            stream_signs.push_back(rng.uniform_sign());
        }
        HalfSpaceStream stream = make_stream(std::move(stream_queries), std::move(stream_signs));

        ProbeTrial trial;
        trial.trial = t;

        Query candidate;
        switch (strategy) {
            case ProbeStrategy::RandomBalanced: {
                candidate = make_query(rng.random_balanced_vector(dim, 9, 4),
                                       "trial" + std::to_string(t));
                trial.query_desc = "random-balanced";
                break;
            }
            case ProbeStrategy::FacetCombination: {
                const std::uint64_t s = rng.uniform_u64(count);
                const auto facets = base_faces[static_cast<std::size_t>(s)].facet_vectors();
                if (facets.size() < 2) {
                    throw RangeError("conjecture_probe: facet-combination needs a set with"
                                     " at least two facets");
                }
                const std::size_t a = static_cast<std::size_t>(rng.uniform_u64(facets.size()));
                std::size_t b = static_cast<std::size_t>(rng.uniform_u64(facets.size() - 1));
                if (b >= a) ++b;
                candidate = make_query(add(facets[a], facets[b]), "trial" + std::to_string(t));
                trial.target_set = s;
                trial.query_desc = "facets " + std::to_string(a) + "+" + std::to_string(b) +
                                   " of set " + std::to_string(s);
                break;
            }
            case ProbeStrategy::CoordinateDifference: {
                // lexicographic pair (a, b), a < b, at position t
                std::size_t a = 0;
                std::size_t offset = t;
                std::size_t row = dim - 1;
                while (offset >= row) {
                    offset -= row;
                    ++a;
                    --row;
                }
                const std::size_t b = a + 1 + offset;
                RatVec v(dim, Rational(0));
                v[a] = 1;
                v[b] = -1;
                candidate = make_query(std::move(v), "trial" + std::to_string(t));
                trial.query_desc =
                    "e" + std::to_string(a) + "-e" + std::to_string(b);
                break;
            }
        }

        bool proportional = false;
        for (const auto& past : stream.queries) {
            if (proportionality_factor(candidate.vector, past.vector)) {
                proportional = true;
                break;
            }
        }
        if (proportional) {
            trial.skipped = true;
            report.trials.push_back(std::move(trial));
            continue;
        }

        ReportMeta meta;
        meta.seed = seed;
        meta.config = "probe trial " + std::to_string(t) + " strategy " + strategy_name(strategy);
        CensusReport census = splinter_census(spec, n, stream, candidate, jobs, meta, census_cap);
        trial.spl_count = census.spl_count;
        trial.scp_count = census.scp_count;
        trial.rsp_count = census.rsp_count;
        trial.e_before = census.e_before;
        if (trial.target_set) {
            for (const auto& v : census.verdicts) {
                if (v.s == *trial.target_set) {
                    trial.target_verdict = v.verdict;
                    break;
                }
            }
        }
        report.trials.push_back(trial);

        if (best == actual_trials || census.spl_count < best_census->spl_count) {
            best = t;
            best_census = std::move(census);
            best_stream = stream;
            best_query = candidate;
        }
    }

    if (best != actual_trials) {
        report.best_trial = best;
        report.best_census = std::move(best_census);
        report.best_stream = std::move(best_stream);
        report.best_query = std::move(best_query);
    }
    return report;
}

}  // namespace splinterlab
