#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splinterlab/classify.hpp"
#include "splinterlab/polyhedra.hpp"
#include "splinterlab/rilcop.hpp"

namespace splinterlab {

/// Past queries with one chosen side each: sign +1 keeps {q.c <= 0},
/// sign -1 keeps {q.c >= 0}.
struct HalfSpaceStream {
    std::vector<Query> queries;
    std::vector<int> signs;

    std::size_t length() const { return queries.size(); }
};

HalfSpaceStream make_stream(std::vector<Query> queries, std::vector<int> signs);

struct RestrictedSet {
    std::uint64_t s = 0;
    ConePolyhedron polyhedron;
    bool full_dimensional = false;
    RatVec interior_witness;  // set when full_dimensional
};

/// Intersect every solution cone with the stream's chosen half-spaces
/// and mark full-dimensionality exactly.
std::vector<RestrictedSet> restricted_solution_sets(const RilcopSpec& spec, int n,
                                                    const HalfSpaceStream& stream);

struct SetVerdict {
    std::uint64_t s = 0;
    Verdict verdict = Verdict::spL;
    int side = 0;  // +1 / -1 for one-sided sets, 0 for spL
    QueryClassification classification;
};

struct CensusReport {
    std::string problem;
    int n = 0;
    std::size_t stream_length = 0;
    std::string query_id;

    std::uint64_t solution_count = 0;
    std::size_t e_before = 0;  // fully-dimensional restricted sets
    std::size_t dropped = 0;   // sets the stream made lower-dimensional or empty

    std::size_t spl_count = 0;
    std::size_t scp_count = 0;
    std::size_t rsp_count = 0;
    std::size_t one_sided_plus = 0;
    std::size_t one_sided_minus = 0;
    std::size_t e_after_plus = 0;   // survivors when the +1 side is kept
    std::size_t e_after_minus = 0;  // survivors when the -1 side is kept

    std::vector<SetVerdict> verdicts;

    std::uint64_t seed = 0;
    std::string config;
};

/// The e/q bookkeeping that every report must satisfy:
/// counts partition e_before and each side's survivor count equals
/// e_before minus the one-sided sets left on the discarded side.
bool census_bookkeeping_holds(const CensusReport& report);

inline constexpr std::uint64_t kDefaultCensusCap = 120;  // 5!

struct ReportMeta {
    std::uint64_t seed = 0;
    std::string config;
};

/// Classify a fresh query against every surviving fully-dimensional
/// restricted set, with facets recomputed after the restriction. The
/// query must not be proportional to any stream query.
CensusReport splinter_census(const RilcopSpec& spec, int n, const HalfSpaceStream& stream,
                             const Query& query, int jobs = 1, const ReportMeta& meta = {},
                             std::uint64_t census_cap = kDefaultCensusCap);

enum class ProbeStrategy { RandomBalanced, FacetCombination, CoordinateDifference };

std::string strategy_name(ProbeStrategy s);
ProbeStrategy strategy_from_name(const std::string& name);

struct ProbeTrial {
    std::size_t trial = 0;
    bool skipped = false;  // candidate was proportional to a stream query
    std::string query_desc;
    std::optional<std::uint64_t> target_set;  // facet-combination source set
    std::optional<Verdict> target_verdict;    // that set's verdict, when it survived
    std::size_t spl_count = 0;
    std::size_t scp_count = 0;
    std::size_t rsp_count = 0;
    std::size_t e_before = 0;
};

struct ProbeReport {
    std::string problem;
    int n = 0;
    std::size_t stream_length = 0;
    ProbeStrategy strategy = ProbeStrategy::RandomBalanced;
    std::size_t trials_requested = 0;
    std::uint64_t seed = 0;

    std::vector<ProbeTrial> trials;
    std::optional<std::size_t> best_trial;  // minimizes the spL count
    std::optional<CensusReport> best_census;
    HalfSpaceStream best_stream;
    Query best_query;
};

/// Seeded stream-and-query generation with one census per trial; the
/// reported best trial is the one splintering the fewest sets.
ProbeReport conjecture_probe(const RilcopSpec& spec, int n, std::size_t stream_length,
                             ProbeStrategy strategy, std::size_t trials, std::uint64_t seed,
                             int jobs = 1, std::uint64_t census_cap = kDefaultCensusCap);

}  // namespace splinterlab
