#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "splinterlab/polyhedra.hpp"
#include "splinterlab/rational.hpp"
#include "splinterlab/rilcop.hpp"

namespace splinterlab {

/// Paths are strings over '+'/'-'; the root is "". The parent drops the
/// last character, the sibling flips it.
bool is_valid_path(const std::string& path);

/// Closed under parent and sibling for every member of length >= 1.
bool validate_tree_like(const std::set<std::string>& collection);

/// Members with no children present. Repeated parent steps from the
/// leaves regenerate the collection.
std::set<std::string> leaf_subcollection(const std::set<std::string>& collection);

inline constexpr std::size_t kTreeMaterializeCap = std::size_t(1) << 20;
inline constexpr std::size_t kCellEnumerationCap = std::size_t(1) << 21;

/// A comparison tree: every node path carries a query, every leaf path
/// carries a solution label per final answer sign. Small trees hold
/// explicit maps; large tournament trees generate nodes on demand as a
/// pure function of the path.
class QueryTree {
public:
    QueryTree(RilcopSpec spec, int n, std::map<std::string, RatVec> node_queries,
              std::map<std::string, std::uint64_t> leaf_labels);

    static QueryTree tournament(const RilcopSpec& spec, int n,
                                std::size_t materialize_cap = kTreeMaterializeCap);

    const RilcopSpec& spec() const { return spec_; }
    int n() const { return n_; }
    bool lazy() const { return backing_ == Backing::Tournament; }
    bool empty() const;

    bool contains(const std::string& path) const;
    bool is_leaf(const std::string& path) const;
    RatVec query_at(const std::string& path) const;

    bool has_leaf_label(const std::string& leaf, int final_sign) const;
    std::uint64_t leaf_label(const std::string& leaf, int final_sign) const;

    std::size_t node_count() const;
    std::size_t leaf_count() const;
    std::size_t max_depth() const;  // longest path length; cells use one more query

    /// All node paths (explicit trees only; lazy trees over the cap refuse).
    std::vector<std::string> node_paths(std::size_t cap = kCellEnumerationCap) const;
    std::vector<std::string> leaf_paths(std::size_t cap = kCellEnumerationCap) const;

    const std::map<std::string, RatVec>& explicit_nodes() const;
    const std::map<std::string, std::uint64_t>& explicit_leaf_labels() const;

private:
    QueryTree(RilcopSpec spec, int n);

    enum class Backing { Explicit, Tournament };
    RilcopSpec spec_;
    int n_;
    Backing backing_ = Backing::Explicit;
    std::map<std::string, RatVec> nodes_;
    std::map<std::string, std::uint64_t> leaf_labels_;  // key: leaf path + sign char
    std::size_t tournament_leaf_len_ = 0;
};

/// The closed cell of instances whose answers follow `leaf` and finish
/// with `final_sign`, as a cone over the path's signed queries.
ConePolyhedron leaf_polyhedron(const QueryTree& tree, const std::string& leaf, int final_sign);

struct TreeRunResult {
    std::string leaf;
    int final_sign = +1;
    std::uint64_t solution = 0;
};

/// Descend from the root answering each comparison exactly; ties
/// (q.c = 0) answer +1.
TreeRunResult run_tree(const QueryTree& tree, const Instance& instance);

struct LeafCertificate {
    std::string leaf;
    int final_sign = +1;
    std::uint64_t solution = 0;
    /// For each competing solution s', nonnegative multipliers over the
    /// cell's signed query sequence reconstructing x(n,s) - x(n,s').
    std::vector<std::pair<std::uint64_t, RatVec>> multipliers;
};

struct LeafCheck {
    bool certified = false;
    LeafCertificate certificate;      // set when certified
    std::uint64_t failing_solution = 0;
    RatVec counterexample;            // inside the cell, beats the label
    bool counterexample_retraces = false;
};

LeafCheck verify_leaf_containment(const QueryTree& tree, const std::string& leaf, int final_sign);

struct CellStatus {
    std::string leaf;
    int final_sign = +1;
    bool labeled = false;
    bool certified = false;
    std::uint64_t label = 0;
    std::uint64_t failing_solution = 0;
    RatVec counterexample;
};

struct SolveReport {
    bool solved = false;
    std::size_t cells_total = 0;
    std::size_t cells_certified = 0;
    std::vector<CellStatus> failures;
    std::size_t node_count = 0;
    std::size_t leaf_count = 0;
    std::size_t max_depth = 0;
    std::vector<LeafCertificate> certificates;
};

/// Certify every (leaf, sign) cell against some solution cone. Failures
/// are report content, not errors.
SolveReport verify_solves(const QueryTree& tree, std::size_t cell_cap = kCellEnumerationCap);

/// Champion tournament over all solutions: node at depth j compares the
/// surviving champion with challenger j+1 via their difference query.
QueryTree build_tournament_tree(const RilcopSpec& spec, int n);

struct FacetCoverage {
    std::uint64_t set_index = 0;
    NormalLabel facet;
    std::size_t samples = 0;
    std::size_t covered = 0;
};

struct CoverageReport {
    std::size_t samples_per_facet = 0;
    std::uint64_t seed = 0;
    std::vector<FacetCoverage> facets;
};

/// Sampled evidence for face scraping: draw points on each facet of each
/// solution cone and test membership in some node's query-plane face.
CoverageReport face_scrape_coverage(const QueryTree& tree, std::size_t samples,
                                    std::uint64_t seed);

}  // namespace splinterlab
