#include "splinterlab/query_tree.hpp"

#include <algorithm>

#include "splinterlab/errors.hpp"
#include "splinterlab/feasibility.hpp"
#include "splinterlab/linalg.hpp"

namespace splinterlab {

namespace {

std::string leaf_key(const std::string& leaf, int final_sign) {
    return leaf + (final_sign > 0 ? '+' : '-');
}

int sign_of_char(char c) { return c == '+' ? +1 : -1; }

}  // namespace

bool is_valid_path(const std::string& path) {
    return std::all_of(path.begin(), path.end(), [](char c) { return c == '+' || c == '-'; });
}

bool validate_tree_like(const std::set<std::string>& collection) {
    for (const auto& b : collection) {
        if (!is_valid_path(b)) throw ValueError("tree path '" + b + "' has characters outside +-");
        if (b.empty()) continue;
        std::string parent = b.substr(0, b.size() - 1);
        std::string sibling = parent + (b.back() == '+' ? '-' : '+');
        if (!collection.count(parent) || !collection.count(sibling)) return false;
    }
    return true;
}

std::set<std::string> leaf_subcollection(const std::set<std::string>& collection) {
    if (!validate_tree_like(collection)) {
        throw ValueError("leaf_subcollection: collection is not tree-like");
    }
    std::set<std::string> leaves;
    for (const auto& b : collection) {
        if (!collection.count(b + '+') && !collection.count(b + '-')) leaves.insert(b);
    }
    return leaves;
}

QueryTree::QueryTree(RilcopSpec spec, int n) : spec_(std::move(spec)), n_(n) {}

QueryTree::QueryTree(RilcopSpec spec, int n, std::map<std::string, RatVec> node_queries,
                     std::map<std::string, std::uint64_t> leaf_labels)
    : spec_(std::move(spec)),
      n_(n),
      backing_(Backing::Explicit),
      nodes_(std::move(node_queries)),
      leaf_labels_(std::move(leaf_labels)) {
    const int dim = spec_.dimension(n_);
    std::set<std::string> paths;
    for (const auto& [path, query] : nodes_) {
        if (!is_valid_path(path)) throw ValueError("tree path '" + path + "' is malformed");
        if (static_cast<int>(query.size()) != dim) {
            throw DimensionError("tree node '" + path + "' has a query of wrong dimension");
        }
        if (is_zero_vector(query)) throw ValueError("tree node '" + path + "' has a zero query");
        paths.insert(path);
    }
    if (!validate_tree_like(paths)) throw ValueError("tree node paths are not tree-like");
    const std::uint64_t count = spec_.solution_count(n_);
    for (const auto& [key, label] : leaf_labels_) {
        if (key.empty() || !is_valid_path(key)) {
            throw ValueError("leaf key '" + key + "' is malformed");
        }
        std::string leaf = key.substr(0, key.size() - 1);
        if (!paths.count(leaf)) throw ValueError("leaf key '" + key + "' names a missing node");
        if (paths.count(leaf + '+') || paths.count(leaf + '-')) {
            throw ValueError("leaf key '" + key + "' names an internal node");
        }
        if (label >= count) {
            throw RangeError("leaf key '" + key + "' labels an out-of-range solution");
        }
    }
}

QueryTree QueryTree::tournament(const RilcopSpec& spec, int n, std::size_t materialize_cap) {
    const std::uint64_t count = spec.solution_count(n);
    if (count < 2) throw RangeError("tournament: need at least two solutions");
    const std::uint64_t comparisons = count - 1;  // one per challenger
    const std::uint64_t leaf_len = comparisons - 1;

    // Materialize when the whole collection fits the cap: 2^(leaf_len+1)-1 nodes.
    if (leaf_len + 1 < 63) {
        const std::uint64_t nodes = (std::uint64_t(1) << (leaf_len + 1)) - 1;
        if (nodes <= materialize_cap) {
            QueryTree lazy(spec, n);
            lazy.backing_ = Backing::Tournament;
            lazy.tournament_leaf_len_ = static_cast<std::size_t>(leaf_len);
            std::map<std::string, RatVec> node_queries;
            std::map<std::string, std::uint64_t> labels;
            std::vector<std::string> frontier{""};
            for (std::uint64_t depth = 0; depth <= leaf_len; ++depth) {
                std::vector<std::string> next;
                for (const auto& path : frontier) {
                    node_queries[path] = lazy.query_at(path);
                    if (depth == leaf_len) {
                        labels[leaf_key(path, +1)] = lazy.leaf_label(path, +1);
                        labels[leaf_key(path, -1)] = lazy.leaf_label(path, -1);
                    } else {
                        next.push_back(path + '+');
                        next.push_back(path + '-');
                    }
                }
                frontier = std::move(next);
            }
            return QueryTree(spec, n, std::move(node_queries), std::move(labels));
        }
    }
    QueryTree tree(spec, n);
    tree.backing_ = Backing::Tournament;
    tree.tournament_leaf_len_ = static_cast<std::size_t>(leaf_len);
    return tree;
}

bool QueryTree::empty() const {
    return backing_ == Backing::Explicit && nodes_.empty();
}

bool QueryTree::contains(const std::string& path) const {
    if (!is_valid_path(path)) return false;
    if (backing_ == Backing::Explicit) return nodes_.count(path) > 0;
    return path.size() <= tournament_leaf_len_;
}

bool QueryTree::is_leaf(const std::string& path) const {
    if (!contains(path)) return false;
    if (backing_ == Backing::Explicit) {
        return !nodes_.count(path + '+') && !nodes_.count(path + '-');
    }
    return path.size() == tournament_leaf_len_;
}

RatVec QueryTree::query_at(const std::string& path) const {
    if (!contains(path)) throw RangeError("query_at: path '" + path + "' is not in the tree");
    if (backing_ == Backing::Explicit) return nodes_.at(path);
    // champion after the recorded answers; '-' hands the title to the challenger
    std::uint64_t champion = 0;
    for (std::size_t j = 0; j < path.size(); ++j) {
        if (path[j] == '-') champion = static_cast<std::uint64_t>(j) + 1;
    }
    const std::uint64_t challenger = static_cast<std::uint64_t>(path.size()) + 1;
    return difference_query(spec_, n_, champion, challenger);
}

bool QueryTree::has_leaf_label(const std::string& leaf, int final_sign) const {
    if (!is_leaf(leaf)) return false;
    if (backing_ == Backing::Explicit) return leaf_labels_.count(leaf_key(leaf, final_sign)) > 0;
    return true;
}

std::uint64_t QueryTree::leaf_label(const std::string& leaf, int final_sign) const {
    if (!is_leaf(leaf)) throw RangeError("leaf_label: '" + leaf + "' is not a leaf");
    if (backing_ == Backing::Explicit) {
        auto it = leaf_labels_.find(leaf_key(leaf, final_sign));
        if (it == leaf_labels_.end()) {
            throw ValueError("leaf_label: leaf '" + leaf + "' is unlabeled for sign " +
                             (final_sign > 0 ? std::string("+1") : std::string("-1")));
        }
        return it->second;
    }
    std::uint64_t champion = 0;
    for (std::size_t j = 0; j < leaf.size(); ++j) {
        if (leaf[j] == '-') champion = static_cast<std::uint64_t>(j) + 1;
    }
    const std::uint64_t challenger = static_cast<std::uint64_t>(leaf.size()) + 1;
    return final_sign > 0 ? champion : challenger;
}

std::size_t QueryTree::node_count() const {
    if (backing_ == Backing::Explicit) return nodes_.size();
    if (tournament_leaf_len_ + 1 >= 63) {
        throw SizeCapError("node_count: tournament tree is too large to count");
    }
    return (std::size_t(1) << (tournament_leaf_len_ + 1)) - 1;
}

std::size_t QueryTree::leaf_count() const {
    if (backing_ == Backing::Explicit) {
        std::size_t k = 0;
        for (const auto& [path, _] : nodes_) {
            if (is_leaf(path)) ++k;
        }
        return k;
    }
    if (tournament_leaf_len_ >= 63) {
        throw SizeCapError("leaf_count: tournament tree is too large to count");
    }
    return std::size_t(1) << tournament_leaf_len_;
}

std::size_t QueryTree::max_depth() const {
    if (backing_ == Backing::Explicit) {
        std::size_t d = 0;
        for (const auto& [path, _] : nodes_) d = std::max(d, path.size());
        return d;
    }
    return tournament_leaf_len_;
}

std::vector<std::string> QueryTree::node_paths(std::size_t cap) const {
    if (backing_ == Backing::Explicit) {
        if (nodes_.size() > cap) {
            throw SizeCapError("node_paths: " + std::to_string(nodes_.size()) +
                               " nodes exceed the cap");
        }
        std::vector<std::string> out;
        out.reserve(nodes_.size());
        for (const auto& [path, _] : nodes_) out.push_back(path);
        return out;
    }
    if (node_count() > cap) {
        throw SizeCapError("node_paths: lazy tree of " + std::to_string(node_count()) +
                           " nodes exceeds the cap");
    }
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() < tournament_leaf_len_) {
            out.push_back(out[i] + '+');
            out.push_back(out[i] + '-');
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> QueryTree::leaf_paths(std::size_t cap) const {
    std::vector<std::string> out;
    for (const auto& path : node_paths(cap)) {
        if (is_leaf(path)) out.push_back(path);
    }
    return out;
}

const std::map<std::string, RatVec>& QueryTree::explicit_nodes() const {
    if (backing_ != Backing::Explicit) {
        throw SizeCapError("explicit_nodes: tree is lazily generated");
    }
    return nodes_;
}

const std::map<std::string, std::uint64_t>& QueryTree::explicit_leaf_labels() const {
    if (backing_ != Backing::Explicit) {
        throw SizeCapError("explicit_leaf_labels: tree is lazily generated");
    }
    return leaf_labels_;
}

namespace {

/// The raw signed query sequence of a cell: b_j * q(prefix) for each
/// answered comparison, then final_sign * q(leaf).
std::vector<RatVec> cell_normals(const QueryTree& tree, const std::string& leaf,
                                 int final_sign, std::vector<int>* signs_out = nullptr) {
    std::vector<RatVec> normals;
    normals.reserve(leaf.size() + 1);
    for (std::size_t j = 0; j < leaf.size(); ++j) {
        RatVec q = tree.query_at(leaf.substr(0, j));
        const int sign = sign_of_char(leaf[j]);
        normals.push_back(sign > 0 ? std::move(q) : negated(q));
        if (signs_out) signs_out->push_back(sign);
    }
    RatVec q = tree.query_at(leaf);
    normals.push_back(final_sign > 0 ? std::move(q) : negated(q));
    if (signs_out) signs_out->push_back(final_sign);
    return normals;
}

}  // namespace

ConePolyhedron leaf_polyhedron(const QueryTree& tree, const std::string& leaf, int final_sign) {
    if (!tree.is_leaf(leaf)) {
        throw RangeError("leaf_polyhedron: '" + leaf + "' is not a leaf of the tree");
    }
    std::vector<RatVec> normals = cell_normals(tree, leaf, final_sign);
    std::vector<NormalLabel> labels;
    labels.reserve(normals.size());
    for (std::size_t j = 0; j < normals.size(); ++j) labels.push_back(NormalLabel::query(j));
    return ConePolyhedron(tree.spec().dimension(tree.n()), std::move(normals), std::move(labels));
}

TreeRunResult run_tree(const QueryTree& tree, const Instance& instance) {
    if (tree.empty()) throw ValueError("run_tree: empty tree");
    if (instance.costs.size() !=
        static_cast<std::size_t>(tree.spec().dimension(tree.n()))) {
        throw DimensionError("run_tree: instance dimension does not match the tree");
    }
    std::string path;
    for (;;) {
        if (!tree.contains(path)) {
            throw ValueError("run_tree: reached missing node '" + path + "'");
        }
        const int answer = dot(tree.query_at(path), instance.costs) <= 0 ? +1 : -1;
        if (tree.is_leaf(path)) {
            return {path, answer, tree.leaf_label(path, answer)};
        }
        path += answer > 0 ? '+' : '-';
    }
}

LeafCheck verify_leaf_containment(const QueryTree& tree, const std::string& leaf,
                                  int final_sign) {
    if (!tree.has_leaf_label(leaf, final_sign)) {
        throw ValueError("verify_leaf_containment: cell (" + leaf + ", " +
                         (final_sign > 0 ? std::string("+1") : std::string("-1")) +
                         ") is unlabeled");
    }
    const std::uint64_t s = tree.leaf_label(leaf, final_sign);
    std::vector<int> signs;
    const std::vector<RatVec> normals = cell_normals(tree, leaf, final_sign, &signs);

    LeafCheck check;
    check.certificate.leaf = leaf;
    check.certificate.final_sign = final_sign;
    check.certificate.solution = s;

    const std::uint64_t count = tree.spec().solution_count(tree.n());
    for (std::uint64_t sp = 0; sp < count; ++sp) {
        if (sp == s) continue;
        RatVec target = difference_query(tree.spec(), tree.n(), s, sp);
        ConeMembershipResult membership = cone_member(target, normals);
        if (membership.member) {
            check.certificate.multipliers.emplace_back(sp, std::move(membership.multipliers));
            continue;
        }
        // Failure: produce an instance inside the cell that beats the
        // label. Prefer one strict on the '-'-signed constraints so a
        // rerun follows the same path.
        check.certified = false;
        check.failing_solution = sp;
        std::vector<bool> strict(normals.size(), false);
        for (std::size_t j = 0; j < normals.size(); ++j) strict[j] = signs[j] < 0;
        std::vector<RatVec> rows = normals;
        rows.push_back(negated(target));
        strict.push_back(true);
        FeasibilityResult retrace = solve_feasibility(rows, strict);
        if (retrace.feasible) {
            check.counterexample = std::move(retrace.witness);
            check.counterexample_retraces = true;
        } else {
            check.counterexample = std::move(membership.separator);
            check.counterexample_retraces = false;
        }
        return check;
    }
    check.certified = true;
    return check;
}

SolveReport verify_solves(const QueryTree& tree, std::size_t cell_cap) {
    SolveReport report;
    report.node_count = tree.node_count();
    report.leaf_count = tree.leaf_count();
    report.max_depth = tree.max_depth();

    if (tree.empty()) {
        report.solved = false;
        return report;
    }
    const std::vector<std::string> leaves = tree.leaf_paths(cell_cap);
    if (leaves.size() * 2 > cell_cap) {
        throw SizeCapError("verify_solves: cell count exceeds the cap");
    }
    report.cells_total = leaves.size() * 2;
    for (const auto& leaf : leaves) {
        for (int sign : {+1, -1}) {
            CellStatus status;
            status.leaf = leaf;
            status.final_sign = sign;
            status.labeled = tree.has_leaf_label(leaf, sign);
            if (!status.labeled) {
                report.failures.push_back(std::move(status));
                continue;
            }
            status.label = tree.leaf_label(leaf, sign);
            LeafCheck check = verify_leaf_containment(tree, leaf, sign);
            if (check.certified) {
                ++report.cells_certified;
                report.certificates.push_back(std::move(check.certificate));
            } else {
                status.failing_solution = check.failing_solution;
                status.counterexample = std::move(check.counterexample);
                report.failures.push_back(std::move(status));
            }
        }
    }
    report.solved = report.failures.empty() && report.cells_total > 0;
    return report;
}

QueryTree build_tournament_tree(const RilcopSpec& spec, int n) {
    return QueryTree::tournament(spec, n);
}

CoverageReport face_scrape_coverage(const QueryTree& tree, std::size_t samples,
                                    std::uint64_t seed) {
    CoverageReport report;
    report.samples_per_facet = samples;
    report.seed = seed;

    const RilcopSpec& spec = tree.spec();
    const int n = tree.n();
    const std::uint64_t count = spec.solution_count(n);

    std::vector<std::string> nodes;
    if (!tree.empty()) nodes = tree.node_paths();
    std::vector<std::vector<RatVec>> node_constraints(nodes.size());
    std::vector<RatVec> node_queries(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        node_queries[i] = tree.query_at(nodes[i]);
        for (std::size_t j = 0; j < nodes[i].size(); ++j) {
            RatVec q = tree.query_at(nodes[i].substr(0, j));
            node_constraints[i].push_back(sign_of_char(nodes[i][j]) > 0 ? std::move(q)
                                                                        : negated(q));
        }
    }

    SeededRng rng(seed);
    for (std::uint64_t s = 0; s < count; ++s) {
        const ConePolyhedron cone = solution_set(spec, n, s);
        const FaceStructure faces = facet_normals(cone);
        for (std::size_t f = 0; f < cone.size(); ++f) {
            if (!faces.facet_flags[f]) continue;
            FacetCoverage cov;
            cov.set_index = s;
            cov.facet = cone.labels()[f];
            cov.samples = samples;

            const RatVec& normal = cone.normals()[f];
            const RatVec& witness = *faces.witnesses[f];
            const Rational normal_sq = dot(normal, normal);
            for (std::size_t k = 0; k < samples; ++k) {
                // random facet-plane direction, then the largest step that
                // keeps the other inequalities satisfied
                RatVec dir = rng.random_vector(witness.size(), 8, 4);
                dir = sub(dir, scaled(normal, dot(normal, dir) / normal_sq));
                Rational step = 1;
                bool bounded = false;
                for (std::size_t j = 0; j < cone.size(); ++j) {
                    if (j == f) continue;
                    Rational rate = dot(cone.normals()[j], dir);
                    if (rate > 0) {
                        Rational limit = -dot(cone.normals()[j], witness) / rate;
                        if (!bounded || limit < step) {
                            step = limit;
                            bounded = true;
                        }
                    }
                }
                RatVec point = add(witness, scaled(dir, step / 2));

                bool scraped = false;
                for (std::size_t i = 0; i < nodes.size() && !scraped; ++i) {
                    if (dot(node_queries[i], point) != 0) continue;
                    bool inside = true;
                    for (const auto& constraint : node_constraints[i]) {
                        if (dot(constraint, point) > 0) {
                            inside = false;
                            break;
                        }
                    }
                    scraped = inside;
                }
                if (scraped) ++cov.covered;
            }
            report.facets.push_back(std::move(cov));
        }
    }
    return report;
}

}  // namespace splinterlab
