#include "splinterlab/polyhedra.hpp"

#include <algorithm>

#include "splinterlab/errors.hpp"
#include "splinterlab/feasibility.hpp"
#include "splinterlab/linalg.hpp"

namespace splinterlab {

NormalLabel NormalLabel::pair(std::uint64_t s, std::uint64_t s_prime) {
    NormalLabel l;
    l.kind = Kind::SolutionPair;
    l.s = s;
    l.s_prime = s_prime;
    return l;
}

NormalLabel NormalLabel::query(std::size_t index) {
    NormalLabel l;
    l.kind = Kind::QueryIndex;
    l.query_index = index;
    return l;
}

NormalLabel NormalLabel::other(std::string text) {
    NormalLabel l;
    l.kind = Kind::Other;
    l.text = std::move(text);
    return l;
}

std::string NormalLabel::to_string() const {
    switch (kind) {
        case Kind::SolutionPair:
            return std::to_string(s) + "-" + std::to_string(s_prime);
        case Kind::QueryIndex:
            return "q" + std::to_string(query_index);
        case Kind::Other:
            return text;
    }
    return text;
}

NormalLabel NormalLabel::from_string(const std::string& text) {
    if (!text.empty() && text.front() == 'q' &&
        text.find_first_not_of("0123456789", 1) == std::string::npos && text.size() > 1) {
        return query(std::stoull(text.substr(1)));
    }
    const auto dash = text.find('-');
    if (dash != std::string::npos && dash > 0 &&
        text.find_first_not_of("0123456789") == dash &&
        text.find_first_not_of("0123456789", dash + 1) == std::string::npos &&
        dash + 1 < text.size()) {
        return pair(std::stoull(text.substr(0, dash)), std::stoull(text.substr(dash + 1)));
    }
    return other(text);
}

RatVec canonical_halfspace_normal(const RatVec& normal) {
    std::size_t k = 0;
    while (k < normal.size() && normal[k] == 0) ++k;
    if (k == normal.size()) throw ValueError("canonical_halfspace_normal: zero normal");
    Rational lead = abs(normal[k]);
    if (lead == 1) return normal;
    return scaled(normal, 1 / lead);
}

ConePolyhedron::ConePolyhedron(int dim, std::vector<RatVec> normals,
                               std::vector<NormalLabel> labels)
    : dim_(dim) {
    if (dim < 1) throw DimensionError("ConePolyhedron: dimension must be >= 1");
    if (labels.size() != normals.size()) {
        throw DimensionError("ConePolyhedron: one label per normal required");
    }
    normals_.reserve(normals.size());
    labels_.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (static_cast<int>(normals[i].size()) != dim) {
            throw DimensionError("ConePolyhedron: normal dimension mismatch");
        }
        RatVec canon = canonical_halfspace_normal(normals[i]);
        if (std::find(normals_.begin(), normals_.end(), canon) == normals_.end()) {
            normals_.push_back(std::move(canon));
            labels_.push_back(std::move(labels[i]));
        }
    }
}

ConePolyhedron solution_set(const RilcopSpec& spec, int n, std::uint64_t s) {
    const std::uint64_t count = spec.solution_count(n);
    if (s >= count) throw RangeError("solution_set: solution index out of range");
    std::vector<RatVec> normals;
    std::vector<NormalLabel> labels;
    normals.reserve(count - 1);
    const RatVec xs = spec.solution_vector(n, s);
    for (std::uint64_t sp = 0; sp < count; ++sp) {
        if (sp == s) continue;
        normals.push_back(sub(xs, spec.solution_vector(n, sp)));
        labels.push_back(NormalLabel::pair(s, sp));
    }
    return ConePolyhedron(spec.dimension(n), std::move(normals), std::move(labels));
}

InteriorPoint is_fully_dimensional(const ConePolyhedron& p) {
    if (p.size() == 0) {
        // the whole space; any point is interior
        return {true, RatVec(static_cast<std::size_t>(p.dim()), Rational(0))};
    }
    FeasibilityResult res =
        solve_feasibility(p.normals(), std::vector<bool>(p.size(), true));
    if (!res.feasible) return {false, {}};
    return {true, std::move(res.witness)};
}

std::size_t FaceStructure::facet_count() const {
    return static_cast<std::size_t>(std::count(facet_flags.begin(), facet_flags.end(), true));
}

std::vector<RatVec> FaceStructure::facet_vectors() const {
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < facet_flags.size(); ++i) {
        if (facet_flags[i]) out.push_back(polyhedron.normals()[i]);
    }
    return out;
}

std::vector<NormalLabel> FaceStructure::facet_labels() const {
    std::vector<NormalLabel> out;
    for (std::size_t i = 0; i < facet_flags.size(); ++i) {
        if (facet_flags[i]) out.push_back(polyhedron.labels()[i]);
    }
    return out;
}

std::vector<std::size_t> FaceStructure::facet_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facet_flags.size(); ++i) {
        if (facet_flags[i]) out.push_back(i);
    }
    return out;
}

FaceStructure facet_normals(const ConePolyhedron& p) {
    if (!is_fully_dimensional(p).full_dimensional) {
        throw ValueError("facet_normals: polyhedron is not fully-dimensional");
    }
    FaceStructure out{p, std::vector<bool>(p.size(), false),
                      std::vector<std::optional<RatVec>>(p.size())};
    for (std::size_t i = 0; i < p.size(); ++i) {
        // equality on normal i, strict inequality on every other normal
        std::vector<RatVec> rows;
        std::vector<bool> strict;
        rows.reserve(p.size() + 1);
        rows.push_back(p.normals()[i]);
        strict.push_back(false);
        rows.push_back(negated(p.normals()[i]));
        strict.push_back(false);
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j == i) continue;
            rows.push_back(p.normals()[j]);
            strict.push_back(true);
        }
        FeasibilityResult res = solve_feasibility(rows, strict);
        if (res.feasible) {
            out.facet_flags[i] = true;
            out.witnesses[i] = std::move(res.witness);
        }
    }
    return out;
}

bool facet_witness_valid(const ConePolyhedron& p, std::size_t index, const RatVec& witness) {
    if (index >= p.size()) return false;
    if (dot(p.normals()[index], witness) != 0) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == index) continue;
        if (!(dot(p.normals()[j], witness) < 0)) return false;
    }
    return true;
}

bool paper_literal_face_test(const RilcopSpec& spec, int n, std::uint64_t s,
                             std::uint64_t s_prime) {
    if (s == s_prime) throw RangeError("paper_literal_face_test: indices must differ");
    const std::uint64_t count = spec.solution_count(n);
    if (s >= count || s_prime >= count) {
        throw RangeError("paper_literal_face_test: solution index out of range");
    }
    std::vector<RatVec> generators;
    generators.reserve(count - 2);
    for (std::uint64_t t = 0; t < count; ++t) {
        if (t == s || t == s_prime) continue;
        generators.push_back(spec.solution_vector(n, t));
    }
    const RatVec target = spec.solution_vector(n, s_prime);
    if (generators.empty()) return true;
    if (!cone_member(target, generators).member) return true;
    return !has_all_positive_combination(target, generators);
}

bool is_balanced_query(const RatVec& q) {
    if (is_zero_vector(q)) throw ValueError("is_balanced_query: zero vector");
    return component_sum(q) == 0;
}

bool is_balanced_polyhedron(const ConePolyhedron& p) {
    for (const auto& f : p.normals()) {
        if (component_sum(f) != 0) return false;
    }
    return true;
}

ConePolyhedron intersect(const ConePolyhedron& p, const std::vector<RatVec>& halfspaces) {
    std::vector<NormalLabel> labels;
    labels.reserve(halfspaces.size());
    for (std::size_t i = 0; i < halfspaces.size(); ++i) labels.push_back(NormalLabel::query(i));
    return intersect(p, halfspaces, labels);
}

ConePolyhedron intersect(const ConePolyhedron& p, const std::vector<RatVec>& halfspaces,
                         const std::vector<NormalLabel>& labels) {
    if (labels.size() != halfspaces.size()) {
        throw DimensionError("intersect: one label per half-space required");
    }
    std::vector<RatVec> normals = p.normals();
    std::vector<NormalLabel> all_labels = p.labels();
    for (std::size_t i = 0; i < halfspaces.size(); ++i) {
        if (static_cast<int>(halfspaces[i].size()) != p.dim()) {
            throw DimensionError("intersect: half-space dimension mismatch");
        }
        normals.push_back(halfspaces[i]);
        all_labels.push_back(labels[i]);
    }
    return ConePolyhedron(p.dim(), std::move(normals), std::move(all_labels));
}

}  // namespace splinterlab
