#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splinterlab/rational.hpp"
#include "splinterlab/rilcop.hpp"

namespace splinterlab {

/// Provenance of a defining inequality.
struct NormalLabel {
    enum class Kind { SolutionPair, QueryIndex, Other };

    Kind kind = Kind::Other;
    std::uint64_t s = 0;
    std::uint64_t s_prime = 0;
    std::size_t query_index = 0;
    std::string text;

    static NormalLabel pair(std::uint64_t s, std::uint64_t s_prime);
    static NormalLabel query(std::size_t index);
    static NormalLabel other(std::string text);

    std::string to_string() const;  // "0-1", "q3", or free text
    static NormalLabel from_string(const std::string& text);

    bool operator==(const NormalLabel&) const = default;
};

/// A homogeneous polyhedron {c : f.c <= 0 for every normal f}. Normals
/// are scaled so the first nonzero component has absolute value 1 (a
/// positive rescaling, so the half-space is unchanged) and exact
/// duplicates are dropped, keeping the first label.
class ConePolyhedron {
public:
    ConePolyhedron(int dim, std::vector<RatVec> normals, std::vector<NormalLabel> labels);

    int dim() const { return dim_; }
    std::size_t size() const { return normals_.size(); }
    const std::vector<RatVec>& normals() const { return normals_; }
    const std::vector<NormalLabel>& labels() const { return labels_; }

    bool operator==(const ConePolyhedron&) const = default;

private:
    int dim_;
    std::vector<RatVec> normals_;
    std::vector<NormalLabel> labels_;
};

/// Positive rescaling that makes the first nonzero component +-1.
RatVec canonical_halfspace_normal(const RatVec& normal);

/// The cone of instances for which solution s is optimal: the S(n)-1
/// inequalities (x(n,s) - x(n,s')).c <= 0, labeled by (s, s').
ConePolyhedron solution_set(const RilcopSpec& spec, int n, std::uint64_t s);

struct InteriorPoint {
    bool full_dimensional = false;
    RatVec witness;  // every inequality strict, when full_dimensional
};

InteriorPoint is_fully_dimensional(const ConePolyhedron& p);

/// Facets of a fully-dimensional cone, with one instance-space witness
/// per facet (equality on that normal, strict inequality on the rest).
struct FaceStructure {
    ConePolyhedron polyhedron;
    std::vector<bool> facet_flags;
    std::vector<std::optional<RatVec>> witnesses;

    std::size_t facet_count() const;
    std::vector<RatVec> facet_vectors() const;
    std::vector<NormalLabel> facet_labels() const;
    std::vector<std::size_t> facet_indices() const;
};

/// Decide each normal's facet status by strict-witness programs.
/// Requires a fully-dimensional input.
FaceStructure facet_normals(const ConePolyhedron& p);

/// Whether a stored facet witness actually certifies facet index i.
bool facet_witness_valid(const ConePolyhedron& p, std::size_t index, const RatVec& witness);

/// The face condition written over raw solution vectors: true when
/// x(n,s') is NOT an all-positive combination of the x(n,s'') with
/// s'' outside {s, s'}.
bool paper_literal_face_test(const RilcopSpec& spec, int n, std::uint64_t s, std::uint64_t s_prime);

/// Component sum exactly zero. The zero vector is rejected.
bool is_balanced_query(const RatVec& q);

/// Every defining normal balanced.
bool is_balanced_polyhedron(const ConePolyhedron& p);

/// Append half-space normals (f.c <= 0 each); labels of existing normals
/// are preserved and duplicates vanish by canonical dedup.
ConePolyhedron intersect(const ConePolyhedron& p, const std::vector<RatVec>& halfspaces);
ConePolyhedron intersect(const ConePolyhedron& p, const std::vector<RatVec>& halfspaces,
                         const std::vector<NormalLabel>& labels);

}  // namespace splinterlab
