#pragma once

#include <optional>
#include <string>
#include <utility>

#include "splinterlab/polyhedra.hpp"
#include "splinterlab/rational.hpp"

namespace splinterlab {

/// A nonzero query hyperplane q, asked as "is q.c <= 0?".
struct Query {
    RatVec vector;
    std::string id;
};

Query make_query(RatVec vector, std::string id = {});

/// spL: splinters the cone (interior points on both sides of q).
/// sCp: coincides with one facet hyperplane (q = lambda * y_f).
/// Rsp: one-sided without scraping (+-q a nonnegative facet combination
///      of support >= 2).
enum class Verdict { spL, sCp, Rsp };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct QueryClassification {
    Verdict verdict = Verdict::spL;

    // sCp certificate
    std::optional<std::size_t> scraped_facet_index;  // position in the facet list
    std::optional<NormalLabel> scraped_facet;
    std::optional<Rational> scale;  // q = scale * facet normal, scale != 0

    // Rsp certificate: +q (Plus) or -q (Minus) equals multipliers . facets
    enum class Orientation { Plus, Minus, Both };
    std::optional<Orientation> orientation;
    RatVec multipliers;

    // spL certificate: q.c_plus < 0 and q.c_minus > 0, both inside the cone
    std::optional<std::pair<RatVec, RatVec>> side_witnesses;
};

/// Certificate-first path: proportionality against each facet, then cone
/// membership of +q and -q over the facet normals; only a two-sided
/// outcome falls through to the witness programs.
QueryClassification classify_algebraic(const Query& q, const FaceStructure& faces);

/// Witness-first path: one strict program per side of the hyperplane;
/// if some side is empty the verdict is refined through the algebraic
/// certificates.
QueryClassification classify_geometric(const Query& q, const ConePolyhedron& p);
QueryClassification classify_geometric(const Query& q, const ConePolyhedron& p,
                                       const FaceStructure& faces);

/// Exact recomputation of a classification's certificate.
bool classification_valid(const Query& q, const FaceStructure& faces,
                          const QueryClassification& c);

/// Unbalanced queries must splinter balanced cones; a counterexample
/// would be a theory violation.
struct Prop1Report {
    bool hypothesis_applies = false;
    bool query_balanced = false;
    bool polyhedron_balanced = false;
    std::optional<Verdict> algebraic_verdict;
    std::optional<Verdict> geometric_verdict;
    bool violation = false;
};

Prop1Report check_prop1(const Query& q, const ConePolyhedron& p);

}  // namespace splinterlab
