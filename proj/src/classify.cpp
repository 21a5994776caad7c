#include "splinterlab/classify.hpp"

#include "splinterlab/errors.hpp"
#include "splinterlab/feasibility.hpp"
#include "splinterlab/linalg.hpp"

namespace splinterlab {

Query make_query(RatVec vector, std::string id) {
    if (is_zero_vector(vector)) throw ValueError("make_query: zero query vector");
    return Query{std::move(vector), std::move(id)};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::spL: return "spL";
        case Verdict::sCp: return "sCp";
        case Verdict::Rsp: return "Rsp";
    }
    return "spL";
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "spL") return Verdict::spL;
    if (name == "sCp") return Verdict::sCp;
    if (name == "Rsp") return Verdict::Rsp;
    throw ValueError("unknown verdict '" + name + "'");
}

namespace {

void require_query(const Query& q, const ConePolyhedron& p) {
    if (is_zero_vector(q.vector)) throw ValueError("classify: zero query");
    if (static_cast<int>(q.vector.size()) != p.dim()) {
        throw DimensionError("classify: query dimension " + std::to_string(q.vector.size()) +
                             " does not match polyhedron dimension " + std::to_string(p.dim()));
    }
}

std::size_t support_size(const RatVec& v) {
    std::size_t k = 0;
    for (const auto& x : v) {
        if (x != 0) ++k;
    }
    return k;
}

/// Strict witnesses on both sides of the hyperplane, against all of the
/// polyhedron's inequalities (non-strict).
std::optional<std::pair<RatVec, RatVec>> side_witnesses(const Query& q,
                                                        const ConePolyhedron& p) {
    std::vector<RatVec> rows = p.normals();
    std::vector<bool> strict(rows.size(), false);
    rows.push_back(q.vector);  // q.c < 0 side
    strict.push_back(true);
    FeasibilityResult plus = solve_feasibility(rows, strict);
    if (!plus.feasible) return std::nullopt;
    rows.back() = negated(q.vector);  // q.c > 0 side
    FeasibilityResult minus = solve_feasibility(rows, strict);
    if (!minus.feasible) return std::nullopt;
    return std::make_pair(std::move(plus.witness), std::move(minus.witness));
}

QueryClassification refine_one_sided(const Query& q, const FaceStructure& faces) {
    QueryClassification out;
    const auto facet_vecs = faces.facet_vectors();
    const auto facet_labels = faces.facet_labels();

    for (std::size_t i = 0; i < facet_vecs.size(); ++i) {
        if (auto lambda = proportionality_factor(q.vector, facet_vecs[i])) {
            out.verdict = Verdict::sCp;
            out.scraped_facet_index = i;
            out.scraped_facet = facet_labels[i];
            out.scale = *lambda;
            return out;
        }
    }

    ConeMembershipResult plus = cone_member(q.vector, facet_vecs);
    ConeMembershipResult minus = cone_member(negated(q.vector), facet_vecs);
    if (!plus.member && !minus.member) {
        throw InternalError("classify: one-sided query is in neither dual cone");
    }
    out.verdict = Verdict::Rsp;
    if (plus.member && minus.member) {
        // lineality direction; cannot occur for a fully-dimensional cone
        out.orientation = QueryClassification::Orientation::Both;
        out.multipliers = std::move(plus.multipliers);
    } else if (plus.member) {
        out.orientation = QueryClassification::Orientation::Plus;
        out.multipliers = std::move(plus.multipliers);
    } else {
        out.orientation = QueryClassification::Orientation::Minus;
        out.multipliers = std::move(minus.multipliers);
    }
    if (support_size(out.multipliers) < 2) {
        throw InternalError("classify: one-sided non-proportional query with support < 2");
    }
    return out;
}

}  // namespace

QueryClassification classify_algebraic(const Query& q, const FaceStructure& faces) {
    require_query(q, faces.polyhedron);

    const auto facet_vecs = faces.facet_vectors();
    QueryClassification out;
    for (std::size_t i = 0; i < facet_vecs.size(); ++i) {
        if (auto lambda = proportionality_factor(q.vector, facet_vecs[i])) {
            out.verdict = Verdict::sCp;
            out.scraped_facet_index = i;
            out.scraped_facet = faces.facet_labels()[i];
            out.scale = *lambda;
            return out;
        }
    }

    ConeMembershipResult plus = cone_member(q.vector, facet_vecs);
    ConeMembershipResult minus = cone_member(negated(q.vector), facet_vecs);
    if (plus.member || minus.member) {
        out.verdict = Verdict::Rsp;
        if (plus.member && minus.member) {
            out.orientation = QueryClassification::Orientation::Both;
            out.multipliers = std::move(plus.multipliers);
        } else if (plus.member) {
            out.orientation = QueryClassification::Orientation::Plus;
            out.multipliers = std::move(plus.multipliers);
        } else {
            out.orientation = QueryClassification::Orientation::Minus;
            out.multipliers = std::move(minus.multipliers);
        }
        if (support_size(out.multipliers) < 2) {
            throw InternalError("classify_algebraic: membership with support < 2 escaped the"
                                " proportionality screen");
        }
        return out;
    }

    out.verdict = Verdict::spL;
    auto witnesses = side_witnesses(q, faces.polyhedron);
    if (!witnesses) {
        throw InternalError("classify_algebraic: certificates deny both sides yet a side"
                            " witness is missing");
    }
    out.side_witnesses = std::move(witnesses);
    return out;
}

QueryClassification classify_geometric(const Query& q, const ConePolyhedron& p) {
    require_query(q, p);
    auto witnesses = side_witnesses(q, p);
    if (witnesses) {
        QueryClassification out;
        out.verdict = Verdict::spL;
        out.side_witnesses = std::move(witnesses);
        return out;
    }
    return refine_one_sided(q, facet_normals(p));
}

QueryClassification classify_geometric(const Query& q, const ConePolyhedron& p,
                                       const FaceStructure& faces) {
    require_query(q, p);
    auto witnesses = side_witnesses(q, p);
    if (witnesses) {
        QueryClassification out;
        out.verdict = Verdict::spL;
        out.side_witnesses = std::move(witnesses);
        return out;
    }
    return refine_one_sided(q, faces);
}

bool classification_valid(const Query& q, const FaceStructure& faces,
                          const QueryClassification& c) {
    const auto facet_vecs = faces.facet_vectors();
    switch (c.verdict) {
        case Verdict::sCp: {
            if (!c.scraped_facet_index || !c.scale || *c.scale == 0) return false;
            if (*c.scraped_facet_index >= facet_vecs.size()) return false;
            return q.vector == scaled(facet_vecs[*c.scraped_facet_index], *c.scale);
        }
        case Verdict::Rsp: {
            if (!c.orientation) return false;
            if (support_size(c.multipliers) < 2) return false;
            for (const auto& f : facet_vecs) {
                if (proportionality_factor(q.vector, f)) return false;
            }
            const RatVec target = c.orientation == QueryClassification::Orientation::Minus
                                      ? negated(q.vector)
                                      : q.vector;
            return membership_certificate_valid(target, facet_vecs, c.multipliers);
        }
        case Verdict::spL: {
            if (!c.side_witnesses) return false;
            const auto& [c_plus, c_minus] = *c.side_witnesses;
            if (!(dot(q.vector, c_plus) < 0)) return false;
            if (!(dot(q.vector, c_minus) > 0)) return false;
            for (const auto& f : faces.polyhedron.normals()) {
                if (dot(f, c_plus) > 0 || dot(f, c_minus) > 0) return false;
            }
            return true;
        }
    }
    return false;
}

Prop1Report check_prop1(const Query& q, const ConePolyhedron& p) {
    require_query(q, p);
    Prop1Report report;
    report.query_balanced = is_balanced_query(q.vector);
    report.polyhedron_balanced = is_balanced_polyhedron(p);
    report.hypothesis_applies = !report.query_balanced && report.polyhedron_balanced;
    if (!report.hypothesis_applies) return report;

    FaceStructure faces = facet_normals(p);
    report.algebraic_verdict = classify_algebraic(q, faces).verdict;
    report.geometric_verdict = classify_geometric(q, p, faces).verdict;
    report.violation = (*report.algebraic_verdict != Verdict::spL) ||
                       (*report.geometric_verdict != Verdict::spL);
    return report;
}

}  // namespace splinterlab
