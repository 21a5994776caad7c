#include "splinterlab/feasibility.hpp"

#include "splinterlab/errors.hpp"
#include "splinterlab/linalg.hpp"
#include "splinterlab/simplex.hpp"

namespace splinterlab {

namespace {

std::size_t common_dimension(const std::vector<RatVec>& vectors, const char* op) {
    if (vectors.empty()) throw RangeError(std::string(op) + ": no vectors given");
    const std::size_t d = vectors[0].size();
    if (d == 0) throw DimensionError(std::string(op) + ": zero-dimension input");
    for (const auto& v : vectors) {
        if (v.size() != d) throw DimensionError(std::string(op) + ": dimension mismatch");
    }
    return d;
}

}  // namespace

FeasibilityResult solve_feasibility(const std::vector<RatVec>& normals,
                                    const std::vector<bool>& strict) {
    const std::size_t d = common_dimension(normals, "solve_feasibility");
    if (strict.size() != normals.size()) {
        throw DimensionError("solve_feasibility: one strictness flag per normal required");
    }

    bool any_strict = false;
    for (bool s : strict) any_strict |= s;
    if (!any_strict) {
        // Homogeneous non-strict systems always hold at the origin.
        return {true, RatVec(d, Rational(0))};
    }

    // Variables: u_0..u_{d-1} with c = u - 1 (box becomes 0 <= u <= 2),
    // plus the auxiliary slack t.
    const std::size_t n_vars = d + 1;
    std::vector<RatVec> rows;
    std::vector<lp::Sense> senses;
    RatVec rhs;
    rows.reserve(normals.size() + d + 1);

    for (std::size_t i = 0; i < normals.size(); ++i) {
        RatVec row(n_vars, Rational(0));
        for (std::size_t k = 0; k < d; ++k) row[k] = normals[i][k];
        if (strict[i]) row[d] = 1;
        rows.push_back(std::move(row));
        senses.push_back(lp::Sense::LessEq);
        rhs.push_back(component_sum(normals[i]));  // f.(u-1) <= 0  <=>  f.u <= f.1
    }
    for (std::size_t k = 0; k < d; ++k) {
        RatVec row(n_vars, Rational(0));
        row[k] = 1;
        rows.push_back(std::move(row));
        senses.push_back(lp::Sense::LessEq);
        rhs.push_back(Rational(2));
    }
    {
        RatVec row(n_vars, Rational(0));
        row[d] = 1;
        rows.push_back(std::move(row));
        senses.push_back(lp::Sense::LessEq);
        rhs.push_back(Rational(1));
    }

    RatVec objective(n_vars, Rational(0));
    objective[d] = 1;

    lp::Result res = lp::maximize(objective, rows, senses, rhs);
    if (res.status != lp::Status::Optimal) {
        throw InternalError("solve_feasibility: auxiliary program must have an optimum");
    }
    if (res.objective <= 0) return {false, {}};

    RatVec witness(d);
    for (std::size_t k = 0; k < d; ++k) witness[k] = res.x[k] - 1;
    if (!feasibility_witness_valid(normals, strict, witness)) {
        throw InternalError("solve_feasibility: witness failed exact recheck");
    }
    return {true, std::move(witness)};
}

ConeMembershipResult cone_member(const RatVec& target, const std::vector<RatVec>& generators) {
    const std::size_t d = common_dimension(generators, "cone_member");
    if (target.size() != d) throw DimensionError("cone_member: target dimension mismatch");

    const std::size_t m = generators.size();
    if (is_zero_vector(target)) {
        return {true, RatVec(m, Rational(0)), {}};
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (generators[j] == target) {
            RatVec lambda(m, Rational(0));
            lambda[j] = 1;
            return {true, std::move(lambda), {}};
        }
    }

    // Feasibility of G.lambda = target, lambda >= 0.
    std::vector<RatVec> rows(d, RatVec(m, Rational(0)));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < m; ++j) rows[k][j] = generators[j][k];
    }
    std::vector<lp::Sense> senses(d, lp::Sense::Equal);
    lp::Result res = lp::maximize(RatVec(m, Rational(0)), rows, senses, target);

    if (res.status == lp::Status::Optimal) {
        if (!membership_certificate_valid(target, generators, res.x)) {
            throw InternalError("cone_member: multipliers failed exact recheck");
        }
        return {true, std::move(res.x), {}};
    }

    // Farkas alternative: g.c <= 0 for all generators, target.c > 0.
    std::vector<RatVec> sep_normals = generators;
    sep_normals.push_back(negated(target));
    std::vector<bool> strict(sep_normals.size(), false);
    strict.back() = true;
    FeasibilityResult sep = solve_feasibility(sep_normals, strict);
    if (!sep.feasible || !separator_valid(target, generators, sep.witness)) {
        throw InternalError("cone_member: no multipliers and no separator; exactness broken");
    }
    return {false, {}, std::move(sep.witness)};
}

bool has_all_positive_combination(const RatVec& target, const std::vector<RatVec>& generators) {
    const std::size_t d = common_dimension(generators, "has_all_positive_combination");
    if (target.size() != d) {
        throw DimensionError("has_all_positive_combination: target dimension mismatch");
    }

    // lambda = mu + t with mu >= 0: maximize t subject to
    // G.mu + t*(G.1) = target, 0 <= t <= 1. All-positive solutions exist
    // exactly when the optimum t is positive.
    const std::size_t m = generators.size();
    std::vector<RatVec> rows(d, RatVec(m + 1, Rational(0)));
    for (std::size_t k = 0; k < d; ++k) {
        Rational gen_sum = 0;
        for (std::size_t j = 0; j < m; ++j) {
            rows[k][j] = generators[j][k];
            gen_sum += generators[j][k];
        }
        rows[k][m] = gen_sum;
    }
    std::vector<lp::Sense> senses(d, lp::Sense::Equal);
    RatVec rhs = target;

    RatVec cap(m + 1, Rational(0));
    cap[m] = 1;
    rows.push_back(cap);
    senses.push_back(lp::Sense::LessEq);
    rhs.push_back(Rational(1));

    RatVec objective(m + 1, Rational(0));
    objective[m] = 1;
    lp::Result res = lp::maximize(objective, rows, senses, rhs);
    if (res.status == lp::Status::Infeasible) return false;
    if (res.status != lp::Status::Optimal) {
        throw InternalError("has_all_positive_combination: bounded program reported unbounded");
    }
    return res.objective > 0;
}

bool feasibility_witness_valid(const std::vector<RatVec>& normals, const std::vector<bool>& strict,
                               const RatVec& witness) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
        Rational v = dot(normals[i], witness);
        if (strict[i] ? !(v < 0) : !(v <= 0)) return false;
    }
    return true;
}

bool membership_certificate_valid(const RatVec& target, const std::vector<RatVec>& generators,
                                  const RatVec& multipliers) {
    if (multipliers.size() != generators.size()) return false;
    RatVec acc(target.size(), Rational(0));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (multipliers[j] < 0) return false;
        if (multipliers[j] == 0) continue;
        for (std::size_t k = 0; k < target.size(); ++k) {
            acc[k] += multipliers[j] * generators[j][k];
        }
    }
    return acc == target;
}

bool separator_valid(const RatVec& target, const std::vector<RatVec>& generators,
                     const RatVec& separator) {
    for (const auto& g : generators) {
        if (dot(g, separator) > 0) return false;
    }
    return dot(target, separator) > 0;
}

}  // namespace splinterlab
