#pragma once

#include <vector>

#include "splinterlab/rational.hpp"

namespace splinterlab {

struct FeasibilityResult {
    bool feasible = false;
    RatVec witness;  // dimension of the normals, set when feasible
};

/// Decide whether some c satisfies f.c <= 0 for every normal f, with
/// strict inequality where flagged. Homogeneity is exploited: the system
/// is solved inside the box [-1,1]^d by maximizing an auxiliary slack t
/// over {f.c + t <= 0 on strict rows, t <= 1}; the strict system is
/// feasible exactly when the optimum t is positive. Returned witnesses
/// live in the box.
FeasibilityResult solve_feasibility(const std::vector<RatVec>& normals,
                                    const std::vector<bool>& strict);

struct ConeMembershipResult {
    bool member = false;
    RatVec multipliers;  // nonnegative, one per generator, when member
    RatVec separator;    // g.c <= 0 for all generators, target.c > 0, when non-member
};

/// Decide whether target is a nonnegative combination of the generators,
/// producing either the multipliers or a separating vector. The zero
/// target is a member with all-zero multipliers. Both certificates are
/// recomputed exactly before being returned.
ConeMembershipResult cone_member(const RatVec& target, const std::vector<RatVec>& generators);

/// Whether target = sum lambda_i * generators[i] admits a solution with
/// every lambda_i strictly positive.
bool has_all_positive_combination(const RatVec& target, const std::vector<RatVec>& generators);

/// Exact recomputation of certificates, used by tests and internal checks.
bool feasibility_witness_valid(const std::vector<RatVec>& normals, const std::vector<bool>& strict,
                               const RatVec& witness);
bool membership_certificate_valid(const RatVec& target, const std::vector<RatVec>& generators,
                                  const RatVec& multipliers);
bool separator_valid(const RatVec& target, const std::vector<RatVec>& generators,
                     const RatVec& separator);

}  // namespace splinterlab
