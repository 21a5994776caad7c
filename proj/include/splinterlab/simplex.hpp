#pragma once

#include <vector>

#include "splinterlab/rational.hpp"

namespace splinterlab::lp {

enum class Sense { LessEq, Equal };
enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational objective;
    RatVec x;  // structural variables, present when Optimal
};

/// Exact two-phase simplex over the rationals.
///
/// maximize objective . x  subject to  rows[i] . x (<=|=) rhs[i],  x >= 0.
///
/// Pricing is Dantzig's rule; after a run of degenerate pivots it
/// switches to Bland's rule until the objective strictly improves,
/// which guarantees termination.
Result maximize(const RatVec& objective, const std::vector<RatVec>& rows,
                const std::vector<Sense>& senses, const RatVec& rhs);

}  // namespace splinterlab::lp
