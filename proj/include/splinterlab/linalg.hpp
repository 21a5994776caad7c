#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "splinterlab/rational.hpp"

namespace splinterlab {

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& v, const Rational& factor);
RatVec negated(const RatVec& v);
Rational component_sum(const RatVec& v);
bool is_zero_vector(const RatVec& v);

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const std::vector<RatVec>& rows);

/// The unique lambda != 0 with a = lambda * b, if it exists.
/// a being the zero vector yields nullopt (lambda would be 0);
/// b must be nonzero.
std::optional<Rational> proportionality_factor(const RatVec& a, const RatVec& b);

}  // namespace splinterlab
