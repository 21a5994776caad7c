#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace splinterlab {

// Exact arbitrary-precision scalars. GMP keeps rationals canonical:
// denominator > 0 and gcd(|num|, den) = 1 after every operation.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rational>;

/// Parse "p/q" (or plain "p") into a canonical rational.
/// Accepts an optional leading '-'; q must be a positive integer.
Rational parse_rational(std::string_view text);

/// Canonical string form: "p/q" with q omitted when it equals 1.
std::string rational_to_string(const Rational& value);

RatVec parse_rational_vector(const std::vector<std::string>& parts);
std::vector<std::string> rational_vector_to_strings(const RatVec& vec);

}  // namespace splinterlab
