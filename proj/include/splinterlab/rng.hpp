#pragma once

#include <cstdint>
#include <random>

#include "splinterlab/rational.hpp"

namespace splinterlab {

/// Mix two 64-bit values into a derived seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. Draws go through hand-rolled bounded
/// sampling so that identical seeds give identical streams everywhere
/// (std distributions are not pinned by the standard).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, bound); bound >= 1.
    std::uint64_t uniform_u64(std::uint64_t bound);

    /// Uniform on [lo, hi] inclusive.
    long long uniform_int(long long lo, long long hi);

    /// Uniform sign: +1 or -1.
    int uniform_sign() { return uniform_u64(2) == 0 ? +1 : -1; }

    /// k/m with k uniform on [-numerator_range, numerator_range] and
    /// m uniform on [1, denominator_bound].
    Rational uniform_rational(long long numerator_range, long long denominator_bound);

    RatVec random_vector(std::size_t dim, long long numerator_range, long long denominator_bound);

    /// Nonzero vector with component sum exactly zero (mean subtracted,
    /// resampled on the rare all-equal draw).
    RatVec random_balanced_vector(std::size_t dim, long long numerator_range,
                                  long long denominator_bound);

    /// Nonzero vector with component sum != 0.
    RatVec random_unbalanced_vector(std::size_t dim, long long numerator_range,
                                    long long denominator_bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace splinterlab
