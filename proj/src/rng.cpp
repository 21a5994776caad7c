#include "splinterlab/rng.hpp"

#include "splinterlab/errors.hpp"
#include "splinterlab/linalg.hpp"

namespace splinterlab {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SeededRng::uniform_u64(std::uint64_t bound) {
    if (bound == 0) throw ValueError("uniform_u64: zero bound");
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

long long SeededRng::uniform_int(long long lo, long long hi) {
    if (lo > hi) throw ValueError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(uniform_u64(span));
}

Rational SeededRng::uniform_rational(long long numerator_range, long long denominator_bound) {
    if (numerator_range < 0 || denominator_bound < 1) {
        throw ValueError("uniform_rational: bad sampling parameters");
    }
    long long k = uniform_int(-numerator_range, numerator_range);
    long long m = uniform_int(1, denominator_bound);
    return Rational(Integer(k), Integer(m));
}

RatVec SeededRng::random_vector(std::size_t dim, long long numerator_range,
                                long long denominator_bound) {
    RatVec out(dim);
    for (auto& x : out) x = uniform_rational(numerator_range, denominator_bound);
    return out;
}

RatVec SeededRng::random_balanced_vector(std::size_t dim, long long numerator_range,
                                         long long denominator_bound) {
    if (dim < 2) throw ValueError("random_balanced_vector: dimension must be >= 2");
    for (int attempt = 0; attempt < 256; ++attempt) {
        RatVec v = random_vector(dim, numerator_range, denominator_bound);
        Rational mean = component_sum(v) / Rational(static_cast<long long>(dim));
        for (auto& x : v) x -= mean;
        if (!is_zero_vector(v)) return v;
    }
    throw InternalError("random_balanced_vector: sampling kept collapsing to zero");
}

RatVec SeededRng::random_unbalanced_vector(std::size_t dim, long long numerator_range,
                                           long long denominator_bound) {
    if (dim < 1) throw ValueError("random_unbalanced_vector: dimension must be >= 1");
    RatVec v = random_vector(dim, numerator_range, denominator_bound);
    if (component_sum(v) == 0) v[0] += 1;
    return v;
}

}  // namespace splinterlab
