#include "splinterlab/rilcop.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "splinterlab/errors.hpp"
#include "splinterlab/linalg.hpp"

namespace splinterlab {

std::uint64_t factorial(int n) {
    if (n < 0) throw RangeError("factorial: negative argument");
    if (n > 20) throw SizeCapError("factorial: " + std::to_string(n) + "! overflows 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation permutation_unrank_lex(int n, std::uint64_t s) {
    if (n < 1) throw RangeError("permutation_unrank_lex: n must be >= 1");
    const std::uint64_t total = factorial(n);
    if (s >= total) {
        throw RangeError("permutation_unrank_lex: rank " + std::to_string(s) + " out of range for n=" +
                         std::to_string(n));
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    Permutation p;
    p.images.reserve(n);
    std::uint64_t base = total;
    for (int k = n; k >= 1; --k) {
        base /= static_cast<std::uint64_t>(k);
        const std::size_t idx = static_cast<std::size_t>(s / base);
        s %= base;
        p.images.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
}

std::uint64_t permutation_rank_lex(const Permutation& p) {
    const int n = static_cast<int>(p.images.size());
    if (n < 1) throw RangeError("permutation_rank_lex: empty permutation");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : p.images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw ValueError("permutation_rank_lex: images are not a bijection on {1..n}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::uint64_t rank = 0;
    std::uint64_t base = factorial(n);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    for (int k = 0; k < n; ++k) {
        base /= static_cast<std::uint64_t>(n - k);
        const auto it = std::find(pool.begin(), pool.end(), p.images[static_cast<std::size_t>(k)]);
        rank += static_cast<std::uint64_t>(it - pool.begin()) * base;
        pool.erase(it);
    }
    return rank;
}

RilcopSpec::RilcopSpec(std::string name, DimFn dimension, CountFn solution_count,
                       VecFn solution_vector)
    : name_(std::move(name)),
      dimension_(std::move(dimension)),
      count_(std::move(solution_count)),
      vector_(std::move(solution_vector)) {}

int RilcopSpec::dimension(int n) const {
    if (n < 1) throw RangeError(name_ + ": size must be >= 1");
    return dimension_(n);
}

std::uint64_t RilcopSpec::solution_count(int n) const {
    if (n < 1) throw RangeError(name_ + ": size must be >= 1");
    return count_(n);
}

RatVec RilcopSpec::solution_vector(int n, std::uint64_t s) const {
    if (s >= solution_count(n)) {
        throw RangeError(name_ + ": solution index " + std::to_string(s) + " out of range");
    }
    return vector_(n, s);
}

std::size_t tsp_arc_index(int i, int j, int n) {
    if (i == j || i < 0 || j < 0 || i > n || j > n) {
        throw RangeError("tsp_arc_index: arc (" + std::to_string(i) + "," + std::to_string(j) +
                         ") invalid for n=" + std::to_string(n));
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j < i ? j : j - 1);
}

RatVec tsp_solution_vector(int n, std::uint64_t s) {
    Permutation pi = permutation_unrank_lex(n, s);
    RatVec v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1), Rational(0));
    int prev = 0;
    for (int city : pi.images) {
        v[tsp_arc_index(prev, city, n)] = 1;
        prev = city;
    }
    v[tsp_arc_index(prev, 0, n)] = 1;
    return v;
}

RatVec ap_solution_vector(int n, std::uint64_t s) {
    Permutation pi = permutation_unrank_lex(n, s);
    RatVec v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= n; ++i) {
        const int j = pi.images[static_cast<std::size_t>(i - 1)];
        v[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(j - 1)] = 1;
    }
    return v;
}

const RilcopSpec& tsp_spec() {
    static const RilcopSpec spec(
        "tsp", [](int n) { return n * (n + 1); }, [](int n) { return factorial(n); },
        [](int n, std::uint64_t s) { return tsp_solution_vector(n, s); });
    return spec;
}

const RilcopSpec& ap_spec() {
    static const RilcopSpec spec(
        "ap", [](int n) { return n * n; }, [](int n) { return factorial(n); },
        [](int n, std::uint64_t s) { return ap_solution_vector(n, s); });
    return spec;
}

RilcopSpec table_spec(std::string name, int dim, std::vector<RatVec> vectors) {
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != dim) {
            throw DimensionError("table_spec: vector dimension mismatch");
        }
    }
    auto table = std::make_shared<std::vector<RatVec>>(std::move(vectors));
    return RilcopSpec(
        std::move(name), [dim](int) { return dim; },
        [table](int) { return static_cast<std::uint64_t>(table->size()); },
        [table](int, std::uint64_t s) { return (*table)[static_cast<std::size_t>(s)]; });
}

const RilcopSpec& spec_by_name(const std::string& name) {
    if (name == "tsp") return tsp_spec();
    if (name == "ap") return ap_spec();
    throw ValueError("unknown problem '" + name + "' (expected \"tsp\" or \"ap\")");
}

RatVec difference_query(const RilcopSpec& spec, int n, std::uint64_t s, std::uint64_t s_prime) {
    if (s == s_prime) throw RangeError("difference_query: solution indices must differ");
    return sub(spec.solution_vector(n, s), spec.solution_vector(n, s_prime));
}

Instance make_instance(const RilcopSpec& spec, int n, RatVec costs) {
    if (static_cast<int>(costs.size()) != spec.dimension(n)) {
        throw DimensionError("make_instance: costs have dimension " + std::to_string(costs.size()) +
                             ", expected " + std::to_string(spec.dimension(n)));
    }
    return Instance{spec, n, std::move(costs)};
}

Rational objective_value(const Instance& instance, std::uint64_t s) {
    return dot(instance.spec.solution_vector(instance.n, s), instance.costs);
}

std::vector<std::uint64_t> brute_force_optima(const Instance& instance,
                                              std::uint64_t enumeration_cap) {
    const std::uint64_t count = instance.spec.solution_count(instance.n);
    if (count > enumeration_cap) {
        throw SizeCapError("brute_force_optima: " + std::to_string(count) +
                           " solutions exceed the enumeration cap of " +
                           std::to_string(enumeration_cap));
    }
    std::vector<std::uint64_t> best;
    Rational best_value;
    for (std::uint64_t s = 0; s < count; ++s) {
        Rational v = objective_value(instance, s);
        if (best.empty() || v < best_value) {
            best_value = v;
            best.assign(1, s);
        } else if (v == best_value) {
            best.push_back(s);
        }
    }
    return best;
}

Instance prop2_interior_witness(int n) {
    if (n < 2) throw RangeError("prop2_interior_witness: n must be >= 2");
    RatVec costs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1), Rational(1));
    for (int i = 0; i <= n; ++i) {
        costs[tsp_arc_index(i, (i + 1) % (n + 1), n)] = 0;
    }
    return Instance{tsp_spec(), n, std::move(costs)};
}

Instance prop2_face_witness(int n, std::uint64_t s_prime) {
    if (n < 2) throw RangeError("prop2_face_witness: n must be >= 2");
    if (s_prime == 0 || s_prime >= factorial(n)) {
        throw RangeError("prop2_face_witness: s' must satisfy 1 <= s' < n!");
    }
    RatVec costs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1), Rational(1));
    for (std::uint64_t s : {std::uint64_t(0), s_prime}) {
        Permutation pi = permutation_unrank_lex(n, s);
        int prev = 0;
        for (int city : pi.images) {
            costs[tsp_arc_index(prev, city, n)] = 0;
            prev = city;
        }
        costs[tsp_arc_index(prev, 0, n)] = 0;
    }
    return Instance{tsp_spec(), n, std::move(costs)};
}

Instance random_instance(const RilcopSpec& spec, int n, SeededRng& rng,
                         const RandomRationalConfig& config) {
    const std::size_t d = static_cast<std::size_t>(spec.dimension(n));
    return Instance{spec, n,
                    rng.random_vector(d, config.numerator_range, config.denominator_bound)};
}

}  // namespace splinterlab
