#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "splinterlab/rational.hpp"
#include "splinterlab/rng.hpp"

namespace splinterlab {

/// Images (pi(1),...,pi(n)) of a bijection on {1..n}.
struct Permutation {
    std::vector<int> images;
};

/// n! as a 64-bit value; n > 20 overflows and is rejected.
std::uint64_t factorial(int n);

/// The s-th permutation of {1..n} in lexicographic order; rank 0 is the
/// identity.
Permutation permutation_unrank_lex(int n, std::uint64_t s);
std::uint64_t permutation_rank_lex(const Permutation& p);

/// A problem family: instance dimension D(n), solution count S(n), and
/// the objective vector of each solution. Values are immutable; the
/// callables must be pure.
class RilcopSpec {
public:
    using DimFn = std::function<int(int)>;
    using CountFn = std::function<std::uint64_t(int)>;
    using VecFn = std::function<RatVec(int, std::uint64_t)>;

    RilcopSpec(std::string name, DimFn dimension, CountFn solution_count, VecFn solution_vector);

    const std::string& name() const { return name_; }
    int dimension(int n) const;
    std::uint64_t solution_count(int n) const;
    RatVec solution_vector(int n, std::uint64_t s) const;  // range-checked

private:
    std::string name_;
    DimFn dimension_;
    CountFn count_;
    VecFn vector_;
};

/// Tour problem on cities {0..n}: D(n) = n*(n+1), S(n) = n!. Instance
/// coordinates are ordered (0,1),...,(0,n),(1,0),(1,2),...,(n,n-1).
const RilcopSpec& tsp_spec();

/// Assignment problem: D(n) = n^2 (row-major cost matrix), S(n) = n!.
const RilcopSpec& ap_spec();

/// Fixed table of solution vectors, for tests and toy geometries.
RilcopSpec table_spec(std::string name, int dim, std::vector<RatVec> vectors);

/// Lookup by the stable external names "tsp" and "ap".
const RilcopSpec& spec_by_name(const std::string& name);

/// Flat index of arc (i,j), i != j, in the tour coordinate convention.
std::size_t tsp_arc_index(int i, int j, int n);

RatVec tsp_solution_vector(int n, std::uint64_t s);
RatVec ap_solution_vector(int n, std::uint64_t s);

/// x(n,s) - x(n,s'); the two indices must differ.
RatVec difference_query(const RilcopSpec& spec, int n, std::uint64_t s, std::uint64_t s_prime);

struct Instance {
    RilcopSpec spec;
    int n = 0;
    RatVec costs;
};

Instance make_instance(const RilcopSpec& spec, int n, RatVec costs);

Rational objective_value(const Instance& instance, std::uint64_t s);

inline constexpr std::uint64_t kDefaultEnumerationCap = 40320;

/// All solution indices attaining the minimum objective. Refuses sizes
/// whose solution count exceeds the cap.
std::vector<std::uint64_t> brute_force_optima(const Instance& instance,
                                              std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Tour instance with zero cost on the identity tour's arcs and cost one
/// elsewhere; the identity tour is its unique strict optimum.
Instance prop2_interior_witness(int n);

/// Tour instance with zero cost on the arcs used by tour 0 or tour
/// s_prime and cost one elsewhere, tying the two tours at zero.
Instance prop2_face_witness(int n, std::uint64_t s_prime);

struct RandomRationalConfig {
    long long numerator_range = 100;
    long long denominator_bound = 10;
};

Instance random_instance(const RilcopSpec& spec, int n, SeededRng& rng,
                         const RandomRationalConfig& config = {});

}  // namespace splinterlab
