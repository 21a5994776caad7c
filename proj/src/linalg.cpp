#include "splinterlab/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "splinterlab/errors.hpp"

namespace splinterlab {

namespace {

void require_same_dim(const RatVec& a, const RatVec& b, const char* op) {
    if (a.size() != b.size()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

}  // namespace

Rational dot(const RatVec& a, const RatVec& b) {
    require_same_dim(a, b, "dot");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    }
    return acc;
}

RatVec add(const RatVec& a, const RatVec& b) {
    require_same_dim(a, b, "add");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    require_same_dim(a, b, "sub");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec scaled(const RatVec& v, const Rational& factor) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
    return out;
}

RatVec negated(const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

Rational component_sum(const RatVec& v) {
    Rational acc = 0;
    for (const auto& x : v) acc += x;
    return acc;
}

bool is_zero_vector(const RatVec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

std::size_t rank(const std::vector<RatVec>& rows) {
    if (rows.empty()) throw RangeError("rank: empty matrix");
    const std::size_t n_cols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != n_cols) throw DimensionError("rank: rows of unequal dimension");
    }

    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(n_cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Integer lcm_den = 1;
        for (const auto& x : rows[i]) lcm_den = lcm(lcm_den, denominator(x));
        for (std::size_t j = 0; j < n_cols; ++j) {
            m[i][j] = numerator(rows[i][j]) * (lcm_den / denominator(rows[i][j]));
        }
    }

    Integer prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < n_cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev_pivot;
            }
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return r;
}

std::optional<Rational> proportionality_factor(const RatVec& a, const RatVec& b) {
    require_same_dim(a, b, "proportionality_factor");
    if (is_zero_vector(b)) throw ValueError("proportionality_factor: b is the zero vector");
    if (is_zero_vector(a)) return std::nullopt;
    std::size_t k = 0;
    while (b[k] == 0) ++k;
    if (a[k] == 0) return std::nullopt;
    Rational lambda = a[k] / b[k];
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != lambda * b[i]) return std::nullopt;
    }
    return lambda;
}

}  // namespace splinterlab
