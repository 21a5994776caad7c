#include "splinterlab/simplex.hpp"

#include <algorithm>
#include <cstddef>

#include "splinterlab/errors.hpp"

namespace splinterlab::lp {

namespace {

constexpr int kStallThreshold = 32;

class Tableau {
public:
    Tableau(const RatVec& objective, const std::vector<RatVec>& rows,
            const std::vector<Sense>& senses, const RatVec& rhs)
        : n_struct_(objective.size()) {
        const std::size_t m = rows.size();
        if (senses.size() != m || rhs.size() != m) {
            throw DimensionError("simplex: rows, senses, and rhs must have equal length");
        }
        for (const auto& r : rows) {
            if (r.size() != n_struct_) throw DimensionError("simplex: row dimension mismatch");
        }

        std::size_t n_slack = 0;
        for (auto s : senses) {
            if (s == Sense::LessEq) ++n_slack;
        }
        // Artificials: equalities, and <= rows whose rhs is negative
        // (their slack basis would start infeasible).
        std::size_t n_art = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (senses[i] == Sense::Equal || rhs[i] < 0) ++n_art;
        }
        slack_begin_ = n_struct_;
        art_begin_ = n_struct_ + n_slack;
        n_cols_ = art_begin_ + n_art;

        rows_.assign(m, RatVec(n_cols_ + 1, Rational(0)));
        basis_.assign(m, 0);
        costs_ = objective;

        std::size_t slack_at = slack_begin_;
        std::size_t art_at = art_begin_;
        for (std::size_t i = 0; i < m; ++i) {
            const bool flip = rhs[i] < 0;
            for (std::size_t j = 0; j < n_struct_; ++j) {
                rows_[i][j] = flip ? -rows[i][j] : rows[i][j];
            }
            rows_[i][n_cols_] = flip ? -rhs[i] : rhs[i];
            if (senses[i] == Sense::LessEq) {
                rows_[i][slack_at] = flip ? Rational(-1) : Rational(1);
                if (!flip) basis_[i] = slack_at;
                ++slack_at;
            }
            if (senses[i] == Sense::Equal || flip) {
                rows_[i][art_at] = 1;
                basis_[i] = art_at;
                ++art_at;
            }
        }
    }

    bool has_artificials() const { return n_cols_ > art_begin_; }

    /// Phase 1: maximize minus the artificial sum. Returns true when the
    /// original constraints are feasible.
    bool run_phase1() {
        RatVec phase_costs(n_cols_, Rational(0));
        for (std::size_t j = art_begin_; j < n_cols_; ++j) phase_costs[j] = -1;
        build_objective(phase_costs, /*allow_artificial=*/true);
        Status st = pivot_loop(/*allow_artificial=*/true);
        if (st != Status::Optimal) {
            throw InternalError("simplex: phase 1 cannot be unbounded");
        }
        if (objective_value() < 0) return false;
        expel_artificials();
        return true;
    }

    Status run_phase2() {
        build_objective(costs_, /*allow_artificial=*/false);
        return pivot_loop(/*allow_artificial=*/false);
    }

    Rational objective_value() const { return -obj_[n_cols_]; }

    RatVec structural_solution() const {
        RatVec x(n_struct_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < n_struct_) x[basis_[i]] = rows_[i][n_cols_];
        }
        return x;
    }

private:
    void build_objective(const RatVec& costs, bool allow_artificial) {
        obj_.assign(n_cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < costs.size(); ++j) obj_[j] = costs[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational cb(0);
            if (basis_[i] < costs.size()) {
                cb = costs[basis_[i]];
            } else if (allow_artificial && basis_[i] >= art_begin_) {
                cb = -1;
            }
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= n_cols_; ++j) {
                if (rows_[i][j] != 0) obj_[j] -= cb * rows_[i][j];
            }
        }
    }

    Status pivot_loop(bool allow_artificial) {
        bool bland = false;
        int stall = 0;
        for (;;) {
            const std::size_t enter = choose_entering(allow_artificial, bland);
            if (enter == n_cols_) return Status::Optimal;

            std::size_t leave = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][n_cols_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_.size()) return Status::Unbounded;

            pivot(leave, enter);
            if (best_ratio == 0) {
                if (++stall >= kStallThreshold) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
        }
    }

    std::size_t choose_entering(bool allow_artificial, bool bland) const {
        const std::size_t limit = allow_artificial ? n_cols_ : art_begin_;
        std::size_t best = n_cols_;
        for (std::size_t j = 0; j < limit; ++j) {
            if (obj_[j] <= 0) continue;
            if (bland) return j;
            if (best == n_cols_ || obj_[j] > obj_[best]) best = j;
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col) {
        RatVec& pr = rows_[row];
        const Rational piv = pr[col];
        if (piv != 1) {
            for (auto& x : pr) {
                if (x != 0) x /= piv;
            }
        }
        pr[col] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            eliminate(rows_[i], pr, col);
        }
        eliminate(obj_, pr, col);
        basis_[row] = col;
    }

    static void eliminate(RatVec& target, const RatVec& pivot_row, std::size_t col) {
        const Rational factor = target[col];
        if (factor == 0) return;
        for (std::size_t j = 0; j < target.size(); ++j) {
            if (pivot_row[j] != 0) target[j] -= factor * pivot_row[j];
        }
        target[col] = 0;
    }

    /// After a feasible phase 1, pivot artificials out of the basis with
    /// degenerate pivots; rows that are zero over the real columns are
    /// redundant and get dropped.
    void expel_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < art_begin_) {
                ++i;
                continue;
            }
            std::size_t col = n_cols_;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == n_cols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, col);
                ++i;
            }
        }
    }

    std::size_t n_struct_;
    std::size_t slack_begin_ = 0;
    std::size_t art_begin_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<RatVec> rows_;
    RatVec obj_;
    RatVec costs_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Result maximize(const RatVec& objective, const std::vector<RatVec>& rows,
                const std::vector<Sense>& senses, const RatVec& rhs) {
    Tableau tableau(objective, rows, senses, rhs);
    if (tableau.has_artificials() && !tableau.run_phase1()) {
        return {Status::Infeasible, Rational(0), {}};
    }
    Status st = tableau.run_phase2();
    if (st != Status::Optimal) return {st, Rational(0), {}};
    return {Status::Optimal, tableau.objective_value(), tableau.structural_solution()};
}

}  // namespace splinterlab::lp
