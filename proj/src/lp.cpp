#include "nubar/lp.hpp"

#include <algorithm>

#include "nubar/errors.hpp"

namespace nubar {

namespace {

// Dense tableau. Columns 0..ncols-1 are variables (structural, slack, and
// optionally one artificial), column ncols is the right-hand side. The
// objective row stores z = obj[ncols] + sum obj[j] * x_j over nonbasic j.
class Tableau {
  public:
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
            bool with_artificial)
        : m_(A.size()), n_(A.empty() ? 0 : A[0].size()),
          art_(with_artificial ? static_cast<int>(n_ + m_) : -1),
          ncols_(n_ + m_ + (with_artificial ? 1 : 0)) {
        rows_.assign(m_, std::vector<Rational>(ncols_ + 1, Rational(0)));
        basis_.resize(m_);
        enabled_.assign(ncols_, true);
        for (size_t i = 0; i < m_; ++i) {
            for (size_t j = 0; j < n_; ++j) rows_[i][j] = A[i][j];
            rows_[i][n_ + i] = Rational(1);
            if (with_artificial) rows_[i][art_] = Rational(-1);
            rows_[i][ncols_] = b[i];
            basis_[i] = static_cast<int>(n_ + i);
        }
    }

    size_t structural_count() const { return n_; }
    int artificial() const { return art_; }

    void disable(int col) { enabled_[col] = false; }

    void set_objective(const std::vector<Rational>& c) {
        obj_.assign(ncols_ + 1, Rational(0));
        for (size_t j = 0; j < c.size(); ++j) obj_[j] = c[j];
        // Substitute away the current basic variables.
        for (size_t r = 0; r < m_; ++r) eliminate_from_objective(r);
    }

    void pivot(size_t r, int j) {
        Rational piv = rows_[r][j];
        for (auto& v : rows_[r]) v /= piv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][j].is_zero()) continue;
            Rational f = rows_[i][j];
            for (size_t k = 0; k <= ncols_; ++k) rows_[i][k] -= f * rows_[r][k];
        }
        basis_[r] = j;
        eliminate_from_objective(r);
    }

    // Bland's rule loop; returns false when unbounded.
    bool optimize() {
        for (;;) {
            int enter = -1;
            for (size_t j = 0; j < ncols_; ++j) {
                if (!enabled_[j]) continue;
                if (obj_[j] > Rational(0)) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (size_t i = 0; i < m_; ++i) {
                if (!(rows_[i][enter] > Rational(0))) continue;
                Rational ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<size_t>(leave), enter);
        }
    }

    Rational objective_value() const { return obj_[ncols_]; }

    const std::vector<int>& basis() const { return basis_; }
    const Rational& rhs(size_t r) const { return rows_[r][ncols_]; }
    const Rational& at(size_t r, size_t j) const { return rows_[r][j]; }
    size_t row_count() const { return m_; }

    std::vector<Rational> structural_solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (size_t r = 0; r < m_; ++r)
            if (basis_[r] >= 0 && static_cast<size_t>(basis_[r]) < n_)
                x[basis_[r]] = rows_[r][ncols_];
        return x;
    }

    // Force the artificial variable out of the basis after phase one. A row
    // where it sits basic at value zero either admits a pivot on some enabled
    // column or reads 0 = 0 and is inert.
    void evict_artificial() {
        for (size_t r = 0; r < m_; ++r) {
            if (basis_[r] != art_) continue;
            int col = -1;
            for (size_t j = 0; j < ncols_; ++j) {
                if (static_cast<int>(j) == art_) continue;
                if (!rows_[r][j].is_zero()) {
                    col = static_cast<int>(j);
                    break;
                }
            }
            if (col >= 0) {
                pivot(r, col);
            } else {
                basis_[r] = -1;
            }
        }
    }

  private:
    void eliminate_from_objective(size_t r) {
        if (obj_.empty() || basis_[r] < 0) return;
        Rational d = obj_[basis_[r]];
        if (d.is_zero()) return;
        for (size_t k = 0; k < ncols_; ++k) obj_[k] -= d * rows_[r][k];
        obj_[ncols_] += d * rows_[r][ncols_];
    }

    size_t m_, n_;
    int art_;
    size_t ncols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> obj_;
    std::vector<int> basis_;
    std::vector<bool> enabled_;
};

} // namespace

LpResult simplex_max(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b, const std::vector<Rational>& c) {
    if (A.size() != b.size())
        fail(ErrorCode::DimensionMismatch, "LP row count mismatch");
    size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) fail(ErrorCode::DimensionMismatch, "LP column count mismatch");

    bool need_phase1 = false;
    for (const auto& bi : b)
        if (bi < Rational(0)) need_phase1 = true;

    Tableau t(A, b, need_phase1);
    if (need_phase1) {
        std::vector<Rational> phase1(n + A.size() + 1, Rational(0));
        phase1[t.artificial()] = Rational(-1);
        t.set_objective(phase1);
        // First pivot brings the artificial in on the most negative row,
        // making every right-hand side nonnegative.
        size_t worst = 0;
        for (size_t i = 1; i < A.size(); ++i)
            if (t.rhs(i) < t.rhs(worst)) worst = i;
        t.pivot(worst, t.artificial());
        bool bounded = t.optimize();
        check(bounded, "phase-one objective is bounded by construction");
        if (t.objective_value() < Rational(0))
            return {LpStatus::Infeasible, Rational(0), {}};
        t.evict_artificial();
        t.disable(t.artificial());
    }

    std::vector<Rational> obj(c);
    obj.resize(n + A.size() + (need_phase1 ? 1 : 0), Rational(0));
    t.set_objective(obj);
    if (!t.optimize()) return {LpStatus::Unbounded, Rational(0), {}};
    return {LpStatus::Optimal, t.objective_value(), t.structural_solution()};
}

bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                 const std::vector<Rational>& b) {
    std::vector<Rational> c(A.empty() ? 0 : A[0].size(), Rational(0));
    return simplex_max(A, b, c).status == LpStatus::Optimal;
}

} // namespace nubar
