#include "tropgeo/lp.hpp"

#include <cassert>

namespace tropgeo::lp {
namespace {

// Dense tableau over exact rationals for the equality-form problem
//   maximize obj.z  subject to  M z = rhs,  z >= 0,
// solved in two phases. Bland's rule guarantees termination.
class Tableau {
  public:
    Tableau(std::vector<RatVec> rows, RatVec rhs) : rows_(std::move(rows)), rhs_(std::move(rhs)) {
        m_ = rows_.size();
        n_ = m_ ? rows_[0].size() : 0;
        basis_.assign(m_, -1);
    }

    std::size_t cols() const { return n_; }

    // Phase 1: append artificial columns, minimize their sum.
    bool make_feasible() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (rhs_[r] < 0) {
                for (Rat& a : rows_[r]) a = -a;
                rhs_[r] = -rhs_[r];
            }
        }
        std::size_t art0 = n_;
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t k = 0; k < m_; ++k) rows_[r].push_back(r == k ? Rat(1) : Rat(0));
            basis_[r] = static_cast<int>(art0 + r);
        }
        n_ += m_;
        obj_.assign(n_, Rat(0));
        for (std::size_t j = art0; j < n_; ++j) obj_[j] = -1;
        obj_val_ = 0;
        reduce_objective();
        run();
        if (obj_val_ != 0) return false;
        // Pivot remaining artificials out of the basis; a row with no
        // eligible pivot column is a redundant constraint and is dropped.
        for (std::size_t r = 0; r < m_;) {
            if (basis_[r] < static_cast<int>(art0)) {
                ++r;
                continue;
            }
            std::size_t piv = art0;
            for (std::size_t j = 0; j < art0; ++j) {
                if (rows_[r][j] != 0) {
                    piv = j;
                    break;
                }
            }
            if (piv == art0) {
                rows_.erase(rows_.begin() + r);
                rhs_.erase(rhs_.begin() + r);
                basis_.erase(basis_.begin() + r);
                --m_;
            } else {
                pivot(r, piv);
                ++r;
            }
        }
        for (std::size_t r = 0; r < m_; ++r) rows_[r].resize(art0);
        n_ = art0;
        return true;
    }

    // Phase 2 for the given objective. Returns false when unbounded.
    bool optimize(const RatVec& objective) {
        obj_ = objective;
        obj_.resize(n_, Rat(0));
        obj_val_ = 0;
        reduce_objective();
        return run();
    }

    Rat objective_value() const { return obj_val_; }

    RatVec solution() const {
        RatVec z(n_, Rat(0));
        for (std::size_t r = 0; r < m_; ++r) z[basis_[r]] = rhs_[r];
        return z;
    }

  private:
    void reduce_objective() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < 0) continue;
            const Rat coef = obj_[basis_[r]];
            if (coef == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) obj_[j] -= coef * rows_[r][j];
            obj_val_ += coef * rhs_[r];
        }
    }

    void pivot(std::size_t r, std::size_t col) {
        const Rat inv = 1 / rows_[r][col];
        for (std::size_t j = 0; j < n_; ++j) rows_[r][j] *= inv;
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][col] == 0) continue;
            const Rat f = rows_[i][col];
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] -= f * rows_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (obj_[col] != 0) {
            const Rat f = obj_[col];
            for (std::size_t j = 0; j < n_; ++j) obj_[j] -= f * rows_[r][j];
            obj_val_ += f * rhs_[r];
        }
        basis_[r] = static_cast<int>(col);
    }

    bool run() {
        for (;;) {
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (obj_[j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n_) return true;
            std::size_t leave = m_;
            Rat best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (rows_[r][enter] <= 0) continue;
                Rat ratio = rhs_[r] / rows_[r][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    std::vector<RatVec> rows_;
    RatVec rhs_;
    RatVec obj_;
    Rat obj_val_;
    std::vector<int> basis_;
    std::size_t m_ = 0, n_ = 0;
};

// Builds the equality-form tableau for A x <= b with free x: columns are
// (u, v, slacks) with x = u - v.
Tableau build(const std::vector<RatVec>& A, const RatVec& b, std::size_t nvars) {
    const std::size_t m = A.size();
    std::vector<RatVec> rows(m, RatVec(2 * nvars + m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != nvars) throw DimensionError("lp: ragged constraint matrix");
        for (std::size_t j = 0; j < nvars; ++j) {
            rows[i][j] = A[i][j];
            rows[i][nvars + j] = -A[i][j];
        }
        rows[i][2 * nvars + i] = 1;
    }
    return Tableau(std::move(rows), b);
}

RatVec extract_x(const RatVec& z, std::size_t nvars) {
    RatVec x(nvars);
    for (std::size_t j = 0; j < nvars; ++j) x[j] = z[j] - z[nvars + j];
    return x;
}

std::size_t infer_nvars(const std::vector<RatVec>& A, const RatVec& c) {
    std::size_t n = c.size();
    for (const RatVec& row : A) n = std::max(n, row.size());
    return n;
}

} // namespace

Result maximize(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c) {
    if (A.size() != b.size()) throw DimensionError("lp: |A| != |b|");
    const std::size_t n = infer_nvars(A, c);
    Tableau t = build(A, b, n);
    if (!t.make_feasible()) return {Status::Infeasible, Rat(0), {}};
    RatVec obj(2 * n + A.size(), Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
        obj[j] = c[j];
        obj[n + j] = -c[j];
    }
    if (!t.optimize(obj)) return {Status::Unbounded, Rat(0), extract_x(t.solution(), n)};
    return {Status::Optimal, t.objective_value(), extract_x(t.solution(), n)};
}

std::optional<RatVec> feasible_point(const std::vector<RatVec>& A, const RatVec& b) {
    if (A.size() != b.size()) throw DimensionError("lp: |A| != |b|");
    const std::size_t n = infer_nvars(A, {});
    Tableau t = build(A, b, n);
    if (!t.make_feasible()) return std::nullopt;
    return extract_x(t.solution(), n);
}

std::optional<RatVec> strict_feasible_point(const std::vector<RatVec>& A, const RatVec& b,
                                            const std::vector<bool>& strict) {
    if (A.size() != strict.size()) throw DimensionError("lp: |A| != |strict|");
    std::size_t n = 0;
    for (const RatVec& row : A) n = std::max(n, row.size());
    // Variables (x, eps): strict rows become a.x + eps <= b, plus eps <= 1.
    std::vector<RatVec> A2;
    RatVec b2;
    A2.reserve(A.size() + 1);
    for (std::size_t i = 0; i < A.size(); ++i) {
        RatVec row = A[i];
        row.resize(n + 1, Rat(0));
        if (strict[i]) row[n] = 1;
        A2.push_back(std::move(row));
        b2.push_back(b[i]);
    }
    RatVec cap(n + 1, Rat(0));
    cap[n] = 1;
    A2.push_back(cap);
    b2.push_back(Rat(1));
    RatVec c(n + 1, Rat(0));
    c[n] = 1;
    Result r = maximize(A2, b2, c);
    if (r.status != Status::Optimal || r.value <= 0) return std::nullopt;
    r.x.resize(n);
    return r.x;
}

} // namespace tropgeo::lp
