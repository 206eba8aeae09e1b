#include "tropgeo/linalg.hpp"

namespace tropgeo {

std::optional<RatVec> solve_linear(std::vector<RatVec> M, RatVec rhs) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    std::vector<int> pivot_col(m, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && M[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(M[sel], M[row]);
        std::swap(rhs[sel], rhs[row]);
        const Rat inv = 1 / M[row][col];
        for (std::size_t j = col; j < n; ++j) M[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || M[i][col] == 0) continue;
            const Rat f = M[i][col];
            for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (rhs[i] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

std::optional<IntVec> dual_covector(const IntVec& l) {
    const std::size_t n = l.size();
    IntVec coeffs(n, Int(0));
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (l[i] == 0) continue;
        if (g == 0) {
            // First nonzero entry: use its sign.
            coeffs[i] = l[i] > 0 ? 1 : -1;
            g = abs(l[i]);
            continue;
        }
        Int g2, a, b;
        mpz_gcdext(g2.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(),
                   l[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) coeffs[j] *= a;
        coeffs[i] = b;
        g = g2;
    }
    if (g != 1) return std::nullopt;
    // Shrink the Bezout coefficients by the orthogonal adjustment vectors
    // w_ij = l_j e_i - l_i e_j (these keep coeffs.l == 1). Greedy passes with
    // the exact nearest-multiple step; terminates because the norm decreases.
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                IntVec w(n, Int(0));
                w[i] = l[j];
                w[j] = -l[i];
                Int ww = dot(w, w);
                if (ww == 0) continue;
                Int cw = dot(coeffs, w);
                // q = round(cw / ww), ties toward zero.
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cw.get_mpz_t(), ww.get_mpz_t());
                if (2 * abs(r) > ww) q += (cw > 0 ? 1 : -1);
                if (q == 0) continue;
                // Apply only strictly norm-decreasing steps.
                if (q * (2 * cw - q * ww) <= 0) continue;
                for (std::size_t t = 0; t < n; ++t) coeffs[t] -= q * w[t];
                improved = true;
            }
        }
    }
    return coeffs;
}

} // namespace tropgeo
