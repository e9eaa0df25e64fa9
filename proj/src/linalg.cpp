#include "ehrhart/linalg.hpp"

#include <utility>

#include "ehrhart/errors.hpp"

namespace ehrhart {

Echelon row_reduce(RatMatrix m) {
    Echelon out;
    if (m.empty()) return out;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::size_t rank(const IntMatrix& m) {
    RatMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_rat(row));
    return rank(r);
}

std::vector<RatVec> nullspace(const RatMatrix& m, std::size_t cols) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& rhs) {
    if (m.size() != rhs.size()) throw InvalidArgument("solve: row count mismatch");
    if (m.empty()) return RatVec{};
    const std::size_t cols = m.front().size();
    RatMatrix aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
    const Echelon e = row_reduce(std::move(aug));
    RatVec x(cols, Rat(0));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] == cols) return std::nullopt;
        x[e.pivots[r]] = e.rows[r][cols];
    }
    return x;
}

Rat determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int lattice_index(const std::vector<IntVec>& vectors) {
    if (vectors.empty()) return 1;
    const std::size_t k = vectors.size();
    const std::size_t n = vectors.front().size();
    if (k > n) throw InvalidArgument("lattice_index: more vectors than coordinates");
    // Walk all k-subsets of coordinates; stop early once the gcd reaches 1.
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    Int g = 0;
    while (true) {
        IntMatrix minor(k, IntVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = vectors[j][rows[i]];
        g = gcd(g, determinant(minor));
        if (g == 1) return g;
        std::size_t i = k;
        while (i > 0 && rows[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
    }
    if (g == 0) throw InvalidArgument("lattice_index: vectors are linearly dependent");
    return g;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m.front().size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace ehrhart
