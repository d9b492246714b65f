#pragma once

#include "operjet/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace operjet {

using MatQ = std::vector<VecQ>;  // row-major

inline MatQ identity_matrix(size_t n) {
    MatQ m(n, VecQ(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Row-reduce [A | tail] in place; returns pivot columns of A.
inline std::vector<size_t> row_reduce(MatQ& m, size_t a_cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < a_cols && row < m.size(); ++col) {
        size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Solve A x = b exactly; nullopt when inconsistent.  If the system is
// underdetermined the free variables are set to zero.
inline std::optional<VecQ> solve_linear(const MatQ& a, const VecQ& b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
    MatQ m(rows);
    for (size_t r = 0; r < rows; ++r) {
        m[r] = a[r];
        m[r].push_back(b[r]);
    }
    auto pivots = row_reduce(m, cols);
    for (size_t r = pivots.size(); r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;
    VecQ x(cols, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols];
    return x;
}

// Basis of the kernel of A.
inline std::vector<VecQ> nullspace(const MatQ& a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    MatQ m = a;
    auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols, Rational(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline MatQ invert_matrix(const MatQ& a) {
    size_t n = a.size();
    MatQ m(n);
    for (size_t r = 0; r < n; ++r) {
        if (a[r].size() != n) throw std::invalid_argument("invert_matrix: not square");
        m[r] = a[r];
        for (size_t c = 0; c < n; ++c) m[r].push_back(r == c ? Rational(1) : Rational(0));
    }
    auto pivots = row_reduce(m, n);
    if (pivots.size() != n) throw std::domain_error("invert_matrix: singular matrix");
    MatQ inv(n, VecQ(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
    return inv;
}

inline VecQ mat_apply(const MatQ& a, const VecQ& x) {
    VecQ y(a.size(), Rational(0));
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < x.size(); ++c)
            if (a[r][c] != 0 && x[c] != 0) y[r] += a[r][c] * x[c];
    return y;
}

}  // namespace operjet
