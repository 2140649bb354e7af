#pragma once

#include <optional>
#include <vector>

#include "acyb/scalar.hpp"

namespace acyb {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row major

inline Mat mat_zero(size_t rows, size_t cols) { return Mat(rows, Vec(cols)); }

inline Mat mat_identity(size_t n) {
    Mat m = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

inline Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t = mat_zero(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    Mat c = mat_zero(a.size(), b.empty() ? 0 : b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Row echelon in place; returns pivot columns.
inline std::vector<size_t> row_reduce(Mat& a) {
    std::vector<size_t> pivots;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Scalar inv = a[r][c].inv();
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t mat_rank(Mat a) { return row_reduce(a).size(); }

/// One solution of a x = b, or nullopt if inconsistent.
inline std::optional<Vec> solve(Mat a, Vec b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = row_reduce(a);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt; // pivot in rhs column
    Vec x(cols);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
    return x;
}

/// Basis of the right null space of a.
inline std::vector<Vec> nullspace(Mat a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = Scalar(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Mat mat_inverse(const Mat& a) {
    size_t n = a.size();
    Mat aug = a;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Scalar(1) : Scalar(0));
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() != n || (n && pivots.back() != n - 1)) throw SingularSystem();
    Mat inv = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace acyb
