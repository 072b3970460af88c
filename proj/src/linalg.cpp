#include "limitcones/linalg.hpp"

#include <stdexcept>

namespace limitcones {

QMatrix q_identity(size_t n) {
    QMatrix m(n, QVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<size_t> rref(QMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank_of(QMatrix m) { return rref(m).size(); }

size_t rank_of_ivecs(const std::vector<IVec>& rows) {
    QMatrix m;
    m.reserve(rows.size());
    for (const IVec& r : rows) m.push_back(to_rationals(r));
    return rank_of(std::move(m));
}

std::vector<IVec> nullspace(const std::vector<IVec>& rows, size_t ncols) {
    QMatrix m;
    m.reserve(rows.size());
    for (const IVec& r : rows) {
        if (r.size() != ncols) throw std::invalid_argument("nullspace: ragged input");
        m.push_back(to_rationals(r));
    }
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<IVec> basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(scale_to_integers(v));
    }
    return basis;
}

std::optional<QVec> solve_linear(QMatrix a, QVec b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(a);
    QVec x(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;  // pivot in the rhs column
        x[pivots[i]] = a[i][cols];
    }
    return x;
}

std::optional<QMatrix> inverse(QMatrix a) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse: not square");
        for (size_t j = 0; j < n; ++j) a[i].push_back(i == j ? 1 : 0);
    }
    std::vector<size_t> pivots = rref(a);
    if (pivots.size() != n) return std::nullopt;
    QMatrix inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

QVec matvec(const QMatrix& a, const QVec& x) {
    QVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

}  // namespace limitcones
