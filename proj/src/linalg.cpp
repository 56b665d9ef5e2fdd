#include "gk/linalg.hpp"

namespace gk {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols) {
    if (cols.empty()) return QMat(0, 0);
    QMat m((int)cols[0].size(), (int)cols.size());
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
    return m;
}

QVec QMat::column(int c) const {
    QVec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

QMat QMat::transpose() const {
    QMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    if (a.cols != b.rows) throw error("matrix shape mismatch");
    QMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

QVec qmat_apply(const QMat& a, const QVec& v) {
    if (a.cols != (int)v.size()) throw error("matrix shape mismatch");
    QVec r(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (!a.at(i, j).is_zero()) r[i] += a.at(i, j) * v[j];
    return r;
}

QMat qmat_add(const QMat& a, const QMat& b) {
    QMat r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += b.a[i];
    return r;
}

QMat qmat_sub(const QMat& a, const QMat& b) {
    QMat r = a;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= b.a[i];
    return r;
}

QMat qmat_scale(const QMat& a, const GaussRat& c) {
    QMat r = a;
    for (auto& x : r.a) x *= c;
    return r;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> eliminate(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        GaussRat d = m.at(row, col).inv();
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= d;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            GaussRat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int qmat_rank(QMat m) { return (int)eliminate(m).size(); }

std::vector<QVec> qmat_kernel(QMat m) {
    int cols = m.cols;
    auto pivots = eliminate(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols);
        v[free] = GaussRat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at((int)r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> qmat_solve(QMat a, QVec b) {
    int cols = a.cols;
    QMat aug(a.rows, cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, cols) = b[r];
    }
    auto pivots = eliminate(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at((int)r, cols);
    return x;
}

QMat qmat_inverse(QMat m) {
    if (m.rows != m.cols) throw error("inverse of non-square matrix");
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = GaussRat(1);
    }
    auto pivots = eliminate(aug);
    if ((int)pivots.size() != n || pivots[n - 1] != n - 1)
        throw error("matrix is singular");
    QMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

int span_rank(const std::vector<QVec>& vecs) {
    if (vecs.empty()) return 0;
    return qmat_rank(QMat::from_columns(vecs));
}

bool in_span(const std::vector<QVec>& basis, const QVec& v) {
    if (basis.empty()) {
        for (auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    return qmat_solve(QMat::from_columns(basis), v).has_value();
}

std::vector<QVec> span_intersect(const std::vector<QVec>& a, const std::vector<QVec>& b) {
    if (a.empty() || b.empty()) return {};
    int dim = (int)a[0].size();
    QMat m(dim, (int)(a.size() + b.size()));
    for (size_t c = 0; c < a.size(); ++c)
        for (int r = 0; r < dim; ++r) m.at(r, (int)c) = a[c][r];
    for (size_t c = 0; c < b.size(); ++c)
        for (int r = 0; r < dim; ++r) m.at(r, (int)(a.size() + c)) = -b[c][r];
    std::vector<QVec> out;
    for (auto& k : qmat_kernel(std::move(m))) {
        QVec v(dim);
        bool nonzero = false;
        for (size_t c = 0; c < a.size(); ++c)
            for (int r = 0; r < dim; ++r) {
                if (k[c].is_zero()) continue;
                v[r] += k[c] * a[c][r];
            }
        for (auto& x : v)
            if (!x.is_zero()) nonzero = true;
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

QVec qvec_conj(const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

} // namespace gk
