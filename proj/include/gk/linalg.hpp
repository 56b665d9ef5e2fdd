#pragma once

#include "gk/rational.hpp"

#include <optional>
#include <vector>

namespace gk {

using QVec = std::vector<GaussRat>;

/// Dense exact matrix over Gaussian rationals.  Elimination uses the first
/// nonzero pivot in column order, so results are deterministic.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<GaussRat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    GaussRat& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const GaussRat& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static QMat identity(int n);
    static QMat from_columns(const std::vector<QVec>& cols);
    QVec column(int c) const;
    QMat transpose() const;

    friend bool operator==(const QMat&, const QMat&) = default;
};

QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& v);
QMat qmat_add(const QMat& a, const QMat& b);
QMat qmat_sub(const QMat& a, const QMat& b);
QMat qmat_scale(const QMat& a, const GaussRat& c);

int qmat_rank(QMat m);
/// Basis of the right kernel (vectors of length cols).
std::vector<QVec> qmat_kernel(QMat m);
/// One exact solution of A x = b, or nullopt if inconsistent.
std::optional<QVec> qmat_solve(QMat a, QVec b);
QMat qmat_inverse(QMat m);

int span_rank(const std::vector<QVec>& vecs);
bool in_span(const std::vector<QVec>& basis, const QVec& v);
/// Basis of the intersection of two column spans.
std::vector<QVec> span_intersect(const std::vector<QVec>& a, const std::vector<QVec>& b);
QVec qvec_conj(const QVec& v);

} // namespace gk
