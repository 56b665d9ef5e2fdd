#include "gk/spinor.hpp"

namespace gk {

namespace {

// Matrix of E -> E . psi(x): rows indexed by form masks, columns by the 4n
// section coordinates.
QMat spin_matrix_at(const Form& psi, const Point& x) {
    int n = psi.n();
    Form px = psi.eval_at(x);
    int rows = 1 << (2 * n);
    QMat m(rows, 4 * n);
    for (int col = 0; col < 4 * n; ++col) {
        Form img = col < 2 * n
                       ? interior_basis(px, col)
                       : wedge(Form::basis_oneform(n, col - 2 * n), px);
        for (auto& [mask, c] : img.components()) m.at((int)mask, col) = c.constant_term();
    }
    return m;
}

} // namespace

std::vector<QVec> spinor_kernel_at_point(const Form& psi, const Point& x) {
    int n = psi.n();
    if (psi.eval_at(x).is_zero())
        throw error("spinor kernel: form vanishes at the point");
    auto ker = qmat_kernel(spin_matrix_at(psi, x));
    if ((int)ker.size() != 2 * n)
        throw error("not a pure spinor at the point: kernel dimension " +
                    std::to_string(ker.size()));
    return ker;
}

bool spinor_is_pure_at(const Form& psi, const Point& x) {
    if (psi.eval_at(x).is_zero()) return false;
    return (int)qmat_kernel(spin_matrix_at(psi, x)).size() == 2 * psi.n();
}

bool spinor_is_nondegenerate_at(const Form& psi, const Point& x) {
    if (!spinor_is_pure_at(psi, x)) return false;
    auto ker = spinor_kernel_at_point(psi, x);
    std::vector<QVec> both = ker;
    for (auto& v : ker) both.push_back(qvec_conj(v));
    return span_rank(both) == 4 * psi.n();
}

int spinor_type_at(const Form& psi, const Point& x) {
    Form px = psi.eval_at(x);
    if (px.is_zero()) throw error("spinor type: form vanishes at the point");
    for (int k = 0; k <= 2 * psi.n(); ++k)
        if (!px.degree_part(k).is_zero()) return k;
    return 0;
}

QMat induced_Jpsi_at(const Form& psi, const Point& x) {
    int n = psi.n();
    auto ker = spinor_kernel_at_point(psi, x);
    std::vector<QVec> cols = ker;
    for (auto& v : ker) cols.push_back(qvec_conj(v));
    QMat p = QMat::from_columns(cols);
    if (qmat_rank(p) != 4 * n)
        throw error("induced structure: spinor is degenerate at the point");
    QMat d(4 * n, 4 * n);
    GaussRat I = GaussRat::i();
    for (int k = 0; k < 2 * n; ++k) {
        d.at(k, k) = -I;
        d.at(2 * n + k, 2 * n + k) = I;
    }
    return qmat_mul(p, qmat_mul(d, qmat_inverse(p)));
}

Form pullback_to_subspace(const Form& psi_at_x, const std::vector<QVec>& holo_tangent) {
    int n = psi_at_x.n();
    int m = (int)holo_tangent.size();
    std::vector<std::vector<GaussRat>> images(2 * n, std::vector<GaussRat>(2 * m));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            images[j][i] = holo_tangent[i][j];                  // dz_j -> w_i^j dz'_i
            images[n + j][m + i] = holo_tangent[i][j].conj();   // dzb_j -> conj
        }
    return substitute_coframe(psi_at_x, m, images);
}

} // namespace gk
