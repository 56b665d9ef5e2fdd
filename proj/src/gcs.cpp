#include "gk/gcs.hpp"

#include <functional>

namespace gk {

PMat PMat::identity(int n) {
    PMat m(n);
    for (int i = 0; i < 4 * n; ++i) m.at(i, i) = PolyScalar::one(n);
    return m;
}

PMat PMat::from_qmat(int n, const QMat& q) {
    PMat m(n);
    for (int r = 0; r < 4 * n; ++r)
        for (int c = 0; c < 4 * n; ++c)
            m.at(r, c) = PolyScalar::constant(n, q.at(r, c));
    return m;
}

PMat PMat::operator+(const PMat& o) const {
    PMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

PMat PMat::operator-(const PMat& o) const {
    PMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

PMat PMat::scaled(const GaussRat& c) const {
    PMat r = *this;
    for (auto& x : r.a) x = x.scaled(c);
    return r;
}

QMat PMat::eval_at(const Point& x) const {
    QMat q(dim(), dim());
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c) q.at(r, c) = at(r, c).eval(x);
    return q;
}

bool PMat::is_zero() const {
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

PMat pmat_mul(const PMat& a, const PMat& b) {
    if (a.n != b.n) throw error("chart dimension mismatch");
    PMat r(a.n);
    int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const PolyScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

QMat pairing_qmat(int n) {
    QMat p(4 * n, 4 * n);
    GaussRat half{Rat(1, 2)};
    for (int a = 0; a < 2 * n; ++a) {
        p.at(a, 2 * n + a) = half;
        p.at(2 * n + a, a) = half;
    }
    return p;
}

bool gcs_axioms_hold(const PMat& m) {
    int n = m.n;
    PMat sq = pmat_mul(m, m);
    PMat minus_id = PMat::identity(n).scaled(GaussRat(-1));
    if (!(sq == minus_id)) return false;
    PMat p = PMat::from_qmat(n, pairing_qmat(n));
    PMat mt(n);
    for (int r = 0; r < 4 * n; ++r)
        for (int c = 0; c < 4 * n; ++c) mt.at(r, c) = m.at(c, r);
    return pmat_mul(mt, pmat_mul(p, m)) == p;
}

GCStructure::GCStructure(int nn, PMat mm, bool check) : n(nn), m(std::move(mm)) {
    if (check && !gcs_axioms_hold(m))
        throw error("matrix is not a generalized complex structure");
}

GCStructure GCSeries::at_t(const Rat& t) const {
    PMat acc = m.c[0];
    Rat pw(1);
    for (int k = 1; k <= m.order; ++k) {
        pw *= t;
        acc = acc + m.c[k].scaled(GaussRat(pw));
    }
    return GCStructure(n, std::move(acc));
}

namespace {

// J on vectors: diag(i, -i); on covectors -J* = diag(-i, +i).
PMat jj_matrix(int n) {
    PMat m(n);
    GaussRat I = GaussRat::i();
    for (int j = 0; j < n; ++j) {
        m.at(j, j) = PolyScalar::constant(n, I);
        m.at(n + j, n + j) = PolyScalar::constant(n, -I);
        m.at(2 * n + j, 2 * n + j) = PolyScalar::constant(n, -I);
        m.at(3 * n + j, 3 * n + j) = PolyScalar::constant(n, I);
    }
    return m;
}

} // namespace

GCStructure make_JJ(int n) { return GCStructure(n, jj_matrix(n)); }

GCStructure make_Jomega(const Form& omega) {
    int n = omega.n();
    int deg;
    if (!omega.is_homogeneous(&deg) || deg != 2 || !omega.is_real())
        throw error("make_Jomega needs a real 2-form");
    // W: T -> T*, v -> i_v omega
    QMat w(2 * n, 2 * n);
    for (int col = 0; col < 2 * n; ++col) {
        Form iv = interior_basis(omega, col);
        for (int row = 0; row < 2 * n; ++row) {
            PolyScalar c = iv.component(Mask(1) << row);
            if (!c.is_constant()) throw error("make_Jomega needs constant coefficients");
            w.at(row, col) = c.constant_term();
        }
    }
    QMat winv;
    try {
        winv = qmat_inverse(w);
    } catch (const error&) {
        throw error("make_Jomega: omega is degenerate");
    }
    PMat m(n);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) {
            m.at(r, 2 * n + c) = PolyScalar::constant(n, -winv.at(r, c));
            m.at(2 * n + r, c) = PolyScalar::constant(n, w.at(r, c));
        }
    return GCStructure(n, std::move(m));
}

namespace {

GCSeries make_beta_series(const Polyvector& beta, int order, bool check) {
    if (check && !is_poisson(beta)) throw error("bivector is not Poisson");
    int n = beta.n();
    Polyvector a = beta + beta.conj();
    // ahat: T* -> T, theta -> i_theta(a), as a full matrix supported on the
    // upper-right block
    PMat ahat(n);
    for (int col = 0; col < 2 * n; ++col) {
        Polyvector img = bivector_on_oneform(a, Form::basis_oneform(n, col));
        for (int row = 0; row < 2 * n; ++row)
            ahat.at(row, 2 * n + col) = img.component(Mask(1) << row);
    }
    PMat jj = jj_matrix(n);
    // J ahat + ahat (J*): the lower-right of jj is -J*, so the second
    // product needs a sign flip
    PMat jahat_plus_ahatjs = pmat_mul(jj, ahat) - pmat_mul(ahat, jj);
    GCSeries s;
    s.n = n;
    s.m = TSeries<PMat>(order, PMat(n));
    s.m.c[0] = jj;
    if (order >= 1) s.m.c[1] = jahat_plus_ahatjs.scaled(GaussRat(-1));
    return s;
}

} // namespace

GCSeries make_J_beta_t(const Polyvector& beta, int order) {
    return make_beta_series(beta, order, true);
}

GCSeries make_J_bivector_unchecked(const Polyvector& beta, int order) {
    return make_beta_series(beta, order, false);
}

PMat ad_exp_matrix(const CliffordElem& x) {
    int n = x.n();
    PMat m(n);
    for (int col = 0; col < 4 * n; ++col) {
        GenSection e(n);
        if (col < 2 * n)
            e.vec = Polyvector::basis_vector(n, col);
        else
            e.one = Form::basis_oneform(n, col - 2 * n);
        auto img = adjoint_on_section(x, e).coords();
        for (int row = 0; row < 4 * n; ++row) m.at(row, col) = img[row];
    }
    return m;
}

TSeries<PMat> gcs_conjugate_series(const GCStructure& j, const CliffordSeries& x) {
    int n = j.n;
    int T = x.order;
    TSeries<PMat> mpos(T, PMat(n)), mneg(T, PMat(n));
    CliffordSeries xneg = x;
    for (auto& c : xneg.c) c = -c;
    for (int col = 0; col < 4 * n; ++col) {
        GenSection e(n);
        if (col < 2 * n)
            e.vec = Polyvector::basis_vector(n, col);
        else
            e.one = Form::basis_oneform(n, col - 2 * n);
        auto imgs = adjoint_series_on_section(x, e);
        auto imgs_neg = adjoint_series_on_section(xneg, e);
        for (int k = 0; k <= T; ++k) {
            auto cp = imgs.c[k].coords();
            auto cn = imgs_neg.c[k].coords();
            for (int row = 0; row < 4 * n; ++row) {
                mpos.c[k].at(row, col) = cp[row];
                mneg.c[k].at(row, col) = cn[row];
            }
        }
    }
    TSeries<PMat> jm(T, PMat(n));
    jm.c[0] = j.m;
    auto mul = [](const PMat& a, const PMat& b) { return pmat_mul(a, b); };
    return series_mul(series_mul(mpos, jm, mul, PMat(n)), mneg, mul, PMat(n));
}

GenSection section_from_qvec(int n, const QVec& v) {
    std::vector<PolyScalar> c(4 * n, PolyScalar(n));
    for (int a = 0; a < 4 * n; ++a) c[a] = PolyScalar::constant(n, v[a]);
    return GenSection::from_coords(n, c);
}

QVec section_coords_at(const GenSection& e, const Point& x) {
    auto c = e.coords();
    QVec v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i].eval(x);
    return v;
}

GenSection courant_bracket(const GenSection& e1, const GenSection& e2) {
    Polyvector u = lie_bracket(e1.vec, e2.vec);
    // L_{u1} th2 - L_{u2} th1 - (1/2) d(i_{u1} th2 - i_{u2} th1)
    Form t = lie_derivative(e1.vec, e2.one) - lie_derivative(e2.vec, e1.one);
    Form inner = interior(e1.vec, e2.one) - interior(e2.vec, e1.one);
    t -= exterior_d(inner).scaled(GaussRat(Rat(1, 2)));
    return {std::move(u), std::move(t)};
}

std::vector<GenSection> eigenframe_JJ(int n) {
    std::vector<GenSection> fr;
    for (int j = 0; j < n; ++j)
        fr.push_back({Polyvector::basis_vector(n, n + j), Form(n)});
    for (int j = 0; j < n; ++j)
        fr.push_back({Polyvector(n), Form::basis_oneform(n, j)});
    return fr;
}

std::vector<GenSection> eigenframe_beta_t(const Polyvector& beta, const Rat& t) {
    int n = beta.n();
    Polyvector a = beta + beta.conj();
    CliffordElem at = CliffordElem::from_polyvector(a).scaled(GaussRat(t));
    std::vector<GenSection> fr;
    for (auto& e : eigenframe_JJ(n)) fr.push_back(adjoint_on_section(at, e));
    return fr;
}

std::vector<QVec> eigenframe_at_point(const GCStructure& j, const Point& x) {
    QMat m = j.m.eval_at(x);
    for (int i = 0; i < m.rows; ++i) m.at(i, i) += GaussRat::i();
    auto ker = qmat_kernel(std::move(m));
    if ((int)ker.size() != 2 * j.n)
        throw error("eigenframe_at_point: -i eigenspace has wrong dimension");
    return ker;
}

IntegrabilityReport integrability_check(const std::vector<GenSection>& frame,
                                        const std::vector<Point>& samples) {
    IntegrabilityReport rep;
    if (frame.empty()) return rep;
    int n = frame[0].n();
    auto section_constant = [&](const GenSection& e) {
        for (auto& c : e.coords())
            if (!c.is_constant()) return false;
        return true;
    };
    bool all_constant = true;
    for (auto& e : frame) all_constant = all_constant && section_constant(e);

    for (size_t i = 0; i < frame.size(); ++i)
        for (size_t j = i + 1; j < frame.size(); ++j) {
            GenSection br = courant_bracket(frame[i], frame[j]);
            if (all_constant && section_constant(br)) {
                std::vector<QVec> basis;
                Point origin(n, GaussRat());
                for (auto& e : frame) basis.push_back(section_coords_at(e, origin));
                if (!in_span(basis, section_coords_at(br, origin))) {
                    rep.integrable = false;
                    rep.failures.push_back({(int)i, (int)j, -1});
                }
                continue;
            }
            for (size_t s = 0; s < samples.size(); ++s) {
                std::vector<QVec> basis;
                for (auto& e : frame) basis.push_back(section_coords_at(e, samples[s]));
                if (!in_span(basis, section_coords_at(br, samples[s]))) {
                    rep.integrable = false;
                    rep.failures.push_back({(int)i, (int)j, (int)s});
                }
            }
        }
    return rep;
}

int type_at_point(const GCStructure& j, const Point& x) {
    int n = j.n;
    QMat ur(2 * n, 2 * n);
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) ur.at(r, c) = j.m.at(r, 2 * n + c).eval(x);
    int rank = qmat_rank(std::move(ur));
    if (rank % 2) throw error("type_at_point: odd rank of the upper-right block");
    return n - rank / 2;
}

PMat gen_metric(const GCStructure& j0, const GCStructure& j1) {
    PMat p01 = pmat_mul(j0.m, j1.m);
    PMat p10 = pmat_mul(j1.m, j0.m);
    if (!(p01 == p10)) throw error("gen_metric: structures do not commute");
    PMat g = p01.scaled(GaussRat(-1));
    if (!(pmat_mul(g, g) == PMat::identity(j0.n)))
        throw error("gen_metric: G^2 != I");
    return g;
}

namespace {

// <G.,.> in the real frame (d/dx, d/dy, dx, dy): entries must be real and
// the symmetric elimination pivots all positive.
bool positive_at(const QMat& g, int n) {
    int d = 4 * n;
    QMat c(d, d);
    GaussRat I = GaussRat::i();
    GaussRat half{Rat(1, 2)};
    for (int j = 0; j < n; ++j) {
        c.at(j, j) = GaussRat(1);
        c.at(n + j, j) = GaussRat(1);
        c.at(j, n + j) = I;
        c.at(n + j, n + j) = -I;
        c.at(2 * n + j, 2 * n + j) = half;
        c.at(3 * n + j, 2 * n + j) = half;
        c.at(2 * n + j, 3 * n + j) = half * (-I);
        c.at(3 * n + j, 3 * n + j) = half * I;
    }
    QMat p = pairing_qmat(n);
    QMat bf(d, d);
    for (int a = 0; a < d; ++a) {
        QVec pg = qmat_apply(p, qmat_apply(g, c.column(a)));
        for (int b = 0; b < d; ++b) {
            QVec cb = c.column(b);
            GaussRat acc;
            for (int k = 0; k < d; ++k) acc += pg[k] * cb[k];
            bf.at(a, b) = acc;
        }
    }
    for (auto& x : bf.a)
        if (!(x.im == 0)) return false;
    for (int k = 0; k < d; ++k) {
        if (!(bf.at(k, k).re > 0)) return false;
        for (int r = k + 1; r < d; ++r) {
            if (bf.at(r, k).is_zero()) continue;
            GaussRat f = bf.at(r, k) / bf.at(k, k);
            for (int cc = k; cc < d; ++cc) bf.at(r, cc) -= f * bf.at(k, cc);
        }
    }
    return true;
}

KahlerPairReport pair_check_impl(const GCStructure& j0,
                                 const std::function<QMat(size_t)>& j1_at,
                                 const PMat* j1_sym,
                                 const std::vector<Point>& samples) {
    KahlerPairReport rep;
    int n = j0.n;
    PMat g_sym(n);
    if (j1_sym) {
        PMat p01 = pmat_mul(j0.m, *j1_sym);
        rep.commute = p01 == pmat_mul(*j1_sym, j0.m);
        if (!rep.commute) return rep;
        g_sym = p01.scaled(GaussRat(-1));
        rep.metric_squares_to_id = pmat_mul(g_sym, g_sym) == PMat::identity(n);
        if (!rep.metric_squares_to_id) return rep;
    } else {
        rep.commute = true;
        rep.metric_squares_to_id = true;
    }
    rep.positive = true;
    for (size_t s = 0; s < samples.size(); ++s) {
        QMat j0x = j0.m.eval_at(samples[s]);
        QMat gx;
        if (j1_sym) {
            gx = g_sym.eval_at(samples[s]);
        } else {
            QMat j1x = j1_at(s);
            QMat p01 = qmat_mul(j0x, j1x), p10 = qmat_mul(j1x, j0x);
            if (!(p01 == p10)) {
                rep.commute = false;
                rep.failed_samples.push_back((int)s);
                continue;
            }
            gx = qmat_scale(p01, GaussRat(-1));
            if (!(qmat_mul(gx, gx) == QMat::identity(4 * n))) {
                rep.metric_squares_to_id = false;
                rep.failed_samples.push_back((int)s);
                continue;
            }
        }
        if (!positive_at(gx, n)) {
            rep.positive = false;
            rep.failed_samples.push_back((int)s);
            continue;
        }
        auto cplus = metric_eigenspace_at(gx, +1);
        if ((int)cplus.size() != 2 * n) {
            rep.positive = false;
            rep.failed_samples.push_back((int)s);
            continue;
        }
        // C+ graph presentation: columns [V; Theta], theta = S v, F = S^T,
        // g = sym(F), b = antisym(F)
        QMat v(2 * n, 2 * n), th(2 * n, 2 * n);
        for (int c = 0; c < 2 * n; ++c)
            for (int r = 0; r < 2 * n; ++r) {
                v.at(r, c) = cplus[c][r];
                th.at(r, c) = cplus[c][2 * n + r];
            }
        QMat ss = qmat_mul(th, qmat_inverse(v));
        QMat f = ss.transpose();
        QMat gg(2 * n, 2 * n), bb(2 * n, 2 * n);
        GaussRat half{Rat(1, 2)};
        for (int r = 0; r < 2 * n; ++r)
            for (int c = 0; c < 2 * n; ++c) {
                gg.at(r, c) = (f.at(r, c) + f.at(c, r)) * half;
                bb.at(r, c) = (f.at(r, c) - f.at(c, r)) * half;
            }
        rep.g_at.push_back(std::move(gg));
        rep.b_at.push_back(std::move(bb));
    }
    return rep;
}

} // namespace

std::vector<QVec> metric_eigenspace_at(const QMat& g_at_x, int sign) {
    QMat m = g_at_x;
    for (int i = 0; i < m.rows; ++i) m.at(i, i) -= GaussRat(sign);
    return qmat_kernel(std::move(m));
}

KahlerPairReport kahler_pair_check(const GCStructure& j0, const GCStructure& j1,
                                   const std::vector<Point>& samples) {
    return pair_check_impl(j0, {}, &j1.m, samples);
}

KahlerPairReport kahler_pair_check_pointwise(const GCStructure& j0,
                                             const std::vector<QMat>& j1_at,
                                             const std::vector<Point>& samples) {
    return pair_check_impl(j0, [&](size_t s) { return j1_at[s]; }, nullptr, samples);
}

GCStructure b_field_transform(const GCStructure& j, const Form& b) {
    int deg;
    if (!b.is_homogeneous(&deg) || (deg != 2 && !b.is_zero()))
        throw error("b_field_transform needs a 2-form");
    if (!b.is_real()) throw error("b_field_transform needs a real form");
    if (!exterior_d(b).is_zero()) throw error("b_field_transform: b is not closed");
    PMat m = ad_exp_matrix(CliffordElem::from_form(b));
    PMat minv = ad_exp_matrix(CliffordElem::from_form(-b));
    return GCStructure(j.n, pmat_mul(m, pmat_mul(j.m, minv)));
}

} // namespace gk
