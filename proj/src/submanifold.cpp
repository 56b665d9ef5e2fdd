#include "gk/submanifold.hpp"

#include <algorithm>
#include <random>

namespace gk {

namespace {

bool generator_holomorphic(const PolyScalar& f) {
    for (int a = f.n(); a < 2 * f.n(); ++a)
        if (!f.derivative(a).is_zero()) return false;
    return true;
}

// dF(x) as a section coordinate vector (covector slots only).
QVec differential_at(const PolyScalar& f, const Point& x) {
    int n = f.n();
    QVec v(4 * n);
    for (int a = 0; a < 2 * n; ++a) v[2 * n + a] = f.derivative(a).eval(x);
    return v;
}

} // namespace

SubmanifoldModel::SubmanifoldModel(PolyIdeal id, std::vector<Point> pts, int expected_codim)
    : ideal(std::move(id)), n(ideal.n()),
      codim(expected_codim < 0 ? (int)ideal.generators().size() : expected_codim),
      samples(std::move(pts)) {
    for (auto& x : samples) {
        std::vector<QVec> dfs;
        for (auto& f : ideal.generators()) {
            if (!f.eval(x).is_zero())
                throw error("sample point does not lie on the submanifold");
            dfs.push_back(differential_at(f, x));
        }
        if (span_rank(dfs) != codim)
            throw error("sample point is singular (differential rank drop)");
    }
}

std::vector<QVec> conormal_frame(const SubmanifoldModel& m, const Point& x) {
    std::vector<QVec> fr;
    for (auto& f : m.ideal.generators()) {
        QVec d = differential_at(f, x);
        fr.push_back(d);
        fr.push_back(qvec_conj(d));
    }
    if (span_rank(fr) != 2 * m.codim)
        throw error("conormal frame: singular point");
    return fr;
}

std::vector<QVec> tangent_holo_basis(const SubmanifoldModel& m, const Point& x) {
    int n = m.n;
    for (auto& f : m.ideal.generators())
        if (!generator_holomorphic(f))
            throw error("tangent basis needs holomorphic generators");
    QMat d((int)m.ideal.generators().size(), n);
    for (size_t k = 0; k < m.ideal.generators().size(); ++k)
        for (int j = 0; j < n; ++j)
            d.at((int)k, j) = m.ideal.generators()[k].derivative(j).eval(x);
    auto ker = qmat_kernel(std::move(d));
    if ((int)ker.size() != n - m.codim)
        throw error("tangent basis: singular point");
    return ker;
}

namespace {

// Basis of pi^{-1}(TM)^C: tangent vectors (holomorphic + conjugates)
// embedded in section coordinates, plus every covector.
std::vector<QVec> pi_inv_tangent_basis(const SubmanifoldModel& m, const Point& x) {
    int n = m.n;
    std::vector<QVec> basis;
    for (auto& w : tangent_holo_basis(m, x)) {
        QVec v(4 * n), vb(4 * n);
        for (int j = 0; j < n; ++j) {
            v[j] = w[j];
            vb[n + j] = w[j].conj();
        }
        basis.push_back(std::move(v));
        basis.push_back(std::move(vb));
    }
    for (int a = 0; a < 2 * n; ++a) {
        QVec v(4 * n);
        v[2 * n + a] = GaussRat(1);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Full complexified tangent basis as 2n-coordinate vectors.
std::vector<QVec> tangent_full_basis(const SubmanifoldModel& m, const Point& x) {
    int n = m.n;
    std::vector<QVec> t;
    for (auto& w : tangent_holo_basis(m, x)) {
        QVec v(2 * n), vb(2 * n);
        for (int j = 0; j < n; ++j) {
            v[j] = w[j];
            vb[n + j] = w[j].conj();
        }
        t.push_back(std::move(v));
        t.push_back(std::move(vb));
    }
    return t;
}

// q(E) = (v expressed in the tangent basis, theta restricted to TM).
QVec q_map(const QVec& e, const std::vector<QVec>& tangent, int n) {
    int m2 = (int)tangent.size();
    QVec v(2 * n);
    for (int a = 0; a < 2 * n; ++a) v[a] = e[a];
    auto coeff = qmat_solve(QMat::from_columns(tangent), v);
    if (!coeff) throw error("q projection: vector part is not tangent");
    QVec out(2 * m2);
    for (int i = 0; i < m2; ++i) out[i] = (*coeff)[i];
    for (int i = 0; i < m2; ++i) {
        GaussRat acc;
        for (int a = 0; a < 2 * n; ++a) acc += e[2 * n + a] * tangent[i][a];
        out[m2 + i] = acc;
    }
    return out;
}

} // namespace

bool is_conormal_invariant(const GCStructure& j, const SubmanifoldModel& m,
                           const std::vector<Point>& pts) {
    for (auto& x : pts) {
        auto frame = conormal_frame(m, x);
        QMat jx = j.m.eval_at(x);
        for (auto& theta : frame)
            if (!in_span(frame, qmat_apply(jx, theta))) return false;
    }
    return true;
}

bool is_poisson_submanifold(const Polyvector& beta, const SubmanifoldModel& m) {
    int n = m.n;
    for (auto& f : m.ideal.generators())
        for (int a = 0; a < 2 * n; ++a) {
            PolyScalar br = poisson_bracket(beta, f, PolyScalar::variable(n, a));
            if (!m.ideal.contains(br)) return false;
        }
    return true;
}

JSubReport is_J_submanifold(const GCStructure& j, const SubmanifoldModel& m,
                            const std::vector<Point>& pts) {
    JSubReport rep;
    int n = m.n;
    for (size_t s = 0; s < pts.size(); ++s) {
        const Point& x = pts[s];
        auto L = eigenframe_at_point(j, x);
        auto piinv = pi_inv_tangent_basis(m, x);
        auto LM = span_intersect(L, piinv);
        auto tangent = tangent_full_basis(m, x);
        int m2 = (int)tangent.size();

        // L(N*): intersection with the conormal (covector slots only)
        std::vector<QVec> conormal;
        for (auto& c : conormal_frame(m, x)) conormal.push_back(c);
        auto LN = span_intersect(L, conormal);

        std::vector<QVec> qL, qLbar;
        for (auto& e : LM) {
            qL.push_back(q_map(e, tangent, n));
            qLbar.push_back(q_map(qvec_conj(e), tangent, n));
        }
        int dim_qL = span_rank(qL);
        rep.dim_LM.push_back((int)LM.size());
        rep.dim_LNstar.push_back((int)LN.size());
        rep.dim_qLM.push_back(dim_qL);

        bool cond3 = span_intersect(qL, qLbar).empty();
        if (!cond3) {
            rep.is_j_submanifold = false;
            rep.failing_samples.push_back((int)s);
        }
        if ((int)LN.size() + dim_qL != (int)LM.size() || dim_qL != m2)
            rep.bookkeeping_ok = false;
    }
    for (size_t s = 1; s < rep.dim_LM.size(); ++s)
        if (rep.dim_LM[s] != rep.dim_LM[0]) rep.constant_rank = false;
    return rep;
}

QMat induced_structure_at_point(const GCStructure& j, const SubmanifoldModel& m,
                                const Point& x) {
    int n = m.n;
    auto L = eigenframe_at_point(j, x);
    auto piinv = pi_inv_tangent_basis(m, x);
    auto LM = span_intersect(L, piinv);
    auto tangent = tangent_full_basis(m, x);
    int m2 = (int)tangent.size();
    std::vector<QVec> qL;
    for (auto& e : LM) qL.push_back(q_map(e, tangent, n));
    // prune to a basis
    std::vector<QVec> basis;
    for (auto& v : qL) {
        auto trial = basis;
        trial.push_back(v);
        if (span_rank(trial) > (int)basis.size()) basis = trial;
    }
    if ((int)basis.size() != m2)
        throw error("induced structure: q(L(M)) has wrong dimension");
    std::vector<QVec> cols = basis;
    for (auto& v : basis) cols.push_back(qvec_conj(v));
    QMat p = QMat::from_columns(cols);
    if (qmat_rank(p) != 2 * m2)
        throw error("induced structure: not a submanifold point (overlap with conjugate)");
    QMat d(2 * m2, 2 * m2);
    GaussRat I = GaussRat::i();
    for (int k = 0; k < m2; ++k) {
        d.at(k, k) = -I;
        d.at(m2 + k, m2 + k) = I;
    }
    return qmat_mul(p, qmat_mul(d, qmat_inverse(p)));
}

int induced_type_at_point(const GCStructure& j, const SubmanifoldModel& m, const Point& x) {
    QMat jm = induced_structure_at_point(j, m, x);
    int m2 = jm.rows / 2; // = 2 * complex dim of M
    QMat ur(m2, m2);
    for (int r = 0; r < m2; ++r)
        for (int c = 0; c < m2; ++c) ur.at(r, c) = jm.at(r, m2 + c);
    int rank = qmat_rank(std::move(ur));
    if (rank % 2) throw error("induced type: odd block rank");
    return m2 / 2 - rank / 2;
}

GammaReport gamma_iso_check(const QMat& j0x, const QMat& j1x, const SubmanifoldModel& m,
                            const Point& x) {
    GammaReport rep;
    int n = m.n;
    QMat g = qmat_scale(qmat_mul(j0x, j1x), GaussRat(-1));
    auto piinv = pi_inv_tangent_basis(m, x);
    auto tangent = tangent_full_basis(m, x);
    int m2 = (int)tangent.size();

    auto cp = span_intersect(metric_eigenspace_at(g, +1), piinv);
    auto cm = span_intersect(metric_eigenspace_at(g, -1), piinv);
    rep.cplus_rank_ok = (int)cp.size() == m2 && (int)cm.size() == m2;
    if (!rep.cplus_rank_ok) return rep;

    std::vector<QVec> images;
    for (auto& e : cp) images.push_back(q_map(e, tangent, n));
    for (auto& e : cm) images.push_back(q_map(e, tangent, n));
    rep.gamma_bijective = span_rank(images) == 2 * m2;

    auto invariant = [&](const QMat& jx) {
        for (auto& basis : {cp, cm})
            for (auto& e : basis)
                if (!in_span(basis, qmat_apply(jx, e))) return false;
        return true;
    };
    rep.j0_invariant = invariant(j0x);
    rep.j1_invariant = invariant(j1x);
    return rep;
}

InducedPoissonResult induced_poisson(const Polyvector& beta, const SubmanifoldModel& m,
                                     int normal_coord) {
    if (m.ideal.kind() != PolyIdeal::Kind::principal)
        throw error("induced_poisson needs a principal ideal (graph chart)");
    if (!is_poisson_submanifold(beta, m))
        throw error("induced_poisson: not a Poisson submanifold");
    int n = m.n;
    const PolyScalar& f = m.ideal.generators()[0];
    if (f.derivative(normal_coord).is_zero())
        throw error("induced_poisson: defining function does not involve the normal coordinate");
    InducedPoissonResult res;
    for (int a = 0; a < n; ++a)
        if (a != normal_coord) res.tangential.push_back(a);
    for (size_t i = 0; i < res.tangential.size(); ++i)
        for (size_t k = i + 1; k < res.tangential.size(); ++k) {
            int a = res.tangential[i], b = res.tangential[k];
            PolyScalar c = poisson_bracket(beta, PolyScalar::variable(n, a),
                                           PolyScalar::variable(n, b));
            if (!m.ideal.contains(c)) res.nontrivial = true;
            res.comp[{a, b}] = std::move(c);
        }
    return res;
}

bool group_invariant_ideal_check(const std::vector<Polyvector>& fields,
                                 const PolyIdeal& ideal) {
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j)
            if (!lie_bracket(fields[i], fields[j]).is_zero())
                throw error("group fields do not commute");
    for (auto& v : fields)
        for (auto& f : ideal.generators())
            if (!ideal.contains(apply_vector(v, f))) return false;
    return true;
}

namespace {

// num * w_l^{-negpow} with the common w_l factors cancelled.
struct Laurent {
    PolyScalar num;
    int negpow = 0;
};

Laurent laurent_normalize(PolyScalar num, int negpow, int l) {
    if (num.is_zero()) return {num, 0};
    int minexp = kMaxTotalDegree;
    for (auto& [e, c] : num.terms()) minexp = std::min(minexp, (int)e[l]);
    int strip = std::min(minexp, negpow);
    if (strip > 0) {
        PolyScalar out(num.n());
        for (auto& [e, c] : num.terms()) {
            Expo e2 = e;
            e2[l] = (uint8_t)(e2[l] - strip);
            out.add_term(e2, c);
        }
        num = out;
        negpow -= strip;
    }
    return {num, negpow};
}

Laurent laurent_add(const Laurent& a, const Laurent& b, int l) {
    int p = std::max(a.negpow, b.negpow);
    auto lift = [&](const Laurent& x) {
        PolyScalar r = x.num;
        for (int k = x.negpow; k < p; ++k) r *= PolyScalar::variable(r.n(), l);
        return r;
    };
    return laurent_normalize(lift(a) + lift(b), p, l);
}

Laurent laurent_mul(const Laurent& a, const Laurent& b, int l) {
    return laurent_normalize(a.num * b.num, a.negpow + b.negpow, l);
}

} // namespace

bool extends_to_projective(const Polyvector& beta, const std::vector<int>& proj_vars) {
    int n = beta.n();
    for (auto& [m, c] : beta.components()) {
        if (std::popcount(m) != 2) throw error("projective extension needs a 2-vector");
        if (m >> n) throw error("projective extension needs a holomorphic bivector");
        for (int a = n; a < 2 * n; ++a)
            if (!c.derivative(a).is_zero())
                throw error("projective extension needs holomorphic coefficients");
    }
    for (int l : proj_vars) {
        // transformed bivector components in the chart where w_l = 1/z_l
        std::map<Mask, Laurent> out;
        auto add = [&](Mask mk, const Laurent& v) {
            auto it = out.find(mk);
            if (it == out.end())
                out.emplace(mk, v);
            else
                it->second = laurent_add(it->second, v, l);
        };
        // expansion of each ambient coordinate vector in the new chart:
        // list of (coefficient Laurent, new direction index)
        auto dir_expansion = [&](int j) {
            std::vector<std::pair<Laurent, int>> terms;
            bool in_chart = std::find(proj_vars.begin(), proj_vars.end(), j) != proj_vars.end();
            PolyScalar wl = PolyScalar::variable(n, l);
            if (!in_chart) {
                terms.push_back({{PolyScalar::one(n), 0}, j});
            } else if (j != l) {
                terms.push_back({{wl, 0}, j});
            } else {
                terms.push_back({{-(wl * wl), 0}, l});
                for (int k : proj_vars)
                    if (k != l)
                        terms.push_back({{-(PolyScalar::variable(n, k) * wl), 0}, k});
            }
            return terms;
        };
        for (auto& [mk, c] : beta.components()) {
            auto bits = mask_bits(mk);
            int j = bits[0], k = bits[1];
            // substitute the coefficient: z_j -> w_j / w_l (j in chart),
            // z_l -> 1 / w_l; homogenize by w_l^deg
            Laurent coeff{PolyScalar(n), 0};
            for (auto& [e, cc] : c.terms()) {
                PolyScalar mono = PolyScalar::constant(n, cc);
                int negp = 0;
                for (int v = 0; v < n; ++v) {
                    if (!e[v]) continue;
                    bool in_chart =
                        std::find(proj_vars.begin(), proj_vars.end(), v) != proj_vars.end();
                    if (!in_chart) {
                        for (int q = 0; q < e[v]; ++q) mono *= PolyScalar::variable(n, v);
                    } else if (v != l) {
                        for (int q = 0; q < e[v]; ++q) mono *= PolyScalar::variable(n, v);
                        negp += e[v];
                    } else {
                        negp += e[v];
                    }
                }
                coeff = laurent_add(coeff, laurent_normalize(mono, negp, l), l);
            }
            for (auto& [cj, dj] : dir_expansion(j))
                for (auto& [ck, dk] : dir_expansion(k)) {
                    if (dj == dk) continue;
                    Laurent v = laurent_mul(coeff, laurent_mul(cj, ck, l), l);
                    Mask nm = (Mask(1) << dj) | (Mask(1) << dk);
                    if (dj > dk) v.num = -v.num; // sort the wedge
                    add(nm, v);
                }
        }
        for (auto& [mk, v] : out)
            if (v.negpow > 0 && !v.num.is_zero()) return false;
    }
    return true;
}

std::vector<Point> find_points_on_hypersurface(const PolyScalar& f, int count,
                                               uint64_t seed) {
    int n = f.n();
    if (!generator_holomorphic(f))
        throw error("point search needs a holomorphic defining function");
    std::mt19937_64 eng(seed);
    std::vector<GaussRat> grid;
    for (int num = -2; num <= 2; ++num)
        for (int den = 1; den <= 2; ++den) {
            grid.push_back(GaussRat(Rat(num, den)));
            if (num != 0) grid.push_back(GaussRat(Rat(0), Rat(num, den)));
        }
    auto smooth = [&](const Point& p) {
        for (int j = 0; j < n; ++j)
            if (!f.derivative(j).eval(p).is_zero()) return true;
        return false;
    };
    std::vector<Point> found;
    auto push_if_new = [&](const Point& p) {
        for (auto& q : found)
            if (q == p) return;
        if (smooth(p)) found.push_back(p);
    };
    for (int attempt = 0; attempt < 4000 && (int)found.size() < count; ++attempt) {
        Point p(n);
        for (auto& c : p) c = grid[eng() % grid.size()];
        if (f.eval(p).is_zero()) {
            push_if_new(p);
            continue;
        }
        // solve the last coordinate when f is degree <= 1 in it
        for (int l = 0; l < n && (int)found.size() < count; ++l) {
            GaussRat c0, c1;
            bool low_degree = true;
            for (auto& [e, cc] : f.terms()) {
                if (e[l] > 1) {
                    low_degree = false;
                    break;
                }
            }
            if (!low_degree) continue;
            // c1 = (df/dz_l)(p with z_l irrelevant), c0 = f(p with z_l = 0)
            Point p0 = p;
            p0[l] = GaussRat();
            c0 = f.eval(p0);
            c1 = f.derivative(l).eval(p0);
            if (c1.is_zero()) continue;
            Point q = p;
            q[l] = -(c0 / c1);
            if (f.eval(q).is_zero()) push_if_new(q);
        }
    }
    if ((int)found.size() < count)
        throw error("point search found too few smooth rational points");
    found.resize(count);
    return found;
}

Form spinor_pullback_at(const Form& psi, const SubmanifoldModel& m, const Point& x) {
    return pullback_to_subspace(psi.eval_at(x), tangent_holo_basis(m, x));
}

} // namespace gk
