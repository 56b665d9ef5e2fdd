#include "gk/deform.hpp"

#include <functional>

namespace gk {

namespace {

Form omega_or_std(int n, const Form* omega) {
    return omega ? *omega : Form::omega_std(n);
}

// Real-linear unknown bookkeeping: every unknown is one Gaussian-rational
// coefficient (split into re/im) of one monomial in one slot (h or p_{jk}).
struct UnknownSpace {
    int n;
    std::vector<Expo> monomials;         // homogeneous, one degree
    std::vector<std::pair<int, int>> slots; // (-1,-1) for h, else (j,k) of dz_j^dzb_k
    int count() const { return 2 * (int)monomials.size() * (int)slots.size(); }

    int index(size_t mono, size_t slot, bool im) const {
        return 2 * ((int)slot * (int)monomials.size() + (int)mono) + (im ? 1 : 0);
    }
};

std::vector<Expo> homogeneous_monomials(int n, int degree) {
    std::vector<Expo> out;
    Expo cur(2 * n, 0);
    // lexicographic enumeration of compositions of `degree` into 2n slots
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == 2 * n - 1) {
            cur[pos] = (uint8_t)left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[pos] = (uint8_t)k;
            rec(pos + 1, left - k);
        }
    };
    if (degree >= 0) rec(0, degree);
    return out;
}

// Rows of an exact rational linear system indexed by arbitrary keys.
struct LinearSystem {
    int cols;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;

    explicit LinearSystem(int c) : cols(c) {}

    std::vector<Rat>& fresh_row(const Rat& b) {
        rows.emplace_back(cols, Rat(0));
        rhs.push_back(b);
        return rows.back();
    }

    // first solution with free variables set to zero, or nullopt
    std::optional<std::vector<Rat>> solve() const {
        int m = (int)rows.size();
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(cols + 1));
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < cols; ++c) a[r][c] = rows[r][c];
            a[r][cols] = rhs[r];
        }
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col <= cols && row < m; ++col) {
            int piv = -1;
            for (int r = row; r < m; ++r)
                if (a[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a[piv], a[row]);
            Rat d = a[row][col];
            for (int c = col; c <= cols; ++c) a[row][c] /= d;
            for (int r = 0; r < m; ++r) {
                if (r == row || a[r][col] == 0) continue;
                Rat f = a[r][col];
                for (int c = col; c <= cols; ++c) a[r][c] -= f * a[row][c];
            }
            pivots.push_back(col);
            ++row;
        }
        if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
        std::vector<Rat> x(cols, Rat(0));
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
        return x;
    }
};

// Assemble and solve the order equation (dh + dp) ^ psi = -k! * source for
// one homogeneous polynomial degree of h and p, under the reality and
// trace constraints.
std::optional<KOneElem> solve_degree(int n, int degree, const Form& psi,
                                     const Form& source_piece, const Rat& scale) {
    UnknownSpace u;
    u.n = n;
    u.monomials = homogeneous_monomials(n, degree);
    u.slots.push_back({-1, -1});
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) u.slots.push_back({j, k});

    // images of unit unknowns under x -> d(x . psi)
    std::vector<Form> images(u.monomials.size() * u.slots.size(), Form(n));
    for (size_t s = 0; s < u.slots.size(); ++s)
        for (size_t m = 0; m < u.monomials.size(); ++m) {
            PolyScalar mono = PolyScalar::monomial(n, u.monomials[m], GaussRat(1));
            Form gen(n);
            if (u.slots[s].first < 0)
                gen = psi.scaled(mono);
            else
                gen = wedge(Form::monomial(n,
                                           (Mask(1) << u.slots[s].first) |
                                               (Mask(1) << (n + u.slots[s].second)),
                                           mono),
                            psi);
            images[s * u.monomials.size() + m] = exterior_d(gen);
        }

    // row keys: (form mask, coefficient exponent), two real rows each
    std::map<std::pair<Mask, Expo>, int> row_of;
    auto collect = [&](const Form& f) {
        for (auto& [mask, c] : f.components())
            for (auto& [e, v] : c.terms()) {
                auto key = std::make_pair(mask, e);
                if (!row_of.count(key)) row_of.emplace(key, (int)row_of.size());
            }
    };
    for (auto& f : images) collect(f);
    collect(source_piece);

    int nrows_eq = (int)row_of.size();
    std::vector<std::vector<Rat>> eqre(nrows_eq, std::vector<Rat>(u.count(), Rat(0)));
    std::vector<std::vector<Rat>> eqim(nrows_eq, std::vector<Rat>(u.count(), Rat(0)));
    std::vector<Rat> rhsre(nrows_eq, Rat(0)), rhsim(nrows_eq, Rat(0));

    for (size_t s = 0; s < u.slots.size(); ++s)
        for (size_t m = 0; m < u.monomials.size(); ++m) {
            const Form& img = images[s * u.monomials.size() + m];
            int cre = u.index(m, s, false), cim = u.index(m, s, true);
            for (auto& [mask, c] : img.components())
                for (auto& [e, v] : c.terms()) {
                    int r = row_of[{mask, e}];
                    // unknown (re + i im) times image value v
                    eqre[r][cre] += v.re;
                    eqre[r][cim] += -v.im;
                    eqim[r][cre] += v.im;
                    eqim[r][cim] += v.re;
                }
        }
    for (auto& [mask, c] : source_piece.components())
        for (auto& [e, v] : c.terms()) {
            int r = row_of[{mask, e}];
            rhsre[r] = -scale * v.re;
            rhsim[r] = -scale * v.im;
        }

    LinearSystem sys(u.count());
    for (int r = 0; r < nrows_eq; ++r) {
        sys.rows.push_back(eqre[r]);
        sys.rhs.push_back(rhsre[r]);
        sys.rows.push_back(eqim[r]);
        sys.rhs.push_back(rhsim[r]);
    }

    auto mono_index = [&](const Expo& e) -> int {
        for (size_t m = 0; m < u.monomials.size(); ++m)
            if (u.monomials[m] == e) return (int)m;
        return -1;
    };
    auto conj_expo = [&](const Expo& e) {
        Expo f(e.size());
        for (int j = 0; j < n; ++j) {
            f[j] = e[n + j];
            f[n + j] = e[j];
        }
        return f;
    };

    // reality of h: coeff(conj mono) = conj(coeff(mono))
    for (size_t m = 0; m < u.monomials.size(); ++m) {
        int mc = mono_index(conj_expo(u.monomials[m]));
        // re_m - re_{mc} = 0 ; im_m + im_{mc} = 0
        auto& r1 = sys.fresh_row(Rat(0));
        r1[u.index(m, 0, false)] += 1;
        r1[u.index((size_t)mc, 0, false)] -= 1;
        auto& r2 = sys.fresh_row(Rat(0));
        r2[u.index(m, 0, true)] += 1;
        r2[u.index((size_t)mc, 0, true)] += 1;
    }
    // reality of p: conj(p_{jk} mono dz_j^dzb_k) = conj(p) mono' dzb_j^dz_k
    // = -conj(p) mono' dz_k^dzb_j, so p_{kj}(mono') = -conj(p_{jk}(mono)).
    for (size_t s = 1; s < u.slots.size(); ++s) {
        auto [j, k] = u.slots[s];
        size_t s2 = 1 + (size_t)(k * n + j); // slot of (k, j)
        for (size_t m = 0; m < u.monomials.size(); ++m) {
            int mc = mono_index(conj_expo(u.monomials[m]));
            auto& r1 = sys.fresh_row(Rat(0));
            r1[u.index((size_t)mc, s2, false)] += 1;
            r1[u.index(m, s, false)] += 1;
            auto& r2 = sys.fresh_row(Rat(0));
            r2[u.index((size_t)mc, s2, true)] += 1;
            r2[u.index(m, s, true)] -= 1;
        }
    }
    // trace constraint per monomial: -2i sum_j p_{jj} + 2h = 0
    // (with the standard omega normalization); complex row -> two real rows
    for (size_t m = 0; m < u.monomials.size(); ++m) {
        auto& r1 = sys.fresh_row(Rat(0)); // real part: 2*sum_j im(p_jj) + 2 re(h)
        auto& r2 = sys.fresh_row(Rat(0)); // imag part: -2*sum_j re(p_jj) + 2 im(h)
        r1[u.index(m, 0, false)] += 2;
        r2[u.index(m, 0, true)] += 2;
        for (int j = 0; j < n; ++j) {
            size_t s = 1 + (size_t)(j * n + j);
            r1[u.index(m, s, true)] += 2;
            r2[u.index(m, s, false)] -= 2;
        }
    }

    auto sol = sys.solve();
    if (!sol) return std::nullopt;

    KOneElem out(n);
    for (size_t m = 0; m < u.monomials.size(); ++m) {
        GaussRat hc{(*sol)[u.index(m, 0, false)], (*sol)[u.index(m, 0, true)]};
        out.h += PolyScalar::monomial(n, u.monomials[m], hc);
        for (size_t s = 1; s < u.slots.size(); ++s) {
            GaussRat pc{(*sol)[u.index(m, s, false)], (*sol)[u.index(m, s, true)]};
            if (pc.is_zero()) continue;
            auto [j, k] = u.slots[s];
            out.p += Form::monomial(n, (Mask(1) << j) | (Mask(1) << (n + k)),
                                    PolyScalar::monomial(n, u.monomials[m], pc));
        }
    }
    return out;
}

FormSeries psi_series(const Polyvector& beta, const std::vector<KOneElem>& b, int order) {
    int n = beta.n();
    Polyvector a = beta + beta.conj();
    CliffordSeries at = cl_series_zero(order, n);
    if (order >= 1) at.c[1] = CliffordElem::from_polyvector(a);
    CliffordSeries bs = cl_series_zero(order, n);
    Rat fact(1);
    for (int k = 1; k <= order && k < (int)b.size(); ++k) {
        fact *= k;
        bs.c[k] = b[k].as_clifford().scaled(GaussRat(Rat(1) / fact));
    }
    FormSeries psi0 = form_series_zero(order, n);
    psi0.c[0] = wedge_exp(Form::omega_std(n).scaled(GaussRat::i()));
    return spin_series_exp_apply(at, spin_series_exp_apply(bs, psi0));
}

} // namespace

bool k1_membership(const PolyScalar& h, const Form& p, const Form* omega) {
    int n = h.n();
    if (!p.is_zero()) {
        int deg;
        if (!p.is_homogeneous(&deg) || deg != 2) return false;
        if (!p.has_only_bidegrees({{1, 1}})) return false;
    }
    if (!p.is_real() || !h.is_real()) return false;
    Form w = omega_or_std(n, omega);
    PolyScalar tr = lefschetz_contract(p, &w);
    return (tr + h + h).is_zero();
}

bool k2_membership(const Form& phi, const Form* omega) {
    int n = phi.n();
    Form w = omega_or_std(n, omega);
    Form eta = wedge(wedge_exp(w.scaled(-GaussRat::i())), phi);
    return eta.has_only_bidegrees({{1, 0}, {0, 1}, {2, 1}, {1, 2}});
}

Form first_order_source(const Polyvector& beta, const Form* omega, bool* in_k2) {
    int n = beta.n();
    Form w = omega_or_std(n, omega);
    Form psi = wedge_exp(w.scaled(GaussRat::i()));
    Polyvector a = beta + beta.conj();
    Form src = exterior_d(spin_action(CliffordElem::from_polyvector(a), psi));
    if (in_k2) {
        Form eta = wedge(wedge_exp(w.scaled(-GaussRat::i())), src);
        *in_k2 = eta.has_only_bidegrees({{2, 1}, {1, 2}});
    }
    return src;
}

KOneElem solve_order_k(const Polyvector& beta, const std::vector<KOneElem>& prev, int k,
                       int degree_bound, bool* ob_in_k2) {
    int n = beta.n();
    FormSeries psi = psi_series(beta, prev, k);
    Form ob = exterior_d(psi.c[k]);
    if (ob_in_k2) *ob_in_k2 = k2_membership(ob);
    if (ob.is_zero()) return KOneElem(n);

    // certify exactness with the homotopy operator before solving
    Form prim = homotopy(ob);
    if (!(exterior_d(prim) == ob))
        throw obstruction_error("order " + std::to_string(k) +
                                ": source failed the exactness certificate");

    Form psi0 = wedge_exp(Form::omega_std(n).scaled(GaussRat::i()));
    int maxdeg = 0;
    for (auto& [mask, c] : ob.components()) maxdeg = std::max(maxdeg, c.total_degree());
    int bound = degree_bound >= 0 ? degree_bound : maxdeg + 4;
    if (maxdeg + 1 > bound)
        throw obstruction_error("order " + std::to_string(k) +
                                ": no solution within degree bound " + std::to_string(bound));

    Rat scale(1);
    for (int i = 2; i <= k; ++i) scale *= i; // k!

    KOneElem acc(n);
    for (int deg = 0; deg <= maxdeg; ++deg) {
        // unknowns of degree deg+1 produce source pieces of degree deg
        Form piece(n);
        for (auto& [mask, c] : ob.components()) {
            PolyScalar hc = c.homogeneous_part(deg);
            if (!hc.is_zero()) piece.add_term(mask, hc);
        }
        if (piece.is_zero()) continue;
        auto sol = solve_degree(n, deg + 1, psi0, piece, scale);
        if (!sol)
            throw obstruction_error(
                "order " + std::to_string(k) + ": the degree-" + std::to_string(deg + 1) +
                " system is inconsistent; the class of the source does not vanish in the "
                "admissible space");
        acc.h += sol->h;
        acc.p += sol->p;
    }

    // postcondition: the order-k residual vanishes after the correction
    std::vector<KOneElem> next = prev;
    next.resize(std::max<size_t>(next.size(), k + 1), KOneElem(n));
    next[k] = acc;
    FormSeries check = psi_series(beta, next, k);
    if (!exterior_d(check.c[k]).is_zero())
        throw error("internal: order-k correction failed to cancel the residual");
    return acc;
}

DeformationResult solve_deformation(const Polyvector& beta, int order, const Form* s,
                                    int degree_bound) {
    if (order > 6) throw error("solve_deformation supports order <= 6");
    if (!is_poisson(beta)) throw error("bivector is not Poisson");
    int n = beta.n();
    DeformationResult res;
    res.beta = beta;
    res.order = order;
    res.b.assign(order + 1, KOneElem(n));

    if (s) {
        int deg;
        bool ok = s->is_homogeneous(&deg) && (s->is_zero() || deg == 2) && s->is_real() &&
                  s->has_only_bidegrees({{1, 1}}) && exterior_d(*s).is_zero() &&
                  lefschetz_contract(*s).is_zero();
        if (!ok) throw error("harmonic shift must be a constant real primitive (1,1)-form");
    }

    for (int k = 1; k <= order; ++k) {
        bool in_k2 = false;
        res.b[k] = solve_order_k(beta, res.b, k, degree_bound, &in_k2);
        res.ob_in_k2.push_back(in_k2);
        if (k == 1 && s) res.b[1].p += *s;
        if (!k1_membership(res.b[k].h, res.b[k].p))
            throw error("internal: order-k correction left the admissible space");
    }

    res.psi = psi_series(beta, res.b, order);
    res.residual = form_series_zero(order, n);
    res.residual_zero = true;
    for (int k = 0; k <= order; ++k) {
        res.residual.c[k] = exterior_d(res.psi.c[k]);
        if (!res.residual.c[k].is_zero()) res.residual_zero = false;
    }

    // z(t) with e^{z(t)} = e^{at} e^{b(t)}
    Polyvector a = beta + beta.conj();
    CliffordSeries bs = cl_series_zero(order, n);
    Rat fact(1);
    for (int k = 1; k <= order; ++k) {
        fact *= k;
        bs.c[k] = res.b[k].as_clifford().scaled(GaussRat(Rat(1) / fact));
    }
    res.z = bch_log(CliffordElem::from_polyvector(a), bs, order);
    return res;
}

KSClass ks_class(const Polyvector& beta, const Form* omega) {
    int n = beta.n();
    if (beta.max_degree() > 2 || !beta.degree_part(1).is_zero() ||
        !beta.degree_part(0).is_zero())
        throw error("ks_class needs a 2-vector");
    Form w = omega_or_std(n, omega);
    KSClass out;
    out.n = n;
    out.mu.assign(n, std::vector<PolyScalar>(n, PolyScalar(n)));
    for (int k = 0; k < n; ++k) {
        // mu(@b_k) = i * beta(i_{@b_k} omega)
        Form theta = interior_basis(w, n + k);
        Polyvector v = bivector_on_oneform(beta, theta).scaled(GaussRat::i());
        for (int j = 0; j < 2 * n; ++j) {
            PolyScalar c = v.component(Mask(1) << j);
            if (c.is_zero()) continue;
            if (j >= n) throw error("ks_class: contraction left T^{1,0}");
            out.mu[j][k] = c;
        }
    }
    // delbar closedness per upper index: d_bar of sum_k mu[j][k] dzb_k
    out.delbar_closed = true;
    for (int j = 0; j < n; ++j) {
        Form row(n);
        for (int k = 0; k < n; ++k) row.add_term(Mask(1) << (n + k), out.mu[j][k]);
        if (!delbar(row).is_zero()) out.delbar_closed = false;
    }
    return out;
}

BiHermitianFrames bihermitian_first_order(const Polyvector& beta,
                                          const std::vector<Polyvector>& frame,
                                          const KOneElem* b1, const Form* omega) {
    int n = beta.n();
    Form w = omega_or_std(n, omega);
    Polyvector betabar = beta.conj();
    BiHermitianFrames out;
    for (auto& z : frame) {
        // thb^i = -i i_{Z_i} omega
        Form theta = interior(z, w).scaled(-GaussRat::i());
        out.theta_bar.push_back(theta);
        Polyvector corr = bivector_on_oneform(betabar, theta);
        for (int sign : {+1, -1}) {
            GenSection ebar{z, sign > 0 ? theta : -theta};
            Polyvector pi_tx(n);
            if (b1 && !b1->is_zero()) {
                CliffordElem br = cl_commutator(b1->as_clifford(),
                                                CliffordElem::from_section(ebar));
                pi_tx = br.cl1_part(true).vec;
            }
            TSeries<Polyvector> zi(1, Polyvector(n));
            zi.c[0] = z;
            zi.c[1] = (sign > 0 ? corr : -corr) + pi_tx;
            (sign > 0 ? out.plus : out.minus).push_back(std::move(zi));
        }
    }
    return out;
}

Polyvector build_torus_cp1_bivector(const ObstructionMatrix& p) {
    int n = p.n;
    int dim = n + 1; // coordinate 0 is the projective-line chart coordinate
    Polyvector beta(dim);
    PolyScalar zeta = PolyScalar::variable(dim, 0);
    for (int i = 0; i < n; ++i) {
        PolyScalar c = PolyScalar::constant(dim, p.rows[i][0]) +
                       zeta.scaled(p.rows[i][1]) + (zeta * zeta).scaled(p.rows[i][2]);
        beta += Polyvector::monomial(dim, (Mask(1) << 0) | (Mask(1) << (i + 1)), c);
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            GaussRat l = p.lambda[j][k];
            if (l.is_zero()) continue;
            beta += Polyvector::monomial(dim, (Mask(1) << (j + 1)) | (Mask(1) << (k + 1)),
                                         PolyScalar::constant(dim, l));
        }
    return beta;
}

ObstructionReport obstruction_rank_test(const ObstructionMatrix& p) {
    ObstructionReport rep;
    QMat m(p.n, 3);
    for (int i = 0; i < p.n; ++i)
        for (int c = 0; c < 3; ++c) m.at(i, c) = p.rows[i][c];
    rep.rank = qmat_rank(std::move(m));
    rep.rank_le_1 = rep.rank <= 1;
    rep.schouten_zero = is_poisson(build_torus_cp1_bivector(p));
    rep.consistent = rep.rank_le_1 == rep.schouten_zero;
    return rep;
}

} // namespace gk
