#include "gk/form.hpp"

#include <sstream>

namespace gk {

Form Form::scalar(int n, PolyScalar c) {
    Form f(n);
    f.add_term(0, c);
    return f;
}

Form Form::basis_oneform(int n, int idx) {
    if (idx < 0 || idx >= 2 * n) throw error("coframe index out of range");
    return monomial(n, Mask(1) << idx, PolyScalar::one(n));
}

Form Form::monomial(int n, Mask m, PolyScalar c) {
    if (m >> (2 * n)) throw error("coframe mask out of range");
    Form f(n);
    f.add_term(m, c);
    return f;
}

Form Form::omega_std(int n) {
    Form w(n);
    GaussRat half_i{Rat(0), Rat(1, 2)};
    for (int j = 0; j < n; ++j)
        w.add_term((Mask(1) << j) | (Mask(1) << (n + j)),
                   PolyScalar::constant(n, half_i));
    return w;
}

PolyScalar Form::component(Mask m) const {
    auto it = comp_.find(m);
    return it == comp_.end() ? PolyScalar(n_) : it->second;
}

void Form::add_term(Mask m, const PolyScalar& c) {
    if (c.is_zero()) return;
    auto it = comp_.find(m);
    if (it == comp_.end()) {
        comp_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

bool Form::is_homogeneous(int* degree) const {
    if (comp_.empty()) {
        if (degree) *degree = 0;
        return true;
    }
    int d = std::popcount(comp_.begin()->first);
    for (auto& [m, c] : comp_)
        if (std::popcount(m) != d) return false;
    if (degree) *degree = d;
    return true;
}

int Form::max_degree() const {
    int d = 0;
    for (auto& [m, c] : comp_) d = std::max(d, std::popcount(m));
    return d;
}

Form Form::degree_part(int k) const {
    Form r(n_);
    for (auto& [m, c] : comp_)
        if (std::popcount(m) == k) r.comp_.emplace(m, c);
    return r;
}

Form Form::bidegree_part(int p, int q) const {
    Form r(n_);
    Mask holo = (Mask(1) << n_) - 1;
    for (auto& [m, c] : comp_)
        if (std::popcount(m & holo) == p && std::popcount(m >> n_) == q)
            r.comp_.emplace(m, c);
    return r;
}

bool Form::has_only_bidegrees(const std::vector<std::pair<int, int>>& allowed) const {
    Mask holo = (Mask(1) << n_) - 1;
    for (auto& [m, c] : comp_) {
        std::pair<int, int> pq{std::popcount(m & holo), std::popcount(m >> n_)};
        bool ok = false;
        for (auto& a : allowed)
            if (a == pq) ok = true;
        if (!ok) return false;
    }
    return true;
}

Form Form::operator-() const {
    Form r(n_);
    for (auto& [m, c] : comp_) r.comp_.emplace(m, -c);
    return r;
}

Form& Form::operator+=(const Form& o) {
    if (n_ != o.n_) throw error("chart dimension mismatch");
    for (auto& [m, c] : o.comp_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (n_ != o.n_) throw error("chart dimension mismatch");
    for (auto& [m, c] : o.comp_) add_term(m, -c);
    return *this;
}

Form Form::scaled(const GaussRat& c) const {
    Form r(n_);
    if (c.is_zero()) return r;
    for (auto& [m, v] : comp_) r.comp_.emplace(m, v.scaled(c));
    return r;
}

Form Form::scaled(const PolyScalar& c) const {
    Form r(n_);
    for (auto& [m, v] : comp_) r.add_term(m, v * c);
    return r;
}

Form Form::conj() const {
    Form r(n_);
    for (auto& [m, c] : comp_) {
        auto bits = mask_bits(m);
        std::vector<int> swapped;
        Mask nm = 0;
        for (int b : bits) {
            int s = b < n_ ? b + n_ : b - n_;
            swapped.push_back(s);
            nm |= Mask(1) << s;
        }
        int sign = permutation_sign(swapped);
        PolyScalar cc = c.conj();
        r.add_term(nm, sign > 0 ? cc : -cc);
    }
    return r;
}

Form Form::eval_at(const Point& pt) const {
    Form r(n_);
    for (auto& [m, c] : comp_)
        r.add_term(m, PolyScalar::constant(n_, c.eval(pt)));
    return r;
}

Form wedge(const Form& a, const Form& b) {
    if (a.n() != b.n()) throw error("chart dimension mismatch");
    Form r(a.n());
    for (auto& [ma, ca] : a.components())
        for (auto& [mb, cb] : b.components()) {
            if (ma & mb) continue;
            int s = wedge_sign(ma, mb);
            PolyScalar c = ca * cb;
            r.add_term(ma | mb, s > 0 ? c : -c);
        }
    return r;
}

Form wedge_power(const Form& a, int k) {
    Form r = Form::scalar(a.n(), GaussRat(1));
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Form wedge_exp(const Form& a) {
    Form r = Form::scalar(a.n(), GaussRat(1));
    Form pw = r;
    Rat fact(1);
    for (int k = 1; k <= 2 * a.n(); ++k) {
        pw = wedge(pw, a);
        if (pw.is_zero()) break;
        fact *= k;
        r += pw.scaled(GaussRat(Rat(1) / fact));
    }
    return r;
}

namespace {

Form d_range(const Form& f, int lo, int hi) {
    Form r(f.n());
    for (auto& [m, c] : f.components())
        for (int a = lo; a < hi; ++a) {
            Mask bit = Mask(1) << a;
            if (m & bit) continue;
            PolyScalar dc = c.derivative(a);
            if (dc.is_zero()) continue;
            int s = wedge_sign(bit, m);
            r.add_term(bit | m, s > 0 ? dc : -dc);
        }
    return r;
}

} // namespace

Form exterior_d(const Form& f) { return d_range(f, 0, 2 * f.n()); }
Form del(const Form& f) { return d_range(f, 0, f.n()); }
Form delbar(const Form& f) { return d_range(f, f.n(), 2 * f.n()); }

Form interior_basis(const Form& f, int idx) {
    Mask bit = Mask(1) << idx;
    Form r(f.n());
    for (auto& [m, c] : f.components()) {
        if (!(m & bit)) continue;
        int s = (mask_count_below(m, idx) & 1) ? -1 : 1;
        r.add_term(m & ~bit, s > 0 ? c : -c);
    }
    return r;
}

Form homotopy(const Form& f) {
    // Radial formula with exact rational weights: on a monomial u^alpha e_I
    // with |alpha|+|I| = N > 0, K = (1/N) i_E where E is the Euler field.
    int n2 = 2 * f.n();
    Form r(f.n());
    for (auto& [m, c] : f.components()) {
        int k = std::popcount(m);
        if (k == 0) continue;
        for (auto& [e, coef] : c.terms()) {
            int palpha = 0;
            for (auto x : e) palpha += x;
            Rat weight(1, palpha + k);
            for (int a = 0; a < n2; ++a) {
                Mask bit = Mask(1) << a;
                if (!(m & bit)) continue;
                int s = (mask_count_below(m, a) & 1) ? -1 : 1;
                Expo e2 = e;
                e2[a] += 1;
                GaussRat cc = coef * GaussRat(weight);
                r.add_term(m & ~bit,
                           PolyScalar::monomial(f.n(), e2, s > 0 ? cc : -cc));
            }
        }
    }
    return r;
}

Form homotopy_primitive(const Form& f) {
    if (!exterior_d(f).is_zero()) throw error("homotopy_primitive: form is not closed");
    if (!f.degree_part(0).is_zero()) throw error("homotopy_primitive: positive degree required");
    return homotopy(f);
}

PolyScalar lefschetz_contract(const Form& p, const Form* omega) {
    int n = p.n();
    for (auto& [m, c] : p.components()) {
        Mask holo = (Mask(1) << n) - 1;
        if (std::popcount(m & holo) != 1 || std::popcount(m >> n) != 1)
            throw error("lefschetz_contract: form is not of bidegree (1,1)");
    }
    // Dual bivector W normalized so that the trace of omega itself is n.
    Form w = omega ? *omega : Form::omega_std(n);
    PolyScalar acc(n);
    // Invert the (1,1) coefficient matrix w_{j,kb}.
    std::vector<std::vector<GaussRat>> wm(n, std::vector<GaussRat>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            PolyScalar c = w.component((Mask(1) << j) | (Mask(1) << (n + k)));
            if (!c.is_constant())
                throw error("lefschetz_contract: omega must have constant coefficients");
            wm[j][k] = c.constant_term();
        }
    // Gaussian inverse of wm.
    std::vector<std::vector<GaussRat>> inv(n, std::vector<GaussRat>(n));
    for (int j = 0; j < n; ++j) inv[j][j] = GaussRat(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int rrow = col; rrow < n; ++rrow)
            if (!wm[rrow][col].is_zero()) {
                piv = rrow;
                break;
            }
        if (piv < 0) throw error("lefschetz_contract: degenerate omega");
        std::swap(wm[piv], wm[col]);
        std::swap(inv[piv], inv[col]);
        GaussRat d = wm[col][col].inv();
        for (int k = 0; k < n; ++k) {
            wm[col][k] *= d;
            inv[col][k] *= d;
        }
        for (int rrow = 0; rrow < n; ++rrow) {
            if (rrow == col || wm[rrow][col].is_zero()) continue;
            GaussRat f = wm[rrow][col];
            for (int k = 0; k < n; ++k) {
                wm[rrow][k] -= f * wm[col][k];
                inv[rrow][k] -= f * inv[col][k];
            }
        }
    }
    // trace_omega(p) = sum_{j,k} (w^{-1})_{kj} p_{j,kb}
    for (auto& [m, c] : p.components()) {
        int j = std::countr_zero(m & ((Mask(1) << n) - 1));
        int k = std::countr_zero(m >> n);
        acc += c.scaled(inv[k][j]);
    }
    return acc;
}

Form substitute_coframe(const Form& f, int target_n,
                        const std::vector<std::vector<GaussRat>>& images) {
    Form r(target_n);
    for (auto& [m, c] : f.components()) {
        if (!c.is_constant())
            throw error("substitute_coframe expects constant coefficients");
        Form term = Form::scalar(target_n, c.constant_term());
        for (int a : mask_bits(m)) {
            Form img(target_n);
            for (int b = 0; b < 2 * target_n; ++b)
                if (!images[a][b].is_zero())
                    img.add_term(Mask(1) << b, PolyScalar::constant(target_n, images[a][b]));
            term = wedge(term, img);
            if (term.is_zero()) break;
        }
        r += term;
    }
    return r;
}

std::string Form::str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : comp_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        for (int b : mask_bits(m))
            os << (b < n_ ? "^^dz" : "^^dzb") << (b % n_) + 1;
    }
    return os.str();
}

} // namespace gk
