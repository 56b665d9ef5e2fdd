#include "gk/polyvector.hpp"

#include <sstream>

namespace gk {

Polyvector Polyvector::scalar(int n, PolyScalar c) {
    Polyvector p(n);
    p.add_term(0, c);
    return p;
}

Polyvector Polyvector::basis_vector(int n, int idx) {
    if (idx < 0 || idx >= 2 * n) throw error("frame index out of range");
    return monomial(n, Mask(1) << idx, PolyScalar::one(n));
}

Polyvector Polyvector::monomial(int n, Mask m, PolyScalar c) {
    if (m >> (2 * n)) throw error("frame mask out of range");
    Polyvector p(n);
    p.add_term(m, c);
    return p;
}

PolyScalar Polyvector::component(Mask m) const {
    auto it = comp_.find(m);
    return it == comp_.end() ? PolyScalar(n_) : it->second;
}

void Polyvector::add_term(Mask m, const PolyScalar& c) {
    if (c.is_zero()) return;
    auto it = comp_.find(m);
    if (it == comp_.end()) {
        comp_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

bool Polyvector::is_homogeneous(int* degree) const {
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

int Polyvector::max_degree() const {
    int d = 0;
    for (auto& [m, c] : comp_) d = std::max(d, std::popcount(m));
    return d;
}

Polyvector Polyvector::degree_part(int k) const {
    Polyvector r(n_);
    for (auto& [m, c] : comp_)
        if (std::popcount(m) == k) r.comp_.emplace(m, c);
    return r;
}

Polyvector Polyvector::operator-() const {
    Polyvector r(n_);
    for (auto& [m, c] : comp_) r.comp_.emplace(m, -c);
    return r;
}

Polyvector& Polyvector::operator+=(const Polyvector& o) {
    if (n_ != o.n_) throw error("chart dimension mismatch");
    for (auto& [m, c] : o.comp_) add_term(m, c);
    return *this;
}

Polyvector& Polyvector::operator-=(const Polyvector& o) {
    if (n_ != o.n_) throw error("chart dimension mismatch");
    for (auto& [m, c] : o.comp_) add_term(m, -c);
    return *this;
}

Polyvector Polyvector::scaled(const GaussRat& c) const {
    Polyvector r(n_);
    if (c.is_zero()) return r;
    for (auto& [m, v] : comp_) r.comp_.emplace(m, v.scaled(c));
    return r;
}

Polyvector Polyvector::conj() const {
    Polyvector r(n_);
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

Polyvector Polyvector::eval_at(const Point& pt) const {
    Polyvector r(n_);
    for (auto& [m, c] : comp_)
        r.add_term(m, PolyScalar::constant(n_, c.eval(pt)));
    return r;
}

Polyvector pv_wedge(const Polyvector& a, const Polyvector& b) {
    if (a.n() != b.n()) throw error("chart dimension mismatch");
    Polyvector r(a.n());
    for (auto& [ma, ca] : a.components())
        for (auto& [mb, cb] : b.components()) {
            if (ma & mb) continue;
            int s = wedge_sign(ma, mb);
            PolyScalar c = ca * cb;
            r.add_term(ma | mb, s > 0 ? c : -c);
        }
    return r;
}

namespace {

// Left derivative with respect to the odd generator of the given index.
Polyvector xi_derivative(const Polyvector& p, int idx) {
    Mask bit = Mask(1) << idx;
    Polyvector r(p.n());
    for (auto& [m, c] : p.components()) {
        if (!(m & bit)) continue;
        int s = (mask_count_below(m, idx) & 1) ? -1 : 1;
        r.add_term(m & ~bit, s > 0 ? c : -c);
    }
    return r;
}

Polyvector coeff_derivative(const Polyvector& p, int idx) {
    Polyvector r(p.n());
    for (auto& [m, c] : p.components()) {
        PolyScalar dc = c.derivative(idx);
        if (!dc.is_zero()) r.add_term(m, dc);
    }
    return r;
}

// Schouten bracket of graded-homogeneous parts as the odd Poisson bracket
// in Darboux form, right derivative on the first slot:
// [P,Q] = sum_a (-1)^{p-1} (dP/dxi_a) ^ (d_a Q)  -  (d_a P) ^ (dQ/dxi_a),
// which extends the Lie bracket and matches [u^v,w] = u^[v,w] + [u,w]^v.
Polyvector schouten_homogeneous(const Polyvector& p, int dp, const Polyvector& q, int dq) {
    (void)dq;
    int n2 = 2 * p.n();
    Polyvector r(p.n());
    int sgn = (dp - 1) & 1 ? -1 : 1;
    for (int a = 0; a < n2; ++a) {
        Polyvector t1 = pv_wedge(xi_derivative(p, a), coeff_derivative(q, a));
        Polyvector t2 = pv_wedge(coeff_derivative(p, a), xi_derivative(q, a));
        r += sgn > 0 ? t1 : -t1;
        r += -t2;
    }
    return r;
}

} // namespace

Polyvector schouten(const Polyvector& p, const Polyvector& q) {
    if (p.n() != q.n()) throw error("chart dimension mismatch");
    Polyvector r(p.n());
    for (int dp = 0; dp <= p.max_degree(); ++dp) {
        Polyvector ph = p.degree_part(dp);
        if (ph.is_zero()) continue;
        for (int dq = 0; dq <= q.max_degree(); ++dq) {
            Polyvector qh = q.degree_part(dq);
            if (qh.is_zero()) continue;
            r += schouten_homogeneous(ph, dp, qh, dq);
        }
    }
    return r;
}

bool is_poisson(const Polyvector& beta) {
    return schouten(beta, beta).is_zero();
}

PolyScalar apply_vector(const Polyvector& v, const PolyScalar& f) {
    PolyScalar r(f.n());
    for (auto& [m, c] : v.components()) {
        if (std::popcount(m) != 1) throw error("apply_vector needs a degree-1 field");
        r += c * f.derivative(std::countr_zero(m));
    }
    return r;
}

Form differential(const PolyScalar& f) {
    Form r(f.n());
    for (int a = 0; a < 2 * f.n(); ++a) {
        PolyScalar d = f.derivative(a);
        if (!d.is_zero()) r.add_term(Mask(1) << a, d);
    }
    return r;
}

Form contract(const Polyvector& p, const Form& f) {
    if (p.n() != f.n()) throw error("chart dimension mismatch");
    Form r(f.n());
    for (auto& [mp, cp] : p.components()) {
        if (mp == 0) {
            for (auto& [mf, cf] : f.components()) r.add_term(mf, cp * cf);
            continue;
        }
        for (auto& [mf, cf] : f.components()) {
            if ((mp & mf) != mp) continue;
            // interior products applied innermost-first over ascending bits
            Mask cur = mf;
            int sign = 1;
            for (int b : mask_bits(mp)) {
                if (mask_count_below(cur, b) & 1) sign = -sign;
                cur &= ~(Mask(1) << b);
            }
            PolyScalar c = cp * cf;
            r.add_term(cur, sign > 0 ? c : -c);
        }
    }
    return r;
}

Form interior(const Polyvector& v, const Form& f) {
    if (v.max_degree() > 1 || !v.degree_part(0).is_zero())
        throw error("interior needs a degree-1 field");
    return contract(v, f);
}

Polyvector bivector_on_oneform(const Polyvector& beta, const Form& theta) {
    if (beta.n() != theta.n()) throw error("chart dimension mismatch");
    Polyvector r(beta.n());
    for (auto& [mt, ct] : theta.components()) {
        if (std::popcount(mt) != 1) throw error("bivector_on_oneform needs a 1-form");
        int b = std::countr_zero(mt);
        for (auto& [mb, cb] : beta.components()) {
            if (std::popcount(mb) != 2) throw error("bivector_on_oneform needs a 2-vector");
            if (!(mb & mt)) continue;
            int s = (mask_count_below(mb, b) & 1) ? -1 : 1;
            PolyScalar c = cb * ct;
            r.add_term(mb & ~mt, s > 0 ? c : -c);
        }
    }
    return r;
}

PolyScalar poisson_bracket(const Polyvector& beta, const PolyScalar& f, const PolyScalar& g) {
    Form w = wedge(differential(f), differential(g));
    Form res = contract(beta, w);
    return res.component(0);
}

Form lie_derivative(const Polyvector& v, const Form& f) {
    if (v.max_degree() > 1 || !v.degree_part(0).is_zero())
        throw error("lie_derivative needs a degree-1 field");
    int n2 = 2 * f.n();
    Form r(f.n());
    // Derivative of coefficients along v.
    for (auto& [m, c] : f.components()) r.add_term(m, apply_vector(v, c));
    // L_v du_a = d(v^a) expanded slot by slot.
    for (auto& [m, c] : f.components()) {
        auto bits = mask_bits(m);
        for (size_t pos = 0; pos < bits.size(); ++pos) {
            int a = bits[pos];
            PolyScalar va = v.component(Mask(1) << a);
            if (va.is_zero()) continue;
            Mask rest = m & ~(Mask(1) << a);
            for (int b = 0; b < n2; ++b) {
                PolyScalar dv = va.derivative(b);
                if (dv.is_zero()) continue;
                if (rest & (Mask(1) << b)) continue;
                int sign = (pos & 1) ? -1 : 1;
                sign *= wedge_sign(Mask(1) << b, rest);
                PolyScalar cc = c * dv;
                r.add_term(rest | (Mask(1) << b), sign > 0 ? cc : -cc);
            }
        }
    }
    return r;
}

Polyvector lie_bracket(const Polyvector& v, const Polyvector& w) {
    return schouten(v, w);
}

std::string Polyvector::str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : comp_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        for (int b : mask_bits(m))
            os << (b < n_ ? "^^@" : "^^@b") << (b % n_) + 1;
    }
    return os.str();
}

} // namespace gk
