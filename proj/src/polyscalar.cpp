#include "gk/polyscalar.hpp"

#include <numeric>
#include <sstream>

namespace gk {

namespace {

int expo_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void check_degree(const Expo& e) {
    if (expo_degree(e) > kMaxTotalDegree)
        throw degree_overflow_error("monomial exceeds total degree cap");
}

} // namespace

PolyScalar PolyScalar::constant(int n, GaussRat c) {
    PolyScalar p(n);
    if (!c.is_zero()) p.terms_.emplace(Expo(2 * n, 0), std::move(c));
    return p;
}

PolyScalar PolyScalar::variable(int n, int idx) {
    if (idx < 0 || idx >= 2 * n) throw error("variable index out of range");
    Expo e(2 * n, 0);
    e[idx] = 1;
    return monomial(n, std::move(e), GaussRat(1));
}

PolyScalar PolyScalar::monomial(int n, Expo e, GaussRat c) {
    if ((int)e.size() != 2 * n) throw error("exponent vector has wrong length");
    check_degree(e);
    PolyScalar p(n);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool PolyScalar::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && expo_degree(terms_.begin()->first) == 0);
}

GaussRat PolyScalar::constant_term() const {
    Expo zero(2 * n_, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? GaussRat() : it->second;
}

int PolyScalar::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, expo_degree(e));
    return d;
}

void PolyScalar::add_term(const Expo& e, const GaussRat& c) {
    if (c.is_zero()) return;
    check_degree(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PolyScalar::check_dim(const PolyScalar& o) const {
    if (n_ != o.n_) throw error("chart dimension mismatch");
}

PolyScalar PolyScalar::operator-() const {
    PolyScalar r(n_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
    check_dim(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
    check_dim(o);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    a.check_dim(b);
    PolyScalar r(a.n_);
    Expo e(2 * a.n_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = (uint8_t)(ea[k] + eb[k]);
            r.add_term(e, ca * cb);
        }
    return r;
}

PolyScalar PolyScalar::scaled(const GaussRat& c) const {
    PolyScalar r(n_);
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

PolyScalar PolyScalar::conj() const {
    PolyScalar r(n_);
    for (auto& [e, c] : terms_) {
        Expo f(e.size());
        for (int j = 0; j < n_; ++j) {
            f[j] = e[n_ + j];
            f[n_ + j] = e[j];
        }
        r.terms_.emplace(std::move(f), c.conj());
    }
    return r;
}

PolyScalar PolyScalar::derivative(int idx) const {
    if (idx < 0 || idx >= 2 * n_) throw error("variable index out of range");
    PolyScalar r(n_);
    for (auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Expo f = e;
        f[idx] -= 1;
        r.add_term(f, c * GaussRat(Rat(e[idx])));
    }
    return r;
}

GaussRat PolyScalar::eval(const Point& pt) const {
    if ((int)pt.size() != n_) throw error("point dimension mismatch");
    // Power tables per variable keep the substitution a ring homomorphism
    // evaluated in O(terms * 2n) multiplies.
    std::vector<std::vector<GaussRat>> pw(2 * n_);
    for (auto& [e, c] : terms_)
        for (int k = 0; k < 2 * n_; ++k)
            if (pw[k].size() <= e[k]) {
                if (pw[k].empty()) pw[k].push_back(GaussRat(1));
                GaussRat base = k < n_ ? pt[k] : pt[k - n_].conj();
                while (pw[k].size() <= e[k]) pw[k].push_back(pw[k].back() * base);
            }
    GaussRat acc;
    for (auto& [e, c] : terms_) {
        GaussRat term = c;
        for (int k = 0; k < 2 * n_; ++k)
            if (e[k]) term *= pw[k][e[k]];
        acc += term;
    }
    return acc;
}

GaussRat PolyScalar::eval_real(const std::vector<Rat>& xy) const {
    if ((int)xy.size() != 2 * n_) throw error("point dimension mismatch");
    return eval(point_from_real(xy));
}

PolyScalar PolyScalar::homogeneous_part(int degree) const {
    PolyScalar r(n_);
    for (auto& [e, c] : terms_)
        if (expo_degree(e) == degree) r.terms_.emplace(e, c);
    return r;
}

std::string PolyScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lex so leading terms print first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < 2 * n_; ++k) {
            if (!e[k]) continue;
            os << "*" << (k < n_ ? "z" : "zb") << (k % n_) + 1;
            if (e[k] > 1) os << "^" << (int)e[k];
        }
    }
    return os.str();
}

} // namespace gk
