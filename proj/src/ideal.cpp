#include "gk/ideal.hpp"

#include <algorithm>
#include <deque>

namespace gk {

namespace {

// Leading term under lex: largest exponent vector in the map's key order.
std::pair<Expo, GaussRat> leading(const PolyScalar& p) {
    auto it = p.terms().rbegin();
    return {it->first, it->second};
}

bool expo_divides(const Expo& a, const Expo& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = (uint8_t)(a[k] - b[k]);
    return r;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

PolyScalar make_monic(const PolyScalar& p) {
    if (p.is_zero()) return p;
    return p.scaled(leading(p).second.inv());
}

PolyScalar s_polynomial(const PolyScalar& f, const PolyScalar& g) {
    auto [ef, cf] = leading(f);
    auto [eg, cg] = leading(g);
    Expo l = expo_lcm(ef, eg);
    PolyScalar mf = PolyScalar::monomial(f.n(), expo_sub(l, ef), cf.inv());
    PolyScalar mg = PolyScalar::monomial(g.n(), expo_sub(l, eg), cg.inv());
    return mf * f - mg * g;
}

} // namespace

PolyScalar poly_divide_remainder(const PolyScalar& g, const std::vector<PolyScalar>& divisors) {
    PolyScalar p = g;
    PolyScalar rem(g.n());
    while (!p.is_zero()) {
        auto [ep, cp] = leading(p);
        bool reduced = false;
        for (const auto& f : divisors) {
            if (f.is_zero()) continue;
            auto [ef, cf] = leading(f);
            if (!expo_divides(ef, ep)) continue;
            PolyScalar q = PolyScalar::monomial(p.n(), expo_sub(ep, ef), cp / cf);
            p -= q * f;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(ep, cp);
            p.add_term(ep, -cp);
        }
    }
    return rem;
}

PolyIdeal::PolyIdeal(std::vector<PolyScalar> gens, int reduction_cap)
    : n_(0), cap_(reduction_cap) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(g);
    if (gens_.empty()) throw error("ideal needs at least one nonzero generator");
    n_ = gens_.front().n();
    for (auto& g : gens_)
        if (g.n() != n_) throw error("ideal generators live in different charts");

    if (gens_.size() == 1) {
        kind_ = Kind::principal;
    } else {
        bool all_monomial = std::all_of(gens_.begin(), gens_.end(), [](const PolyScalar& g) {
            return g.terms().size() == 1;
        });
        kind_ = all_monomial ? Kind::monomial : Kind::general;
    }
}

bool PolyIdeal::contains(const PolyScalar& g) const {
    if (g.is_zero()) return true;
    if (g.n() != n_) throw error("chart dimension mismatch");

    if (kind_ == Kind::principal)
        return poly_divide_remainder(g, gens_).is_zero();

    if (kind_ == Kind::monomial) {
        for (auto& [e, c] : g.terms()) {
            bool ok = false;
            for (const auto& m : gens_)
                if (expo_divides(m.terms().begin()->first, e)) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    }

    // General case: Buchberger completion, cached across queries.
    if (!groebner_) {
        std::vector<PolyScalar> basis;
        for (auto& f : gens_) basis.push_back(make_monic(f));
        std::deque<std::pair<size_t, size_t>> pairs;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
        int steps = 0;
        bool complete = true;
        while (!pairs.empty()) {
            if (++steps > cap_) {
                complete = false;
                break;
            }
            auto [i, j] = pairs.front();
            pairs.pop_front();
            PolyScalar s = poly_divide_remainder(s_polynomial(basis[i], basis[j]), basis);
            if (s.is_zero()) continue;
            basis.push_back(make_monic(s));
            for (size_t k = 0; k + 1 < basis.size(); ++k)
                pairs.emplace_back(k, basis.size() - 1);
        }
        groebner_ = std::move(basis);
        groebner_complete_ = complete;
    }

    bool zero = poly_divide_remainder(g, *groebner_).is_zero();
    if (zero) return true; // an explicit combination exists regardless of completeness
    if (!groebner_complete_)
        throw undecided_error("ideal membership undecided at Buchberger cap");
    return false;
}

} // namespace gk
