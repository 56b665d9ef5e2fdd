#pragma once

#include "gk/clifford.hpp"
#include "gk/polyvector.hpp"

#include <random>

namespace gktest {

using namespace gk;

/// Deterministic generator of small exact inputs for property tests.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    int irange(int lo, int hi) { // inclusive
        return (int)(eng() % (uint64_t)(hi - lo + 1)) + lo;
    }

    Rat rat(int maxnum = 3, int maxden = 3) {
        int num = irange(-maxnum, maxnum);
        int den = irange(1, maxden);
        return Rat(num, den);
    }

    GaussRat gauss() { return {rat(), rat()}; }

    GaussRat gauss_nonzero() {
        for (;;) {
            GaussRat g = gauss();
            if (!g.is_zero()) return g;
        }
    }

    PolyScalar poly(int n, int maxdeg = 2, int nterms = 3) {
        PolyScalar p(n);
        for (int t = 0; t < nterms; ++t) {
            Expo e(2 * n, 0);
            int deg = irange(0, maxdeg);
            for (int d = 0; d < deg; ++d) e[irange(0, 2 * n - 1)]++;
            p += PolyScalar::monomial(n, e, gauss());
        }
        return p;
    }

    Form form(int n, int degree, int nterms = 3, int maxdeg = 2) {
        Form f(n);
        for (int t = 0; t < nterms; ++t) {
            Mask m = 0;
            while (std::popcount(m) < degree) m |= Mask(1) << irange(0, 2 * n - 1);
            f += Form::monomial(n, m, poly(n, maxdeg, 2));
        }
        return f;
    }

    Form mixed_form(int n, int maxdegree, int nterms = 4) {
        Form f(n);
        for (int t = 0; t < nterms; ++t) f += form(n, irange(0, maxdegree), 1);
        return f;
    }

    Polyvector polyvector(int n, int degree, int nterms = 3, int maxdeg = 2) {
        Polyvector p(n);
        for (int t = 0; t < nterms; ++t) {
            Mask m = 0;
            while (std::popcount(m) < degree) m |= Mask(1) << irange(0, 2 * n - 1);
            p += Polyvector::monomial(n, m, poly(n, maxdeg, 2));
        }
        return p;
    }

    GenSection section(int n) {
        return {polyvector(n, 1, 2, 1), form(n, 1, 2, 1)};
    }

    Point point(int n) {
        Point p(n);
        for (auto& c : p) c = gauss();
        return p;
    }

    std::vector<Rat> real_point(int n) {
        std::vector<Rat> xy(2 * n);
        for (auto& c : xy) c = rat();
        return xy;
    }

    PolyScalar holo_poly(int n, int maxdeg = 2, int nterms = 2) {
        PolyScalar f(n);
        for (int t = 0; t < nterms; ++t) {
            Expo e(2 * n, 0);
            int deg = irange(0, maxdeg);
            for (int d = 0; d < deg; ++d) e[irange(0, n - 1)]++;
            f += PolyScalar::monomial(n, e, gauss());
        }
        return f;
    }

    /// Random holomorphic Poisson bivector from one of three families that
    /// are Poisson by construction: f * u ^ v with constant directions,
    /// lambda-combinations of commuting toric fields, or a constant bivector.
    Polyvector poisson_bivector(int n) {
        int which = irange(0, 2);
        Polyvector beta(n);
        if (which == 0) {
            int i = irange(0, n - 1), j = irange(0, n - 1);
            if (i == j) j = (j + 1) % n;
            beta += Polyvector::monomial(n, (Mask(1) << i) | (Mask(1) << j),
                                         holo_poly(n));
        } else if (which == 1) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    PolyScalar c = PolyScalar::variable(n, i) * PolyScalar::variable(n, j);
                    beta += Polyvector::monomial(n, (Mask(1) << i) | (Mask(1) << j),
                                                 c.scaled(gauss()));
                }
        } else {
            for (int t = 0; t < 2; ++t) {
                int a = irange(0, n - 1), b = irange(0, n - 1);
                if (a == b) continue;
                beta += Polyvector::monomial(n, (Mask(1) << a) | (Mask(1) << b),
                                             PolyScalar::constant(n, gauss()));
            }
        }
        return beta;
    }
};

} // namespace gktest
