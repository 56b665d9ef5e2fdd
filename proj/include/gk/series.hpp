#pragma once

#include "gk/polyscalar.hpp"

#include <functional>
#include <vector>

namespace gk {

/// Power series in the deformation parameter t, truncated at t^order.
/// Arithmetic is exact modulo t^{order+1}.
template <class T>
struct TSeries {
    int order = 0;
    std::vector<T> c; // indexed 0..order

    TSeries() = default;
    TSeries(int ord, const T& zero) : order(ord), c(ord + 1, zero) {}

    const T& operator[](int k) const { return c[k]; }
    T& operator[](int k) { return c[k]; }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.order == b.order && a.c == b.c;
    }
};

template <class T>
TSeries<T> series_add(const TSeries<T>& a, const TSeries<T>& b) {
    TSeries<T> r = a;
    for (int k = 0; k <= r.order; ++k) r.c[k] = r.c[k] + b.c[k];
    return r;
}

template <class T>
TSeries<T> series_sub(const TSeries<T>& a, const TSeries<T>& b) {
    TSeries<T> r = a;
    for (int k = 0; k <= r.order; ++k) r.c[k] = r.c[k] - b.c[k];
    return r;
}

/// Cauchy product with a caller-supplied multiplier, so one routine serves
/// scalars, forms, Clifford elements and matrices.
template <class T, class Mul>
TSeries<T> series_mul(const TSeries<T>& a, const TSeries<T>& b, Mul mul, const T& zero) {
    TSeries<T> r(a.order, zero);
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; i + j <= a.order && j <= b.order; ++j)
            r.c[i + j] = r.c[i + j] + mul(a.c[i], b.c[j]);
    return r;
}

/// exp of a series with zero constant term: sum_m x^m / m! truncates.
template <class T, class Mul>
TSeries<T> series_exp(const TSeries<T>& x, Mul mul, const T& zero, const T& one) {
    TSeries<T> r(x.order, zero);
    r.c[0] = one;
    TSeries<T> pw = r;
    Rat fact(1);
    for (int m = 1; m <= x.order; ++m) {
        pw = series_mul(pw, x, mul, zero);
        fact *= m;
        GaussRat inv{Rat(1) / fact};
        for (int k = 0; k <= x.order; ++k) r.c[k] = r.c[k] + pw.c[k].scaled(inv);
    }
    return r;
}

/// log of a series with constant term one: sum (-1)^{m+1} (x-1)^m / m.
template <class T, class Mul>
TSeries<T> series_log(const TSeries<T>& x, Mul mul, const T& zero, const T& one) {
    TSeries<T> u = x;
    u.c[0] = u.c[0] - one;
    TSeries<T> r(x.order, zero);
    TSeries<T> pw(x.order, zero);
    pw.c[0] = one;
    for (int m = 1; m <= x.order; ++m) {
        pw = series_mul(pw, u, mul, zero);
        GaussRat coef{Rat(m % 2 ? 1 : -1, m)};
        for (int k = 0; k <= x.order; ++k) r.c[k] = r.c[k] + pw.c[k].scaled(coef);
    }
    return r;
}

/// Evaluate at a rational t.
template <class T>
T series_at(const TSeries<T>& s, const Rat& t) {
    T acc = s.c[0];
    Rat pw(1);
    for (int k = 1; k <= s.order; ++k) {
        pw *= t;
        acc = acc + s.c[k].scaled(GaussRat(pw));
    }
    return acc;
}

using SeriesScalar = TSeries<PolyScalar>;

inline SeriesScalar series_scalar(int order, int n) {
    return SeriesScalar(order, PolyScalar(n));
}

inline SeriesScalar series_scalar_mul(const SeriesScalar& a, const SeriesScalar& b) {
    return series_mul(a, b, [](const PolyScalar& x, const PolyScalar& y) { return x * y; },
                      PolyScalar(a.c[0].n()));
}

} // namespace gk
