#pragma once

#include "gk/rational.hpp"

#include <map>
#include <vector>

namespace gk {

/// Exponent vector of length 2n: slots 0..n-1 are z_1..z_n, slots n..2n-1
/// are the formally independent conjugates zb_1..zb_n.
using Expo = std::vector<uint8_t>;

inline constexpr int kMaxTotalDegree = 64;

/// A point of R^{2n} given as Gaussian-rational values of z_1..z_n;
/// evaluation substitutes zb_j = conj(z_j).
using Point = std::vector<GaussRat>;

/// Multivariate polynomial over Gaussian rationals in z_1..z_n, zb_1..zb_n.
/// z and zb are independent formal variables; conjugacy is imposed only at
/// evaluation time. Immutable in spirit: all operations return new values.
class PolyScalar {
public:
    PolyScalar() = default;
    explicit PolyScalar(int n) : n_(n) {}

    static PolyScalar constant(int n, GaussRat c);
    static PolyScalar one(int n) { return constant(n, GaussRat(1)); }
    /// idx in 0..2n-1; 0..n-1 are the z_j, n..2n-1 the zb_j.
    static PolyScalar variable(int n, int idx);
    static PolyScalar monomial(int n, Expo e, GaussRat c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_term() const;
    const std::map<Expo, GaussRat>& terms() const { return terms_; }
    int total_degree() const;

    void add_term(const Expo& e, const GaussRat& c);

    PolyScalar operator-() const;
    PolyScalar& operator+=(const PolyScalar& o);
    PolyScalar& operator-=(const PolyScalar& o);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
    PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }
    PolyScalar scaled(const GaussRat& c) const;

    friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Swaps z_j <-> zb_j exponents and conjugates coefficients.
    PolyScalar conj() const;
    bool is_real() const { return conj() == *this; }

    /// Partial derivative with respect to variable idx (0..2n-1).
    PolyScalar derivative(int idx) const;

    /// Exact value at z_j = pt[j], zb_j = conj(pt[j]).
    GaussRat eval(const Point& pt) const;

    /// Spec-facing evaluation at a real-rational point (x_1..x_n, y_1..y_n),
    /// substituting z_j = x_j + i y_j.
    GaussRat eval_real(const std::vector<Rat>& xy) const;

    /// Homogeneous part of the given total degree.
    PolyScalar homogeneous_part(int degree) const;

    std::string str() const;

private:
    void check_dim(const PolyScalar& o) const;
    int n_ = 0;
    std::map<Expo, GaussRat> terms_;
};

inline Point point_from_real(const std::vector<Rat>& xy) {
    size_t n = xy.size() / 2;
    Point p(n);
    for (size_t j = 0; j < n; ++j) p[j] = GaussRat(xy[j], xy[n + j]);
    return p;
}

} // namespace gk
