#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gk {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ideal-membership test hit the Buchberger reduction cap; the verdict is
/// genuinely undecided, never silently false.
struct undecided_error : error {
    using error::error;
};

struct degree_overflow_error : error {
    using error::error;
};

struct filtration_error : error {
    using error::error;
};

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Gaussian rational: exact complex number re + i*im with rational parts.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(long r) : re(r) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat conj() const { return {re, -im}; }

    GaussRat operator-() const { return {-re, -im}; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }

    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    /// Squared modulus, a nonnegative rational.
    Rat norm() const { return re * re + im * im; }

    GaussRat inv() const {
        Rat n = norm();
        if (n == 0) throw error("division by zero GaussRat");
        return {re / n, -im / n};
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
};

} // namespace gk
