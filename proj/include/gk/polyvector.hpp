#pragma once

#include "gk/form.hpp"

namespace gk {

/// Polyvector field with PolyScalar coefficients.  Components keyed by a
/// 2n-bit mask over the frame @_1..@_n, @b_1..@b_n (holomorphic then
/// antiholomorphic coordinate vectors).
class Polyvector {
public:
    Polyvector() = default;
    explicit Polyvector(int n) : n_(n) {}

    static Polyvector scalar(int n, PolyScalar c);
    static Polyvector basis_vector(int n, int idx);
    static Polyvector monomial(int n, Mask m, PolyScalar c);

    int n() const { return n_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<Mask, PolyScalar>& components() const { return comp_; }
    PolyScalar component(Mask m) const;
    void add_term(Mask m, const PolyScalar& c);

    bool is_homogeneous(int* degree = nullptr) const;
    int max_degree() const;
    Polyvector degree_part(int k) const;

    Polyvector operator-() const;
    Polyvector& operator+=(const Polyvector& o);
    Polyvector& operator-=(const Polyvector& o);
    friend Polyvector operator+(Polyvector a, const Polyvector& b) { return a += b; }
    friend Polyvector operator-(Polyvector a, const Polyvector& b) { return a -= b; }
    Polyvector scaled(const GaussRat& c) const;
    friend bool operator==(const Polyvector& a, const Polyvector& b) {
        return a.n_ == b.n_ && a.comp_ == b.comp_;
    }

    Polyvector conj() const;
    Polyvector eval_at(const Point& pt) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Mask, PolyScalar> comp_;
};

Polyvector pv_wedge(const Polyvector& a, const Polyvector& b);

/// Schouten bracket, the graded extension of the Lie bracket of vector
/// fields; [beta,beta] = 0 is the Poisson condition.
Polyvector schouten(const Polyvector& p, const Polyvector& q);

bool is_poisson(const Polyvector& beta);

/// Directional derivative of a function by a degree-1 field.
PolyScalar apply_vector(const Polyvector& v, const PolyScalar& f);

/// Exterior derivative of a function as a 1-form.
Form differential(const PolyScalar& f);

/// Full contraction of a form by a polyvector: a decomposable u_1^...^u_k
/// applies interior products innermost-first, i_{u_k} o ... o i_{u_1}
/// (determinant pairing, contract(@1^^@2, dz1^^dz2) = +1).
Form contract(const Polyvector& p, const Form& f);

/// Interior product by a degree-1 field (anti-derivation on forms).
Form interior(const Polyvector& v, const Form& f);

/// Contraction of a 2-vector by a 1-form: theta -> i_theta(beta), the map
/// that appears in the upper-right block of deformed structures.
Polyvector bivector_on_oneform(const Polyvector& beta, const Form& theta);

/// {f,g} = beta(df ^ dg).
PolyScalar poisson_bracket(const Polyvector& beta, const PolyScalar& f, const PolyScalar& g);

/// Lie derivative of a form computed componentwise (independently of the
/// Cartan identity, which the tests use as the cross-check).
Form lie_derivative(const Polyvector& v, const Form& f);

/// Lie bracket of degree-1 fields.
Polyvector lie_bracket(const Polyvector& v, const Polyvector& w);

} // namespace gk
