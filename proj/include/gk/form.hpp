#pragma once

#include "gk/mask.hpp"
#include "gk/polyscalar.hpp"

#include <map>

namespace gk {

class Polyvector;

/// Complex differential form with PolyScalar coefficients, possibly of mixed
/// degree.  Components are keyed by a 2n-bit mask over the coframe
/// dz_1..dz_n, dzb_1..dzb_n in that order.
class Form {
public:
    Form() = default;
    explicit Form(int n) : n_(n) {}

    static Form scalar(int n, PolyScalar c);
    static Form scalar(int n, GaussRat c) { return scalar(n, PolyScalar::constant(n, c)); }
    /// Basis 1-form dz_{idx+1} for idx < n, dzb for idx >= n.
    static Form basis_oneform(int n, int idx);
    static Form monomial(int n, Mask m, PolyScalar c);

    /// Standard chart Kaehler form (i/2) sum dz_j ^ dzb_j.
    static Form omega_std(int n);

    int n() const { return n_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<Mask, PolyScalar>& components() const { return comp_; }
    PolyScalar component(Mask m) const;
    void add_term(Mask m, const PolyScalar& c);

    bool is_homogeneous(int* degree = nullptr) const;
    int max_degree() const;
    Form degree_part(int k) const;
    /// Component of bidegree (p,q).
    Form bidegree_part(int p, int q) const;
    bool has_only_bidegrees(const std::vector<std::pair<int, int>>& allowed) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form scaled(const GaussRat& c) const;
    Form scaled(const PolyScalar& c) const;
    friend bool operator==(const Form& a, const Form& b) {
        return a.n_ == b.n_ && a.comp_ == b.comp_;
    }

    Form conj() const;
    bool is_real() const { return conj() == *this; }

    /// Coefficients evaluated at a point; the result is constant.
    Form eval_at(const Point& pt) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Mask, PolyScalar> comp_;
};

Form wedge(const Form& a, const Form& b);
Form wedge_power(const Form& a, int k);
/// Finite exponential sum_k a^k / k! of a form of even degree >= 2.
Form wedge_exp(const Form& a);

Form exterior_d(const Form& f);
Form del(const Form& f);    // holomorphic part of d
Form delbar(const Form& f); // antiholomorphic part of d

/// Interior product by the coordinate frame vector of the given index.
Form interior_basis(const Form& f, int idx);

/// Radial homotopy K with dK + Kd = id on positive-degree polynomial forms.
Form homotopy(const Form& f);
/// Primitive of a closed positive-degree form; throws if f is not closed.
Form homotopy_primitive(const Form& f);

/// Trace of a (1,1)-form against a constant (1,1) Kaehler form (defaults to
/// the standard chart form).  Throws if p is not of bidegree (1,1).
PolyScalar lefschetz_contract(const Form& p, const Form* omega = nullptr);

/// Algebra morphism determined by constant images of the basis 1-forms:
/// basis index a of the source maps to sum_b images[a][b] * (target basis b).
/// Used for pointwise pullback to a submanifold chart.
Form substitute_coframe(const Form& f, int target_n,
                        const std::vector<std::vector<GaussRat>>& images);

} // namespace gk
