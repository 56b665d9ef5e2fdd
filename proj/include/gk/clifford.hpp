#pragma once

#include "gk/polyvector.hpp"
#include "gk/series.hpp"

namespace gk {

/// Section of T + T*: a vector field plus a 1-form.
struct GenSection {
    Polyvector vec; // degree 1
    Form one;       // degree 1

    GenSection() = default;
    GenSection(Polyvector v, Form f);
    explicit GenSection(int n) : vec(n), one(n) {}

    int n() const { return vec.n(); }
    bool is_zero() const { return vec.is_zero() && one.is_zero(); }
    GenSection conj() const { return {vec.conj(), one.conj()}; }
    GenSection operator+(const GenSection& o) const { return {vec + o.vec, one + o.one}; }
    GenSection operator-(const GenSection& o) const { return {vec - o.vec, one - o.one}; }
    GenSection scaled(const GaussRat& c) const { return {vec.scaled(c), one.scaled(c)}; }
    friend bool operator==(const GenSection&, const GenSection&) = default;

    /// Coordinates in the frame @_1..@_n, @b_1..@b_n, dz_1..dz_n, dzb_1..dzb_n.
    std::vector<PolyScalar> coords() const;
    static GenSection from_coords(int n, const std::vector<PolyScalar>& c);
};

/// <E1,E2> = (theta2(v1) + theta1(v2)) / 2, the natural symmetric pairing.
PolyScalar pairing(const GenSection& a, const GenSection& b);

/// Word index space: 0..2n-1 the polyvector frame, 2n..4n-1 the coframe.
using WordMask = uint64_t;

/// Element of the Clifford algebra of T + T* with function coefficients,
/// stored as straightened words over the isotropic coordinate basis:
/// strictly increasing index sequences with anticommutation corrections
/// folded into the coefficients.
class CliffordElem {
public:
    CliffordElem() = default;
    explicit CliffordElem(int n) : n_(n) {}

    static CliffordElem scalar(int n, PolyScalar c);
    static CliffordElem scalar(int n, GaussRat c) { return scalar(n, PolyScalar::constant(n, c)); }
    static CliffordElem generator(int n, int idx);
    /// Wedge forms embed in wedge order, so a 2-form acts by b ^ (.).
    static CliffordElem from_form(const Form& f);
    /// Polyvectors embed with factors reversed, so a 2-vector acts by
    /// contract(beta, .) and Ad_{e^beta} comes out as theta -> i_theta(beta).
    static CliffordElem from_polyvector(const Polyvector& p);
    static CliffordElem from_section(const GenSection& e);

    int n() const { return n_; }
    bool is_zero() const { return words_.empty(); }
    const std::map<WordMask, PolyScalar>& words() const { return words_; }
    void add_word(WordMask w, const PolyScalar& c);

    /// Largest word length present.
    int filtration_degree() const;
    /// True if every word has length 0 or 2 (the Lie algebra of the even part).
    bool in_cl2() const;

    CliffordElem operator-() const;
    CliffordElem& operator+=(const CliffordElem& o);
    CliffordElem& operator-=(const CliffordElem& o);
    friend CliffordElem operator+(CliffordElem a, const CliffordElem& b) { return a += b; }
    friend CliffordElem operator-(CliffordElem a, const CliffordElem& b) { return a -= b; }
    CliffordElem scaled(const GaussRat& c) const;
    friend bool operator==(const CliffordElem& a, const CliffordElem& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    CliffordElem conj() const;

    /// Degree-1 part as a section; throws if other degrees are present
    /// unless allow_rest is set.
    GenSection cl1_part(bool allow_rest = false) const;
    PolyScalar scalar_part() const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<WordMask, PolyScalar> words_;
};

/// Full Clifford product (any filtration; exact straightening).
CliffordElem cl_mul(const CliffordElem& a, const CliffordElem& b);
/// Spec-facing product: enforces the <=3 filtration contract.
CliffordElem cl_product(const CliffordElem& a, const CliffordElem& b);
CliffordElem cl_commutator(const CliffordElem& a, const CliffordElem& b);

/// Spin representation: (v + theta) . phi = i_v phi + theta ^ phi, words act
/// by composition.
Form spin_action(const CliffordElem& x, const Form& phi);

/// e^x . phi as a finite sum; x must act nilpotently (pure 2-form, pure
/// 2-vector, or any element whose action terminates).
Form exp_action(const CliffordElem& x, const Form& phi);

/// e^x E e^{-x} for x in CL2 with nilpotent ad (2-forms, 2-vectors, scalars
/// and sums thereof with terminating brackets).
GenSection adjoint_on_section(const CliffordElem& x, const GenSection& e);

using CliffordSeries = TSeries<CliffordElem>;
using FormSeries = TSeries<Form>;

CliffordSeries cl_series_zero(int order, int n);
CliffordSeries cl_series_mul(const CliffordSeries& a, const CliffordSeries& b);
/// exp of a series with zero constant term, in the algebra.
CliffordSeries cl_series_exp(const CliffordSeries& x);
/// log of a series with constant term 1, in the algebra.
CliffordSeries cl_series_log(const CliffordSeries& x);

/// z(t) with e^{z(t)} = e^{g1 t} e^{g2(t)} modulo t^{order+1}; both inputs
/// CL2, g2 with zero constant term, order <= 6.  The result is verified to
/// land in CL2.
CliffordSeries bch_log(const CliffordElem& g1, const CliffordSeries& g2, int order);

FormSeries form_series_zero(int order, int n);
/// Apply a t-series of Clifford elements to a t-series of forms.
FormSeries spin_series_apply(const CliffordSeries& x, const FormSeries& phi);
/// e^{x(t)} . phi(t) for x with zero constant term.
FormSeries spin_series_exp_apply(const CliffordSeries& x, const FormSeries& phi);
/// Adjoint action of e^{x(t)} on a section, truncated.
TSeries<GenSection> adjoint_series_on_section(const CliffordSeries& x, const GenSection& e);

} // namespace gk
