#pragma once

#include "gk/gcs.hpp"

#include <array>

namespace gk {

/// Element of the weight space of admissible corrections: h psi + p ^ psi
/// with p a real (1,1)-form and trace_omega(p) + 2h = 0.
struct KOneElem {
    PolyScalar h;
    Form p;

    explicit KOneElem(int n) : h(n), p(n) {}
    KOneElem(PolyScalar hh, Form pp) : h(std::move(hh)), p(std::move(pp)) {}
    bool is_zero() const { return h.is_zero() && p.is_zero(); }
    CliffordElem as_clifford() const {
        return CliffordElem::scalar(h.n(), h) + CliffordElem::from_form(p);
    }
};

bool k1_membership(const PolyScalar& h, const Form& p, const Form* omega = nullptr);

/// phi = eta ^ psi with eta of degree pattern 1 + (2,1) + (1,2): divide by
/// e^{i omega} and inspect the bidegrees of eta.
bool k2_membership(const Form& phi, const Form* omega = nullptr);

/// d(spin(a, psi)) for a = beta + conj(beta), psi = e^{i omega}; the source
/// of the first-order equation.  Also reports whether it lies in
/// (2,1)+(1,2) wedge psi as expected.
Form first_order_source(const Polyvector& beta, const Form* omega = nullptr,
                        bool* in_k2 = nullptr);

struct DeformationResult {
    Polyvector beta;
    int order = 0;
    std::vector<KOneElem> b;    // index 1..order (slot 0 unused)
    FormSeries psi;             // e^{at} e^{b(t)} . e^{i omega}
    FormSeries residual;        // d psi(t), zero through the order on success
    CliffordSeries z;           // log of the composed exponential
    bool residual_zero = false;
    std::vector<bool> ob_in_k2; // per solved order
};

/// No polynomial correction of the required degree exists: a genuine
/// obstruction at this order (or the degree cap was exceeded).
struct obstruction_error : error {
    using error::error;
};

/// Order-by-order solve of d(e^{at} e^{b(t)} psi) = 0 through t^order with
/// each b_k in the admissible space, real.  s, when given, is a constant
/// real primitive (1,1) shift added at order 1.  degree_bound caps the
/// polynomial degree of the corrections (default: source degree + 4).
DeformationResult solve_deformation(const Polyvector& beta, int order,
                                    const Form* s = nullptr, int degree_bound = -1);

/// One induction step exposed for testing: returns b_k solving the order-k
/// equation given orders 1..k-1.
KOneElem solve_order_k(const Polyvector& beta, const std::vector<KOneElem>& prev, int k,
                       int degree_bound = -1, bool* ob_in_k2 = nullptr);

/// Contraction of beta with i*omega as a (1,0)-vector valued (0,1)-form:
/// columns mu[j][k] of @_j x dzb_k.
struct KSClass {
    int n = 0;
    std::vector<std::vector<PolyScalar>> mu;
    bool delbar_closed = false;
};

KSClass ks_class(const Polyvector& beta, const Form* omega = nullptr);

/// First-order deformed frames Z_i^{+-}(t) = Z_i + (+-conj(beta)(thb^i) +
/// pi_T [b1, Z_i +- thb^i]) t with thb^i = -i i_{Z_i} omega.
struct BiHermitianFrames {
    std::vector<TSeries<Polyvector>> plus, minus;
    std::vector<Form> theta_bar;
};

BiHermitianFrames bihermitian_first_order(const Polyvector& beta,
                                          const std::vector<Polyvector>& frame,
                                          const KOneElem* b1 = nullptr,
                                          const Form* omega = nullptr);

/// The torus x projective-line model: rows (a_i, b_i, c_i) of the n x 3
/// matrix, plus the antisymmetric constant part lambda.
struct ObstructionMatrix {
    int n = 0;
    std::vector<std::array<GaussRat, 3>> rows;
    std::vector<std::vector<GaussRat>> lambda; // antisymmetric n x n

    explicit ObstructionMatrix(int nn)
        : n(nn), rows(nn), lambda(nn, std::vector<GaussRat>(nn)) {}
};

/// beta = sum_i (a_i + b_i zeta + c_i zeta^2) @_zeta ^ @_{z_i}
///      + sum_{j<k} lambda_{jk} @_{z_j} ^ @_{z_k} on the (n+1)-chart.
Polyvector build_torus_cp1_bivector(const ObstructionMatrix& p);

struct ObstructionReport {
    int rank = 0;
    bool rank_le_1 = false;
    bool schouten_zero = false;
    bool consistent = false; // rank_le_1 == schouten_zero
};

/// rank(P) <= 1 and [beta,beta] = 0 computed by independent code paths.
ObstructionReport obstruction_rank_test(const ObstructionMatrix& p);

} // namespace gk
