#pragma once

#include "gk/clifford.hpp"
#include "gk/linalg.hpp"

namespace gk {

/// Square matrix over PolyScalar acting on section coordinates in the frame
/// (@_1..@_n, @b_1..@b_n | dz_1..dz_n, dzb_1..dzb_n).
struct PMat {
    int n = 0;    // chart dimension; the matrix is 4n x 4n
    std::vector<PolyScalar> a;

    PMat() = default;
    explicit PMat(int nn) : n(nn), a((size_t)16 * nn * nn, PolyScalar(nn)) {}

    int dim() const { return 4 * n; }
    PolyScalar& at(int r, int c) { return a[(size_t)r * dim() + c]; }
    const PolyScalar& at(int r, int c) const { return a[(size_t)r * dim() + c]; }

    static PMat identity(int n);
    static PMat from_qmat(int n, const QMat& q);

    PMat operator+(const PMat& o) const;
    PMat operator-(const PMat& o) const;
    PMat scaled(const GaussRat& c) const;
    friend bool operator==(const PMat&, const PMat&) = default;

    QMat eval_at(const Point& x) const;
    bool is_zero() const;
};

PMat pmat_mul(const PMat& a, const PMat& b);
QMat pairing_qmat(int n); // matrix of <,> in the section frame

/// Generalized complex structure on a chart: an exact matrix with
/// J^2 = -I and orthogonality, both checked symbolically on construction.
struct GCStructure {
    int n = 0;
    PMat m;

    GCStructure() = default;
    GCStructure(int nn, PMat mm, bool check = true);
};

/// t-series of structures (the bivector deformation J_{beta t}).
struct GCSeries {
    int n = 0;
    TSeries<PMat> m;

    GCStructure at_t(const Rat& t) const;
};

bool gcs_axioms_hold(const PMat& m);

GCStructure make_JJ(int n);
/// omega: constant real symplectic 2-form; throws if degenerate.
GCStructure make_Jomega(const Form& omega);
/// Deformation by a holomorphic Poisson bivector, block form
/// [[J, -t(J a + a J*)], [0, -J*]] with a = beta + conj(beta) acting as
/// theta -> i_theta(a).  Throws if beta is not Poisson.
GCSeries make_J_beta_t(const Polyvector& beta, int order = 1);
/// Same block construction without the Poisson check (for studying
/// non-integrable inputs).
GCSeries make_J_bivector_unchecked(const Polyvector& beta, int order = 1);

/// Honest conjugation route: Ad_{e^{x(t)}} J Ad_{e^{-x(t)}} computed through
/// the Clifford algebra, for cross-checking the block formula.
TSeries<PMat> gcs_conjugate_series(const GCStructure& j, const CliffordSeries& x);
/// Adjoint matrix of e^x on sections (columns are Ad_{e^x} of the frame).
PMat ad_exp_matrix(const CliffordElem& x);

GenSection section_from_qvec(int n, const QVec& v);
QVec section_coords_at(const GenSection& e, const Point& x);

/// Courant bracket on sections of T + T*.
GenSection courant_bracket(const GenSection& e1, const GenSection& e2);

/// -i eigenframe of J_J: {@b_j, dz_j}.
std::vector<GenSection> eigenframe_JJ(int n);
/// -i eigenframe of J_{beta t} at a rational t: the e^{at}-transformed frame.
std::vector<GenSection> eigenframe_beta_t(const Polyvector& beta, const Rat& t);
/// Pointwise eigenframe by exact kernel of J(x) + iI; throws on rank defect.
std::vector<QVec> eigenframe_at_point(const GCStructure& j, const Point& x);

struct IntegrabilityReport {
    bool integrable = true;
    // (i, j, sample index) of frame pairs whose bracket leaves the span
    std::vector<std::array<int, 3>> failures;
};

/// Checks that all pairwise Courant brackets of the frame stay in the span
/// of the frame at each sample (plus a single symbolic-constant check when
/// every coefficient is constant).
IntegrabilityReport integrability_check(const std::vector<GenSection>& frame,
                                        const std::vector<Point>& samples);

int type_at_point(const GCStructure& j, const Point& x);

struct KahlerPairReport {
    bool commute = false;
    bool metric_squares_to_id = false;
    bool positive = false;
    bool valid() const { return commute && metric_squares_to_id && positive; }
    // per sample: the C+ graph presentation theta = (g + b) v
    std::vector<QMat> g_at, b_at;
    std::vector<int> failed_samples; // where positivity breaks
};

/// G = -J0 J1; throws if the pair does not commute or G^2 != I.
PMat gen_metric(const GCStructure& j0, const GCStructure& j1);
KahlerPairReport kahler_pair_check(const GCStructure& j0, const GCStructure& j1,
                                   const std::vector<Point>& samples);
/// Pointwise variant: J1 given by exact matrices at the samples.
KahlerPairReport kahler_pair_check_pointwise(const GCStructure& j0,
                                             const std::vector<QMat>& j1_at,
                                             const std::vector<Point>& samples);

/// Conjugation by e^b for a closed real 2-form b (checked).
GCStructure b_field_transform(const GCStructure& j, const Form& b);

/// C+/C- bases at a point from a generalized metric matrix.
std::vector<QVec> metric_eigenspace_at(const QMat& g_at_x, int sign);

} // namespace gk
