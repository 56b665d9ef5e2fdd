#pragma once

#include "gk/gcs.hpp"
#include "gk/ideal.hpp"
#include "gk/spinor.hpp"

namespace gk {

/// Polynomial submanifold model: an ideal plus verified exact sample points.
/// Every stored point annihilates all generators and is smooth (the
/// differentials have full rank there).
struct SubmanifoldModel {
    PolyIdeal ideal;
    int n;
    int codim;
    std::vector<Point> samples;

    SubmanifoldModel(PolyIdeal id, std::vector<Point> pts, int expected_codim = -1);
};

/// {dF_k(x)} plus conjugates as section coordinates; throws at rank drops.
std::vector<QVec> conormal_frame(const SubmanifoldModel& m, const Point& x);

/// Basis of T^{1,0}M at a smooth point, as length-n holomorphic coordinate
/// vectors.  Requires holomorphic generators.
std::vector<QVec> tangent_holo_basis(const SubmanifoldModel& m, const Point& x);

/// J(x) N*_x = N*_x at every sample.
bool is_conormal_invariant(const GCStructure& j, const SubmanifoldModel& m,
                           const std::vector<Point>& pts);

/// {F, g} in I for every generator F and coordinate g; Leibniz closes the
/// condition over all of the ring.
bool is_poisson_submanifold(const Polyvector& beta, const SubmanifoldModel& m);

struct JSubReport {
    bool is_j_submanifold = true;
    bool constant_rank = true;
    std::vector<int> dim_LM, dim_LNstar, dim_qLM; // per sample
    std::vector<int> failing_samples;
    /// exact-sequence bookkeeping: dim L(N*) + dim q(L(M)) == dim L(M) and
    /// dim q(L(M)) == dim M at every sample
    bool bookkeeping_ok = true;
};

JSubReport is_J_submanifold(const GCStructure& j, const SubmanifoldModel& m,
                            const std::vector<Point>& pts);

/// Induced structure on (TM + T*M) at a point where the submanifold test
/// holds; exact 4m x 4m matrix.
QMat induced_structure_at_point(const GCStructure& j, const SubmanifoldModel& m,
                                const Point& x);
/// Type of the induced structure: m - rank(upper-right)/2.
int induced_type_at_point(const GCStructure& j, const SubmanifoldModel& m, const Point& x);

struct GammaReport {
    bool cplus_rank_ok = false;
    bool gamma_bijective = false;
    bool j0_invariant = false;
    bool j1_invariant = false;
    bool ok() const { return cplus_rank_ok && gamma_bijective && j0_invariant && j1_invariant; }
};

/// gamma = p restricted to C+(M) + C-(M): rank conditions and invariance
/// under both structures, all at one point with exact matrices.
GammaReport gamma_iso_check(const QMat& j0x, const QMat& j1x, const SubmanifoldModel& m,
                            const Point& x);

struct InducedPoissonResult {
    std::vector<int> tangential;                      // ambient indices kept
    std::map<std::pair<int, int>, PolyScalar> comp;   // {eta_a, eta_b} for a<b tangential
    bool nontrivial = false;
};

/// Pushforward of beta to the adapted graph chart eta_a = z_a (a != l),
/// eta_l = F; components are {eta_a, eta_b}, nontrivial iff one of them is
/// not in the ideal.  Requires a principal ideal and Poisson-submanifold.
InducedPoissonResult induced_poisson(const Polyvector& beta, const SubmanifoldModel& m,
                                     int normal_coord);

/// V_i(F) in I for all generators and fields; [V_i, V_j] = 0 is verified.
bool group_invariant_ideal_check(const std::vector<Polyvector>& fields,
                                 const PolyIdeal& ideal);

/// The listed holomorphic coordinates are read as an affine chart of CP^k;
/// true iff every transformed component of beta is polynomial in every
/// other standard chart.
bool extends_to_projective(const Polyvector& beta, const std::vector<int>& proj_vars);

/// Deterministic search for smooth Gaussian-rational points on {f = 0};
/// throws if fewer than count are found.
std::vector<Point> find_points_on_hypersurface(const PolyScalar& f, int count,
                                               uint64_t seed);

/// Pullback of a (possibly series-evaluated) spinor at a smooth sample.
Form spinor_pullback_at(const Form& psi, const SubmanifoldModel& m, const Point& x);

} // namespace gk
