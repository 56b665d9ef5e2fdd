#pragma once

#include "gk/gcs.hpp"

namespace gk {

/// Exact kernel of E . psi(x) = 0 over the 4n section coordinates; throws
/// "not a pure spinor" if the dimension is not 2n.
std::vector<QVec> spinor_kernel_at_point(const Form& psi, const Point& x);

bool spinor_is_pure_at(const Form& psi, const Point& x);

/// ker + conj(ker) spans everything.
bool spinor_is_nondegenerate_at(const Form& psi, const Point& x);

/// Degree of the lowest nonzero homogeneous component at x; throws if the
/// form vanishes there.
int spinor_type_at(const Form& psi, const Point& x);

/// The structure whose -i eigenspace is ker psi at x.
QMat induced_Jpsi_at(const Form& psi, const Point& x);

/// Restriction of a constant-coefficient form to the subspace spanned by
/// the given holomorphic tangent vectors (plus conjugates): ambient dz_j
/// maps to sum_i (w_i)_j dz'_i in the m-dimensional chart, m = #w.
Form pullback_to_subspace(const Form& psi_at_x, const std::vector<QVec>& holo_tangent);

} // namespace gk
