#pragma once

#include "gk/polyscalar.hpp"

#include <optional>
#include <vector>

namespace gk {

/// Polynomial ideal with a deterministic membership test.  Principal ideals
/// use exact division, monomial ideals use monomial divisibility, anything
/// else runs a small Buchberger completion under lex order with a hard cap
/// on S-polynomial reductions.
class PolyIdeal {
public:
    enum class Kind { principal, monomial, general };

    explicit PolyIdeal(std::vector<PolyScalar> gens, int reduction_cap = 10000);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    const std::vector<PolyScalar>& generators() const { return gens_; }

    /// True iff g lies in the ideal.  Throws undecided_error if the
    /// Buchberger cap is hit before a verdict is certain.
    bool contains(const PolyScalar& g) const;

private:
    int n_;
    Kind kind_;
    int cap_;
    std::vector<PolyScalar> gens_;
    mutable std::optional<std::vector<PolyScalar>> groebner_;
    mutable bool groebner_complete_ = false;
};

/// Remainder of g on division by the divisors, lex order.
PolyScalar poly_divide_remainder(const PolyScalar& g, const std::vector<PolyScalar>& divisors);

} // namespace gk
