#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gk {

/// Index-set masks for exterior algebra bases.  Bit j < n is the holomorphic
/// slot (dz_{j+1} or @_{j+1}), bit n+j the antiholomorphic one.
using Mask = uint32_t;

inline int mask_count_below(Mask m, int idx) {
    return std::popcount(m & ((Mask(1) << idx) - 1));
}

/// Sign of e_A ^ e_B for disjoint sorted index sets: parity of pairs
/// (a,b) in A x B with a > b.
inline int wedge_sign(Mask a, Mask b) {
    int inv = 0;
    Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

inline std::vector<int> mask_bits(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Parity sign of sorting the given sequence ascending (no repeats).
inline int permutation_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

} // namespace gk
