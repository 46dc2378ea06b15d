#pragma once

#include "dfs/core_types.hpp"

#include <cstdint>
#include <vector>

namespace dfs {

/// Excitations per channel use: an ordered tuple (l_1, ..., l_N) of
/// nonnegative integers.
struct Composition {
    std::vector<int> parts;

    explicit Composition(std::vector<int> parts_);

    int n_parts() const { return static_cast<int>(parts.size()); }
    int total() const;
};

/// Default cap on the number of compositions the brute-force oracle will
/// enumerate. The oracle exists for desk-scale verification; the recursion
/// is the scalable path.
inline constexpr std::uint64_t default_composition_cap = 1'000'000;

/// Tensors every irrep in `acc` with D^{j2} and expands by the
/// Clebsch-Gordan series: each (two_j1, c) contributes c copies of every
/// two_j in {|two_j1 - two_j2|, ..., two_j1 + two_j2} in steps of 2.
/// Total dimension is preserved.
IrrepMultiset cg_pair(const IrrepMultiset &acc, SpinLabel j2);

/// Left-fold of cg_pair over the parts of the composition, starting from
/// the singleton {two_j = l_1}; each use k enters as the irrep D^{l_k/2}.
IrrepMultiset decompose_composition(const Composition &comp);

/// Number of compositions of L into N ordered parts, C(L + N - 1, N - 1).
Multiplicity composition_count(const SectorIndex &sector);

/// Exact K^j_{NL} by brute force: sums decompose_composition over every
/// composition of L into N parts, enumerated in lexicographic order.
/// Throws ResourceError when the composition count exceeds the cap.
IrrepMultiset oracle_multiplicities(const SectorIndex &sector,
                                    std::uint64_t max_compositions = default_composition_cap);

/// Number of sector basis states with exactly m_horizontal H-excitations,
/// C(M + N - 1, N - 1) * C(L - M + N - 1, N - 1); zero outside 0 <= M <= L.
/// Under a diagonal SU(2) rotation such a state carries weight (2M - L)/2,
/// so differences of consecutive weight counts reproduce K^j_{NL}. This is
/// derived cross-check machinery, not itself part of the recursion; its own
/// correctness is established against the CG oracle on small instances.
Multiplicity weight_count(const SectorIndex &sector, int m_horizontal);

} // namespace dfs
