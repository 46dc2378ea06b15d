#pragma once

#include "dfs/core_types.hpp"

#include <utility>
#include <vector>

namespace dfs {

/// Single-use multiplicity K^j_{N=1,L}: 1 when two_j == L, else 0.
Multiplicity k_initial(int total_excitations, SpinLabel j);

/// The (L', two_j') pairs whose K values at N-1 uses sum to K^j_{NL}:
/// L' = mu + nu, two_j' = mu - nu over the integer box
/// mu in [(L - two_j)/2, (L + two_j)/2], nu in [0, (L - two_j)/2].
/// Pairs come out sorted by (L', two_j'). Throws std::invalid_argument
/// when two_j does not match the parity of L or exceeds it.
std::vector<std::pair<int, int>> recursion_support(const SectorIndex &sector, SpinLabel j);

/// K^j_{NL} via the recursion over recursion_support, memoized in `table`
/// (the table grows as needed and is reused across calls). Spins outside
/// the sector's parity class or range give 0 without error.
Multiplicity k_value(MultiplicityTable &table, const SectorIndex &sector, SpinLabel j);

/// Fills the full rectangle 1 <= N <= n_max, 0 <= L <= l_max, iterating
/// N ascending then L ascending; layer N only reads layer N-1.
MultiplicityTable build_table(int n_max, int l_max);

/// The spin with the largest multiplicity in the sector and its value;
/// ties go to the smallest two_j. Requires the sector to be covered by
/// the table.
std::pair<SpinLabel, Multiplicity> best_multiplicity(const MultiplicityTable &table,
                                                     const SectorIndex &sector);

} // namespace dfs
