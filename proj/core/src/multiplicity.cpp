#include "dfs/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfs {

namespace {

void check_parity(int total_excitations, SpinLabel j) {
    if ((j.two_j % 2) != (total_excitations % 2))
        throw std::invalid_argument("recursion_support: two_j and L differ in parity");
    if (j.two_j > total_excitations)
        throw std::invalid_argument("recursion_support: two_j exceeds total_excitations");
}

// Sum of K^{j'}_{N-1,L'} over the support box of (L, two_j), read from
// the already-filled layer prev_n = N - 1. Entries falling outside the
// delta support at N = 1 are zero by table lookup.
Multiplicity support_sum(const MultiplicityTable &table, int prev_n, int L, int two_j) {
    const int lo = (L - two_j) / 2; // integer: parity is checked by callers
    const int hi = (L + two_j) / 2;
    Multiplicity sum = 0;
    for (int mu = lo; mu <= hi; ++mu)
        for (int nu = 0; nu <= lo; ++nu)
            sum += table.at(prev_n, mu + nu, mu - nu);
    return sum;
}

// Fills rows (n, L) of the rectangle that are still zero-initialized:
// all L for n > n_done, and L > l_done for n <= n_done.
void fill_rectangle(MultiplicityTable &table, int n_done, int l_done) {
    for (int n = 1; n <= table.n_max(); ++n) {
        const int l_start = (n <= n_done) ? l_done + 1 : 0;
        for (int L = l_start; L <= table.l_max(); ++L) {
            for (int two_j = L % 2; two_j <= L; two_j += 2) {
                table.slot(n, L, two_j) =
                    (n == 1) ? k_initial(L, SpinLabel(two_j)) : support_sum(table, n - 1, L, two_j);
            }
        }
    }
}

} // namespace

Multiplicity k_initial(int total_excitations, SpinLabel j) {
    return j.two_j == total_excitations ? 1 : 0;
}

std::vector<std::pair<int, int>> recursion_support(const SectorIndex &sector, SpinLabel j) {
    const int L = sector.total_excitations;
    check_parity(L, j);
    const int lo = (L - j.two_j) / 2;
    const int hi = (L + j.two_j) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(hi - lo + 1) * static_cast<std::size_t>(lo + 1));
    for (int mu = lo; mu <= hi; ++mu)
        for (int nu = 0; nu <= lo; ++nu)
            pairs.emplace_back(mu + nu, mu - nu);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

Multiplicity k_value(MultiplicityTable &table, const SectorIndex &sector, SpinLabel j) {
    if (!spin_in_sector(sector, j))
        return 0;
    if (!table.covers(sector)) {
        const int n_done = table.n_max();
        const int l_done = table.l_max();
        table.resize(std::max(sector.n_uses, n_done), std::max(sector.total_excitations, l_done));
        fill_rectangle(table, n_done, l_done);
    }
    return table.at(sector.n_uses, sector.total_excitations, j.two_j);
}

MultiplicityTable build_table(int n_max, int l_max) {
    if (n_max < 1 || l_max < 0)
        throw std::invalid_argument("build_table: need n_max >= 1, l_max >= 0");
    MultiplicityTable table;
    table.resize(n_max, l_max);
    fill_rectangle(table, 0, -1);
    return table;
}

std::pair<SpinLabel, Multiplicity> best_multiplicity(const MultiplicityTable &table,
                                                     const SectorIndex &sector) {
    if (!table.covers(sector))
        throw std::invalid_argument("best_multiplicity: sector outside table bounds");
    SpinLabel best_j;
    Multiplicity best_k = -1;
    for (SpinLabel j : valid_spins(sector)) {
        const Multiplicity &k = table.at(sector.n_uses, sector.total_excitations, j.two_j);
        if (k > best_k) { // strict: ties keep the smallest two_j seen first
            best_j = j;
            best_k = k;
        }
    }
    return {best_j, best_k};
}

} // namespace dfs
