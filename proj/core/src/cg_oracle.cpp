#include "dfs/cg_oracle.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dfs {

Composition::Composition(std::vector<int> parts_) : parts(std::move(parts_)) {
    if (parts.empty())
        throw std::invalid_argument("Composition: needs at least one part");
    for (int p : parts)
        if (p < 0)
            throw std::invalid_argument("Composition: parts must be nonnegative");
}

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

IrrepMultiset cg_pair(const IrrepMultiset &acc, SpinLabel j2) {
    IrrepMultiset out;
    for (const auto &[two_j1, count] : acc) {
        const int lo = std::abs(two_j1 - j2.two_j);
        const int hi = two_j1 + j2.two_j;
        for (int two_j = lo; two_j <= hi; two_j += 2)
            out.add(SpinLabel(two_j), count);
    }
    return out;
}

IrrepMultiset decompose_composition(const Composition &comp) {
    IrrepMultiset acc;
    acc.add(SpinLabel(comp.parts.front()), 1);
    for (std::size_t k = 1; k < comp.parts.size(); ++k)
        acc = cg_pair(acc, SpinLabel(comp.parts[k]));
    return acc;
}

Multiplicity composition_count(const SectorIndex &sector) {
    Multiplicity result;
    mpz_bin_uiui(result.get_mpz_t(),
                 static_cast<unsigned long>(sector.total_excitations + sector.n_uses - 1),
                 static_cast<unsigned long>(sector.n_uses - 1));
    return result;
}

namespace {

// Advances to the next composition of the same total in ascending
// lexicographic order; returns false after the last one, (L, 0, ..., 0).
bool next_composition(std::vector<int> &parts) {
    const int n = static_cast<int>(parts.size());
    // Find the rightmost position (excluding the last) with something to
    // its right, move one unit onto it, and flush the tail right.
    int tail = parts[static_cast<std::size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i) {
        if (tail > 0) {
            parts[static_cast<std::size_t>(i)] += 1;
            for (int k = i + 1; k < n - 1; ++k)
                parts[static_cast<std::size_t>(k)] = 0;
            parts[static_cast<std::size_t>(n - 1)] = tail - 1;
            return true;
        }
        tail += parts[static_cast<std::size_t>(i)];
    }
    return false;
}

} // namespace

IrrepMultiset oracle_multiplicities(const SectorIndex &sector, std::uint64_t max_compositions) {
    const Multiplicity n_comps = composition_count(sector);
    if (n_comps > Multiplicity(static_cast<unsigned long>(max_compositions))) {
        std::ostringstream msg;
        msg << "oracle_multiplicities: " << n_comps.get_str()
            << " compositions exceed the composition cap " << max_compositions;
        throw ResourceError(msg.str());
    }

    std::vector<int> parts(static_cast<std::size_t>(sector.n_uses), 0);
    parts.back() = sector.total_excitations; // lexicographically first
    IrrepMultiset total;
    do {
        const IrrepMultiset irreps = decompose_composition(Composition(parts));
        for (const auto &[two_j, count] : irreps)
            total.add(SpinLabel(two_j), count);
    } while (next_composition(parts));
    return total;
}

Multiplicity weight_count(const SectorIndex &sector, int m_horizontal) {
    const int L = sector.total_excitations;
    if (m_horizontal < 0 || m_horizontal > L)
        return 0;
    const unsigned long n1 = static_cast<unsigned long>(sector.n_uses - 1);
    Multiplicity h, v;
    mpz_bin_uiui(h.get_mpz_t(), static_cast<unsigned long>(m_horizontal) + n1, n1);
    mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(L - m_horizontal) + n1, n1);
    return h * v;
}

} // namespace dfs
