#include "dfs/core_types.hpp"

#include <cmath>

namespace dfs {

std::vector<SpinLabel> valid_spins(const SectorIndex &sector) {
    const int L = sector.total_excitations;
    std::vector<SpinLabel> spins;
    spins.reserve(static_cast<std::size_t>(L / 2 + 1));
    for (int two_j = L % 2; two_j <= L; two_j += 2)
        spins.push_back(SpinLabel(two_j));
    return spins;
}

bool spin_in_sector(const SectorIndex &sector, SpinLabel j) {
    const int L = sector.total_excitations;
    return j.two_j >= 0 && j.two_j <= L && (j.two_j % 2) == (L % 2);
}

Multiplicity sector_dimension(const SectorIndex &sector) {
    Multiplicity result;
    mpz_bin_uiui(result.get_mpz_t(),
                 static_cast<unsigned long>(sector.total_excitations + 2 * sector.n_uses - 1),
                 static_cast<unsigned long>(2 * sector.n_uses - 1));
    return result;
}

void IrrepMultiset::add(SpinLabel j, const Multiplicity &count) {
    if (count < 0)
        throw std::invalid_argument("IrrepMultiset::add: negative count");
    if (count == 0)
        return;
    counts_[j.two_j] += count;
}

Multiplicity IrrepMultiset::count(SpinLabel j) const {
    auto it = counts_.find(j.two_j);
    return it == counts_.end() ? Multiplicity(0) : it->second;
}

Multiplicity IrrepMultiset::total_dimension() const {
    Multiplicity dim = 0;
    for (const auto &[two_j, count] : counts_)
        dim += count * (two_j + 1);
    return dim;
}

namespace {
const Multiplicity k_zero = 0;
}

const Multiplicity &MultiplicityTable::at(int n_uses, int total_excitations, int two_j) const {
    if (n_uses < 1 || n_uses > n_max_ || total_excitations < 0 || total_excitations > l_max_)
        throw std::out_of_range("MultiplicityTable::at: sector outside table bounds");
    if (two_j < 0 || two_j > total_excitations || (two_j % 2) != (total_excitations % 2))
        return k_zero;
    const auto &row = rows_[static_cast<std::size_t>(n_uses - 1)]
                           [static_cast<std::size_t>(total_excitations)];
    return row[static_cast<std::size_t>((two_j - total_excitations % 2) / 2)];
}

Multiplicity &MultiplicityTable::slot(int n_uses, int total_excitations, int two_j) {
    if (n_uses < 1 || n_uses > n_max_ || total_excitations < 0 || total_excitations > l_max_)
        throw std::out_of_range("MultiplicityTable::slot: sector outside table bounds");
    if (two_j < 0 || two_j > total_excitations || (two_j % 2) != (total_excitations % 2))
        throw std::invalid_argument("MultiplicityTable::slot: spin not valid for sector");
    auto &row = rows_[static_cast<std::size_t>(n_uses - 1)]
                     [static_cast<std::size_t>(total_excitations)];
    return row[static_cast<std::size_t>((two_j - total_excitations % 2) / 2)];
}

void MultiplicityTable::resize(int n_max, int l_max) {
    if (n_max < 1 || l_max < 0)
        throw std::invalid_argument("MultiplicityTable::resize: need n_max >= 1, l_max >= 0");
    n_max = std::max(n_max, n_max_);
    l_max = std::max(l_max, l_max_);
    rows_.resize(static_cast<std::size_t>(n_max));
    for (auto &row : rows_) {
        row.resize(static_cast<std::size_t>(l_max) + 1);
        for (int L = 0; L <= l_max; ++L) {
            auto &cell = row[static_cast<std::size_t>(L)];
            cell.resize(static_cast<std::size_t>(L / 2) + 1);
        }
    }
    n_max_ = n_max;
    l_max_ = l_max;
}

namespace {

double max_abs(const Eigen::Matrix2cd &m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

UnitaryU2::UnitaryU2(const Eigen::Matrix2cd &mat) : m(mat) {
    if (unitarity_residual() > tau_unit)
        throw std::invalid_argument("UnitaryU2: matrix is not unitary within tau_unit");
}

double UnitaryU2::unitarity_residual() const {
    return max_abs(m.adjoint() * m - Eigen::Matrix2cd::Identity());
}

SpecialUnitarySU2::SpecialUnitarySU2(const Eigen::Matrix2cd &mat, double alpha_)
    : m(mat), alpha(alpha_) {
    if (max_abs(m.adjoint() * m - Eigen::Matrix2cd::Identity()) > tau_unit)
        throw std::invalid_argument("SpecialUnitarySU2: matrix is not unitary within tau_unit");
    if (std::abs(m.determinant() - std::complex<double>(1.0, 0.0)) > tau_unit)
        throw std::invalid_argument("SpecialUnitarySU2: determinant is not 1 within tau_unit");
}

} // namespace dfs
