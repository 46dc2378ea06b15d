#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfs {

// Numeric tolerances shared across the library.
//   tau_unit:     max-norm bound on U†U - I for accepting a matrix as unitary
//   tau_rep:      residual bound for represented-matrix identities
//   tau_char:     residual bound for character-trace comparisons
//   tau_rank_rel: singular values below tau_rank_rel * sigma_max count as zero
inline constexpr double tau_unit = 1e-10;
inline constexpr double tau_rep = 1e-8;
inline constexpr double tau_char = 1e-8;
inline constexpr double tau_rank_rel = 1e-7;

/// Exact nonnegative integer count of irrep copies. Values grow like
/// multinomial coefficients, so 64-bit arithmetic is not enough even at
/// desk scale; GMP integers keep every count exact.
using Multiplicity = mpz_class;

/// Thrown when an enumeration or matrix build would exceed its configured
/// cap. The message names the cap and the offending count.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// SU(2) irrep label j stored as the integer 2j. Keeps half-integer spins
/// exact and hashable; the irrep dimension is two_j + 1.
struct SpinLabel {
    int two_j = 0;

    SpinLabel() = default;
    explicit SpinLabel(int two_j_) : two_j(two_j_) {
        if (two_j < 0)
            throw std::invalid_argument("SpinLabel: two_j must be nonnegative");
    }

    int dimension() const { return two_j + 1; }

    auto operator<=>(const SpinLabel &) const = default;
};

/// Labels the fixed-excitation sector H_{NL}: N channel uses, L total
/// excitations across all 2N modes.
struct SectorIndex {
    int n_uses = 1;
    int total_excitations = 0;

    SectorIndex(int n_uses_, int total_excitations_)
        : n_uses(n_uses_), total_excitations(total_excitations_) {
        if (n_uses < 1)
            throw std::invalid_argument("SectorIndex: n_uses must be >= 1");
        if (total_excitations < 0)
            throw std::invalid_argument("SectorIndex: total_excitations must be >= 0");
    }

    auto operator<=>(const SectorIndex &) const = default;
};

/// All spin labels that can occur in the sector: two_j runs over
/// {L mod 2, L mod 2 + 2, ..., L}, ascending.
std::vector<SpinLabel> valid_spins(const SectorIndex &sector);

/// True iff two_j has the parity of L and 0 <= two_j <= L.
bool spin_in_sector(const SectorIndex &sector, SpinLabel j);

/// Number of Fock tuples (m_1, v_1, ..., m_N, v_N) with total L, i.e.
/// C(L + 2N - 1, 2N - 1).
Multiplicity sector_dimension(const SectorIndex &sector);

/// A finite direct sum of SU(2) irreps with multiplicities: counts maps
/// two_j -> number of copies. Absent keys mean zero.
class IrrepMultiset {
  public:
    IrrepMultiset() = default;

    void add(SpinLabel j, const Multiplicity &count);
    /// Copies of irrep j (zero if absent).
    Multiplicity count(SpinLabel j) const;
    /// Sum of (two_j + 1) * count over all entries.
    Multiplicity total_dimension() const;

    bool empty() const { return counts_.empty(); }
    std::size_t size() const { return counts_.size(); }
    auto begin() const { return counts_.begin(); }
    auto end() const { return counts_.end(); }

    bool operator==(const IrrepMultiset &) const = default;

  private:
    std::map<int, Multiplicity> counts_; // keyed by two_j, values >= 1
};

/// Exact table of the multiplicities K^j_{NL} over a filled rectangle
/// 1 <= N <= n_max, 0 <= L <= l_max. Per (N, L) only the floor(L/2)+1
/// parity-valid spins are stored; everything else reads as zero.
class MultiplicityTable {
  public:
    MultiplicityTable() = default;

    int n_max() const { return n_max_; }
    int l_max() const { return l_max_; }
    bool covers(const SectorIndex &sector) const {
        return sector.n_uses <= n_max_ && sector.total_excitations <= l_max_;
    }

    /// K^j_{NL}. Returns zero for two_j outside the parity class or range;
    /// throws std::out_of_range when (N, L) lies outside the table.
    const Multiplicity &at(int n_uses, int total_excitations, int two_j) const;

    /// Direct storage access used by the table builder; two_j must be
    /// parity-valid for total_excitations.
    Multiplicity &slot(int n_uses, int total_excitations, int two_j);

    /// Extends the filled rectangle with zero-initialized cells. Existing
    /// entries are preserved; fill order is up to the builder.
    void resize(int n_max, int l_max);

  private:
    int n_max_ = 0;
    int l_max_ = -1;
    // rows_[n-1][L][t] with t = (two_j - L%2) / 2
    std::vector<std::vector<std::vector<Multiplicity>>> rows_;
};

/// An arbitrary U(2) mode transformation. Construction rejects matrices
/// that are not unitary within tau_unit.
struct UnitaryU2 {
    Eigen::Matrix2cd m;

    explicit UnitaryU2(const Eigen::Matrix2cd &mat);

    double unitarity_residual() const;
};

/// Special unitary factor of the decomposition Omega = e^{-i alpha} Omega',
/// carrying the phase alpha that was split off (zero when constructed
/// directly from an SU(2) matrix).
struct SpecialUnitarySU2 {
    Eigen::Matrix2cd m;
    double alpha = 0.0;

    explicit SpecialUnitarySU2(const Eigen::Matrix2cd &mat, double alpha_ = 0.0);
};

} // namespace dfs
