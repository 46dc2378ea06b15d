#pragma once

#include "dfs/core_types.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dfs {

/// Fock occupations (m_k, v_k) of the H and V modes for each of the N uses.
struct FockTuple {
    std::vector<std::pair<int, int>> modes;

    int total_excitations() const;
    /// Per-use totals l_k = m_k + v_k; equal lists mean the tuples sit in
    /// the same composition block of the sector unitary.
    std::vector<int> per_use_excitations() const;

    bool operator==(const FockTuple &) const = default;
};

/// Default cap on the dimension of an explicitly enumerated sector.
inline constexpr std::int64_t default_sector_dimension_cap = 5000;

/// Default cap on the sector dimension accepted by commutant_dimension.
inline constexpr int default_commutant_dimension_cap = 60;

/// All Fock tuples of the sector in lexicographic order over
/// (m_1, v_1, ..., m_N, v_N).
struct SectorBasis {
    SectorIndex sector;
    std::vector<FockTuple> states;

    int dimension() const { return static_cast<int>(states.size()); }

    /// Indices of `states` grouped by composition (l_1, ..., l_N); groups
    /// ordered by their composition tuple, indices ascending within each.
    std::vector<std::vector<int>> composition_groups() const;
};

/// Dense matrix over a sector basis. Rows index source states and columns
/// target states, matching WignerBlock, so matrices of successive
/// transformations multiply in source order.
struct SectorMatrix {
    SectorBasis basis;
    Eigen::MatrixXcd matrix;
};

SectorBasis sector_basis(const SectorIndex &sector,
                         std::int64_t max_dimension = default_sector_dimension_cap);

/// The collective transformation U(Omega)^{tensor N} restricted to the
/// sector: e^{-i L alpha} times the per-use product of D^{l_k/2}(Omega')
/// entries. Couples only tuples with identical per-use excitation lists.
SectorMatrix sector_unitary(const SectorIndex &sector, const UnitaryU2 &omega,
                            std::int64_t max_dimension = default_sector_dimension_cap);

/// | Tr U|_{H_NL}(Omega') - sum_j K^j_{NL} chi_j(theta) |, both sides
/// computed independently. Small (< tau_char) when the table is correct.
double character_check(const SectorIndex &sector, const MultiplicityTable &table,
                       const SpecialUnitarySU2 &omega_prime);

/// Deterministic stream of Haar-distributed U(2) matrices: complex Gaussian
/// 2x2 followed by Gram-Schmidt with positive-real column normalization.
class HaarSampler {
  public:
    explicit HaarSampler(std::uint64_t seed) : engine_(seed) {}

    UnitaryU2 next();

  private:
    double uniform();           // in (0, 1]
    std::complex<double> gaussian();

    std::mt19937_64 engine_;
};

/// One Haar sample; fixed seed gives a fixed matrix.
UnitaryU2 haar_sample_u2(std::uint64_t seed);

/// Dimension of the joint commutant {X : X U_i = U_i X} of n_samples
/// Haar-sampled sector unitaries (SU(2) parts only), as the kernel
/// dimension of the stacked Sylvester systems at relative singular-value
/// threshold tau_rank_rel. Equals sum_j (K^j_{NL})^2 with overwhelming
/// probability for n_samples >= 2; the default of 3 adds margin.
int commutant_dimension(const SectorIndex &sector, int n_samples = 3, std::uint64_t seed = 0,
                        int max_dimension = default_commutant_dimension_cap);

} // namespace dfs
