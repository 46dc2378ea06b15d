#pragma once

#include "dfs/core_types.hpp"

namespace dfs {

/// Irreducible block D^{l/2} on the l-excitation two-mode subspace, with
/// l = two_j. Row and column index m = 0..l both label the monomial basis
/// state |m_H (l-m)_V>, so matrix(m, n) is the coefficient of the target
/// state n in the image of the source state m. With that convention the
/// blocks multiply in source order: D(AB) = D(A) * D(B).
struct WignerBlock {
    SpinLabel j;
    Eigen::MatrixXcd matrix;

    int dimension() const { return j.dimension(); }
};

/// Splits Omega in U(2) as e^{-i alpha} Omega' with Omega' in SU(2),
/// canonical branch alpha = -arg(det Omega) / 2 with arg in (-pi, pi].
/// The branch (alpha + pi, -Omega') reconstructs the same Omega; only
/// branch-invariant quantities are contractual downstream.
SpecialUnitarySU2 decompose_u2(const UnitaryU2 &omega);

/// Builds D^{l/2}(Omega') from the monomial construction: the coefficient
/// of |n_H (l-n)_V> in the image of |m_H (l-m)_V> under the mode
/// substitution a_H -> O_HH a_H + O_HV a_V, a_V -> O_VH a_H + O_VV a_V.
/// Combinatorial factors are exact integers converted to double once per
/// entry.
WignerBlock wigner_d(SpinLabel j, const SpecialUnitarySU2 &omega_prime);

/// Per-l block of the full two-mode unitary: e^{-i l alpha} D^{l/2}(Omega')
/// for an explicit decomposition branch. The result is invariant under the
/// branch flip (alpha + pi, -Omega') since the monomial entries have
/// degree l.
WignerBlock block_unitary(int l, const SpecialUnitarySU2 &branch);

/// Same, decomposing Omega on the canonical branch first.
WignerBlock block_unitary(int l, const UnitaryU2 &omega);

/// Rotation angle theta in [0, 2pi] with e^{-i theta/2}, e^{+i theta/2}
/// the eigenvalues of Omega': theta = 2 arccos(clamp(Re tr / 2, -1, 1)).
double rotation_angle(const SpecialUnitarySU2 &omega_prime);

/// SU(2) character sin((2j+1) theta/2) / sin(theta/2); near the removable
/// singularities theta = 0 and theta = 2pi the limits 2j+1 and
/// (-1)^{2j} (2j+1) are used.
double character(SpinLabel j, double theta);

} // namespace dfs
