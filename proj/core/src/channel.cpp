#include "dfs/channel.hpp"

#include "dfs/wigner.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace dfs {

int FockTuple::total_excitations() const {
    int total = 0;
    for (const auto &[m, v] : modes)
        total += m + v;
    return total;
}

std::vector<int> FockTuple::per_use_excitations() const {
    std::vector<int> ls;
    ls.reserve(modes.size());
    for (const auto &[m, v] : modes)
        ls.push_back(m + v);
    return ls;
}

std::vector<std::vector<int>> SectorBasis::composition_groups() const {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int i = 0; i < dimension(); ++i)
        groups[states[static_cast<std::size_t>(i)].per_use_excitations()].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto &[comp, indices] : groups)
        out.push_back(std::move(indices));
    return out;
}

namespace {

// Appends, in lexicographic order, every way to occupy modes k..N-1 with
// `remaining` excitations.
void enumerate_states(int n_uses, int use, int remaining, FockTuple &current,
                      std::vector<FockTuple> &out) {
    if (use == n_uses) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    for (int m = 0; m <= remaining; ++m) {
        for (int v = 0; v + m <= remaining; ++v) {
            current.modes[static_cast<std::size_t>(use)] = {m, v};
            enumerate_states(n_uses, use + 1, remaining - m - v, current, out);
        }
    }
    current.modes[static_cast<std::size_t>(use)] = {0, 0};
}

} // namespace

SectorBasis sector_basis(const SectorIndex &sector, std::int64_t max_dimension) {
    const Multiplicity dim = sector_dimension(sector);
    if (dim > Multiplicity(static_cast<long>(max_dimension))) {
        std::ostringstream msg;
        msg << "sector_basis: dimension " << dim.get_str() << " exceeds the sector dimension cap "
            << max_dimension;
        throw ResourceError(msg.str());
    }
    SectorBasis basis{sector, {}};
    basis.states.reserve(static_cast<std::size_t>(dim.get_ui()));
    FockTuple current{std::vector<std::pair<int, int>>(static_cast<std::size_t>(sector.n_uses),
                                                       {0, 0})};
    enumerate_states(sector.n_uses, 0, sector.total_excitations, current, basis.states);
    return basis;
}

SectorMatrix sector_unitary(const SectorIndex &sector, const UnitaryU2 &omega,
                            std::int64_t max_dimension) {
    SectorBasis basis = sector_basis(sector, max_dimension);
    const int dim = basis.dimension();
    const int L = sector.total_excitations;

    const SpecialUnitarySU2 branch = decompose_u2(omega);
    std::vector<WignerBlock> blocks;
    blocks.reserve(static_cast<std::size_t>(L) + 1);
    for (int l = 0; l <= L; ++l)
        blocks.push_back(wigner_d(SpinLabel(l), branch));
    const std::complex<double> sector_phase = std::polar(1.0, -L * branch.alpha);

    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &group : basis.composition_groups()) {
        for (int row : group) {
            const auto &src = basis.states[static_cast<std::size_t>(row)].modes;
            for (int col : group) {
                const auto &dst = basis.states[static_cast<std::size_t>(col)].modes;
                std::complex<double> entry = sector_phase;
                for (std::size_t k = 0; k < src.size(); ++k) {
                    const int l_k = src[k].first + src[k].second;
                    entry *= blocks[static_cast<std::size_t>(l_k)].matrix(src[k].first,
                                                                          dst[k].first);
                }
                mat(row, col) = entry;
            }
        }
    }
    return SectorMatrix{std::move(basis), std::move(mat)};
}

double character_check(const SectorIndex &sector, const MultiplicityTable &table,
                       const SpecialUnitarySU2 &omega_prime) {
    if (!table.covers(sector))
        throw std::invalid_argument("character_check: sector outside table bounds");

    const SectorMatrix u = sector_unitary(sector, UnitaryU2(omega_prime.m));
    const std::complex<double> lhs = u.matrix.trace();

    const double theta = rotation_angle(omega_prime);
    double rhs = 0.0;
    for (SpinLabel j : valid_spins(sector)) {
        const Multiplicity &k = table.at(sector.n_uses, sector.total_excitations, j.two_j);
        rhs += k.get_d() * character(j, theta);
    }
    return std::abs(lhs - rhs);
}

double HaarSampler::uniform() {
    // 53 random bits, shifted into (0, 1]; independent of library
    // distribution internals so streams are reproducible everywhere.
    const std::uint64_t bits = engine_() >> 11;
    return static_cast<double>(bits + 1) * 0x1.0p-53;
}

std::complex<double> HaarSampler::gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

UnitaryU2 HaarSampler::next() {
    Eigen::Matrix2cd g;
    g << gaussian(), gaussian(), gaussian(), gaussian();
    // Gram-Schmidt on the columns with positive-real normalization factors;
    // the resulting Q is Haar on U(2).
    Eigen::Vector2cd q0 = g.col(0) / g.col(0).norm();
    Eigen::Vector2cd r1 = g.col(1) - q0.dot(g.col(1)) * q0;
    Eigen::Vector2cd q1 = r1 / r1.norm();
    Eigen::Matrix2cd q;
    q << q0, q1;
    return UnitaryU2(q);
}

UnitaryU2 haar_sample_u2(std::uint64_t seed) {
    return HaarSampler(seed).next();
}

namespace {

// Singular values of the Sylvester stack for one ordered pair of
// composition blocks (U restricted to rows/cols `rows` and `cols`):
// [X U_cols - U_rows X = 0 for all samples], vectorized column-major.
Eigen::VectorXd block_pair_singular_values(const std::vector<Eigen::MatrixXcd> &unitaries,
                                           const std::vector<int> &rows,
                                           const std::vector<int> &cols) {
    const int p = static_cast<int>(rows.size());
    const int q = static_cast<int>(cols.size());
    const int n_samples = static_cast<int>(unitaries.size());
    Eigen::MatrixXcd stacked(n_samples * p * q, p * q);
    for (int s = 0; s < n_samples; ++s) {
        Eigen::MatrixXcd u_rows(p, p), u_cols(q, q);
        for (int i = 0; i < p; ++i)
            for (int k = 0; k < p; ++k)
                u_rows(i, k) = unitaries[static_cast<std::size_t>(s)](
                    rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(k)]);
        for (int i = 0; i < q; ++i)
            for (int k = 0; k < q; ++k)
                u_cols(i, k) = unitaries[static_cast<std::size_t>(s)](
                    cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(k)]);
        stacked.middleRows(s * p * q, p * q) =
            Eigen::kroneckerProduct(u_cols.transpose(), Eigen::MatrixXcd::Identity(p, p)) -
            Eigen::kroneckerProduct(Eigen::MatrixXcd::Identity(q, q), u_rows);
    }
    if (stacked.cols() > 32)
        return Eigen::BDCSVD<Eigen::MatrixXcd>(stacked).singularValues();
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(stacked).singularValues();
}

} // namespace

int commutant_dimension(const SectorIndex &sector, int n_samples, std::uint64_t seed,
                        int max_dimension) {
    if (n_samples < 2)
        throw std::invalid_argument("commutant_dimension: n_samples must be >= 2");
    const Multiplicity dim = sector_dimension(sector);
    if (dim > max_dimension) {
        std::ostringstream msg;
        msg << "commutant_dimension: dimension " << dim.get_str()
            << " exceeds the commutant dimension cap " << max_dimension;
        throw ResourceError(msg.str());
    }

    HaarSampler sampler(seed);
    std::vector<Eigen::MatrixXcd> unitaries;
    SectorBasis basis = sector_basis(sector);
    for (int s = 0; s < n_samples; ++s) {
        const SpecialUnitarySU2 su2 = decompose_u2(sampler.next());
        unitaries.push_back(sector_unitary(sector, UnitaryU2(su2.m)).matrix);
    }

    // The Sylvester operator is block diagonal over ordered pairs of
    // composition groups, so its singular values are the union of the
    // per-pair values; the rank threshold stays relative to the global
    // maximum, exactly as for the unsplit stacked system.
    const auto groups = basis.composition_groups();
    std::vector<Eigen::VectorXd> spectra;
    double sigma_max = 0.0;
    for (const auto &rows : groups) {
        for (const auto &cols : groups) {
            spectra.push_back(block_pair_singular_values(unitaries, rows, cols));
            if (spectra.back().size() > 0)
                sigma_max = std::max(sigma_max, spectra.back().maxCoeff());
        }
    }

    const int d = basis.dimension();
    if (sigma_max == 0.0) // all constraints vanish identically
        return d * d;
    const double threshold = tau_rank_rel * sigma_max;
    int rank = 0;
    for (const auto &sigma : spectra)
        rank += static_cast<int>((sigma.array() >= threshold).count());
    return d * d - rank;
}

} // namespace dfs
