#include "dfs/wigner.hpp"

#include "dfs/channel.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace dfs;
using std::complex;

namespace {

double max_abs(const Eigen::MatrixXcd &m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Matrix2cd rotation_y(double theta) {
    Eigen::Matrix2cd m;
    m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
    return m;
}

} // namespace

TEST_CASE("decompose_u2 reconstructs Omega with det(Omega') = 1") {
    const auto id = decompose_u2(UnitaryU2(Eigen::Matrix2cd::Identity()));
    CHECK(id.alpha == doctest::Approx(0.0));
    CHECK(max_abs(id.m - Eigen::Matrix2cd::Identity()) < tau_unit);

    // Pure phase: i * I forces Omega' = +-I.
    const complex<double> i_unit(0.0, 1.0);
    const auto phased = decompose_u2(UnitaryU2(i_unit * Eigen::Matrix2cd::Identity()));
    CHECK(std::abs(phased.m.determinant() - 1.0) < tau_unit);
    const complex<double> rebuilt_phase = std::polar(1.0, -phased.alpha);
    CHECK(max_abs(rebuilt_phase * phased.m - i_unit * Eigen::Matrix2cd::Identity()) < tau_unit);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const UnitaryU2 omega = haar_sample_u2(seed);
        const auto branch = decompose_u2(omega);
        CHECK(std::abs(branch.m.determinant() - 1.0) < tau_unit);
        const complex<double> phase = std::polar(1.0, -branch.alpha);
        CHECK(max_abs(phase * branch.m - omega.m) < tau_unit);
    }
}

TEST_CASE("wigner_d base cases") {
    const SpecialUnitarySU2 identity(Eigen::Matrix2cd::Identity());
    CHECK(max_abs(wigner_d(SpinLabel(1), identity).matrix - Eigen::MatrixXcd::Identity(2, 2)) ==
          0.0);

    // The defining block carries the monomial-basis index order (m = number
    // of H excitations, ascending), which is the H<->V reversal of the mode
    // index order of Omega' itself: D^{1/2} = J Omega' J with J the flip.
    const SpecialUnitarySU2 w(rotation_y(0.9));
    const Eigen::MatrixXcd d_half = wigner_d(SpinLabel(1), w).matrix;
    CHECK(max_abs(d_half.reverse() - w.m) < tau_unit);
    CHECK(max_abs(d_half - d_half.reverse().eval()) > 0.1); // the flip is not a no-op here

    // Diagonal Omega' leaves a single surviving monomial per row:
    // entries e^{-i(2m-l) theta/2} down the diagonal.
    const double theta = 0.7365;
    Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
    diag(0, 0) = std::polar(1.0, -theta / 2);
    diag(1, 1) = std::polar(1.0, theta / 2);
    const Eigen::MatrixXcd d4 = wigner_d(SpinLabel(4), SpecialUnitarySU2(diag)).matrix;
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            const complex<double> expected =
                (m == n) ? std::polar(1.0, -(2.0 * m - 4.0) * theta / 2) : 0.0;
            CHECK(std::abs(d4(m, n) - expected) < tau_rep);
        }
    }
}

TEST_CASE("wigner_d blocks are unitary up to two_j = 12") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto branch = decompose_u2(haar_sample_u2(seed));
        for (int two_j = 0; two_j <= 12; ++two_j) {
            const Eigen::MatrixXcd d = wigner_d(SpinLabel(two_j), branch).matrix;
            CHECK(max_abs(d.adjoint() * d -
                          Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1)) < tau_rep);
        }
    }
}

TEST_CASE("wigner_d is a homomorphism") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = decompose_u2(haar_sample_u2(2 * seed + 1));
        const auto b = decompose_u2(haar_sample_u2(2 * seed + 2));
        const SpecialUnitarySU2 ab(a.m * b.m);
        for (int two_j = 0; two_j <= 8; ++two_j) {
            const Eigen::MatrixXcd lhs = wigner_d(SpinLabel(two_j), ab).matrix;
            const Eigen::MatrixXcd rhs = wigner_d(SpinLabel(two_j), a).matrix *
                                         wigner_d(SpinLabel(two_j), b).matrix;
            CHECK(max_abs(lhs - rhs) < tau_rep);
        }
    }
}

TEST_CASE("sign covariance: D(-Omega') = (-1)^{2j} D(Omega'), exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto branch = decompose_u2(haar_sample_u2(seed));
        const SpecialUnitarySU2 negated(-branch.m);
        for (int two_j = 0; two_j <= 9; ++two_j) {
            const Eigen::MatrixXcd plus = wigner_d(SpinLabel(two_j), branch).matrix;
            const Eigen::MatrixXcd minus = wigner_d(SpinLabel(two_j), negated).matrix;
            const double sign = (two_j % 2 == 0) ? 1.0 : -1.0;
            // Entries are degree-2j monomials, so the flip is exact in
            // floating point, not merely within tolerance.
            CHECK((minus - sign * plus).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("traces match the SU(2) characters") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto branch = decompose_u2(haar_sample_u2(seed));
        const double theta = rotation_angle(branch);
        for (int two_j = 0; two_j <= 10; ++two_j) {
            const complex<double> trace = wigner_d(SpinLabel(two_j), branch).matrix.trace();
            CHECK(std::abs(trace - character(SpinLabel(two_j), theta)) < tau_rep);
        }
    }
    CHECK(character(SpinLabel(6), 0.0) == doctest::Approx(7.0));
    CHECK(character(SpinLabel(5), 2 * std::numbers::pi) == doctest::Approx(-6.0));
    CHECK(character(SpinLabel(4), 2 * std::numbers::pi) == doctest::Approx(5.0));
}

TEST_CASE("block_unitary is branch independent") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto branch = decompose_u2(haar_sample_u2(seed));
        const SpecialUnitarySU2 flipped(-branch.m, branch.alpha + std::numbers::pi);
        for (int l = 0; l <= 8; ++l) {
            const Eigen::MatrixXcd a = block_unitary(l, branch).matrix;
            const Eigen::MatrixXcd b = block_unitary(l, flipped).matrix;
            CHECK(max_abs(a - b) < tau_rep);
        }
    }
}

TEST_CASE("block_unitary spot values") {
    const UnitaryU2 omega = haar_sample_u2(5);

    const WignerBlock vacuum = block_unitary(0, omega);
    CHECK(vacuum.dimension() == 1);
    CHECK(std::abs(vacuum.matrix(0, 0) - 1.0) < tau_rep);

    // l = 1 recovers Omega itself (up to the fixed basis flip).
    const Eigen::MatrixXcd one = block_unitary(1, omega).matrix;
    CHECK(max_abs(one.reverse() - omega.m) < tau_rep);

    CHECK_THROWS_AS(block_unitary(-1, omega), std::invalid_argument);
}

TEST_CASE("rotation_angle recovers the eigenphase") {
    const double theta = 1.234;
    CHECK(rotation_angle(SpecialUnitarySU2(rotation_y(theta))) == doctest::Approx(theta));
    CHECK(rotation_angle(SpecialUnitarySU2(Eigen::Matrix2cd::Identity())) ==
          doctest::Approx(0.0));
    CHECK(rotation_angle(SpecialUnitarySU2(-Eigen::Matrix2cd::Identity())) ==
          doctest::Approx(2 * std::numbers::pi));
}
