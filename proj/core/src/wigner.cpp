#include "dfs/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace dfs {

namespace {

using std::complex;

// Exact n! as a GMP integer; converted to double only through a rational.
mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

double binomial_d(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b.get_d();
}

// powers[k] = z^k for k = 0..l, by repeated multiplication so that the
// entries of D(-Omega') are exact sign flips of those of D(Omega').
std::vector<complex<double>> powers(complex<double> z, int l) {
    std::vector<complex<double>> p(static_cast<std::size_t>(l) + 1);
    p[0] = 1.0;
    for (int k = 1; k <= l; ++k)
        p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * z;
    return p;
}

} // namespace

SpecialUnitarySU2 decompose_u2(const UnitaryU2 &omega) {
    const complex<double> det = omega.m.determinant();
    const double alpha = -0.5 * std::arg(det);
    const complex<double> phase = std::polar(1.0, alpha);
    return SpecialUnitarySU2(phase * omega.m, alpha);
}

WignerBlock wigner_d(SpinLabel j, const SpecialUnitarySU2 &omega_prime) {
    const int l = j.two_j;
    const auto a = powers(omega_prime.m(0, 0), l); // O_HH
    const auto b = powers(omega_prime.m(0, 1), l); // O_HV
    const auto c = powers(omega_prime.m(1, 0), l); // O_VH
    const auto d = powers(omega_prime.m(1, 1), l); // O_VV

    Eigen::MatrixXcd mat(l + 1, l + 1);
    for (int m = 0; m <= l; ++m) {
        for (int n = 0; n <= l; ++n) {
            complex<double> sum = 0.0;
            const int k_lo = std::max(0, n - l + m);
            const int k_hi = std::min(m, n);
            for (int k = k_lo; k <= k_hi; ++k) {
                sum += binomial_d(m, k) * binomial_d(l - m, n - k) *
                       a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)] *
                       c[static_cast<std::size_t>(n - k)] *
                       d[static_cast<std::size_t>(l - m - n + k)];
            }
            mpq_class norm(factorial(n) * factorial(l - n), factorial(m) * factorial(l - m));
            norm.canonicalize();
            mat(m, n) = std::sqrt(norm.get_d()) * sum;
        }
    }
    return WignerBlock{j, std::move(mat)};
}

WignerBlock block_unitary(int l, const SpecialUnitarySU2 &branch) {
    if (l < 0)
        throw std::invalid_argument("block_unitary: l must be nonnegative");
    WignerBlock block = wigner_d(SpinLabel(l), branch);
    block.matrix *= std::polar(1.0, -l * branch.alpha);
    return block;
}

WignerBlock block_unitary(int l, const UnitaryU2 &omega) {
    return block_unitary(l, decompose_u2(omega));
}

double rotation_angle(const SpecialUnitarySU2 &omega_prime) {
    const double half_trace = 0.5 * omega_prime.m.trace().real();
    return 2.0 * std::acos(std::clamp(half_trace, -1.0, 1.0));
}

double character(SpinLabel j, double theta) {
    constexpr double edge = 1e-6;
    const int dim = j.dimension();
    if (theta < edge)
        return dim;
    if (theta > 2.0 * std::numbers::pi - edge)
        return (j.two_j % 2 == 0) ? dim : -dim;
    return std::sin(dim * theta / 2.0) / std::sin(theta / 2.0);
}

} // namespace dfs
