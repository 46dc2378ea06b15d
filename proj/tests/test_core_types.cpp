#include "dfs/core_types.hpp"

#include <doctest.h>

using namespace dfs;

TEST_CASE("valid_spins follows the parity rule") {
    CHECK(valid_spins(SectorIndex(1, 0)) == std::vector<SpinLabel>{SpinLabel(0)});
    CHECK(valid_spins(SectorIndex(2, 2)) == std::vector<SpinLabel>{SpinLabel(0), SpinLabel(2)});
    CHECK(valid_spins(SectorIndex(2, 3)) == std::vector<SpinLabel>{SpinLabel(1), SpinLabel(3)});
}

TEST_CASE("valid_spins is nonempty, ascending, and capped by L") {
    for (int n = 1; n <= 4; ++n) {
        for (int L = 0; L <= 12; ++L) {
            const auto spins = valid_spins(SectorIndex(n, L));
            REQUIRE(!spins.empty());
            CHECK(spins.back().two_j == L);
            for (std::size_t i = 0; i < spins.size(); ++i) {
                CHECK(spins[i].two_j % 2 == L % 2);
                if (i > 0)
                    CHECK(spins[i].two_j == spins[i - 1].two_j + 2);
            }
        }
    }
}

namespace {

// Counts 2N-mode occupation tuples with the given total by direct
// recursive enumeration; independent of the binomial formula.
long count_tuples(int modes_left, int remaining) {
    if (modes_left == 0)
        return remaining == 0 ? 1 : 0;
    long total = 0;
    for (int occ = 0; occ <= remaining; ++occ)
        total += count_tuples(modes_left - 1, remaining - occ);
    return total;
}

} // namespace

TEST_CASE("sector_dimension matches spot values and brute-force enumeration") {
    CHECK(sector_dimension(SectorIndex(1, 5)) == 6);
    CHECK(sector_dimension(SectorIndex(2, 2)) == 10);
    CHECK(count_tuples(4, 2) == 10);
    CHECK(sector_dimension(SectorIndex(3, 0)) == 1);

    for (int n = 1; n <= 3; ++n)
        for (int L = 0; L <= 6; ++L)
            CHECK(sector_dimension(SectorIndex(n, L)) == count_tuples(2 * n, L));
}

TEST_CASE("sector dimensions satisfy the one-use convolution") {
    // H_{NL} = sum_{L'} H_{N-1,L'} (x) H^{(L-L')} at the level of dimensions.
    for (int n = 2; n <= 5; ++n) {
        for (int L = 0; L <= 12; ++L) {
            Multiplicity sum = 0;
            for (int lp = 0; lp <= L; ++lp)
                sum += sector_dimension(SectorIndex(n - 1, lp)) * (L - lp + 1);
            CHECK(sector_dimension(SectorIndex(n, L)) == sum);
        }
    }
}

TEST_CASE("domain type validation") {
    CHECK_THROWS_AS(SpinLabel(-1), std::invalid_argument);
    CHECK_THROWS_AS(SectorIndex(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(SectorIndex(1, -1), std::invalid_argument);
    CHECK(SpinLabel(4).dimension() == 5);

    CHECK(spin_in_sector(SectorIndex(2, 2), SpinLabel(2)));
    CHECK(!spin_in_sector(SectorIndex(2, 2), SpinLabel(1))); // parity
    CHECK(!spin_in_sector(SectorIndex(2, 2), SpinLabel(4))); // range
}

TEST_CASE("unitary type validation") {
    CHECK_NOTHROW(UnitaryU2{Eigen::Matrix2cd::Identity()});

    Eigen::Matrix2cd shear;
    shear << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS(UnitaryU2{shear}, std::invalid_argument);

    // Unitary but det != 1 must be rejected as a special unitary.
    Eigen::Matrix2cd phased = Eigen::Matrix2cd::Identity();
    phased(0, 0) = std::complex<double>(0.0, 1.0);
    CHECK_NOTHROW(UnitaryU2{phased});
    CHECK_THROWS_AS(SpecialUnitarySU2{phased}, std::invalid_argument);
}

TEST_CASE("IrrepMultiset bookkeeping") {
    IrrepMultiset set;
    set.add(SpinLabel(2), 3);
    set.add(SpinLabel(0), 1);
    set.add(SpinLabel(2), 1);
    CHECK(set.count(SpinLabel(2)) == 4);
    CHECK(set.count(SpinLabel(4)) == 0);
    CHECK(set.total_dimension() == 4 * 3 + 1);

    set.add(SpinLabel(6), 0); // zero counts never create entries
    CHECK(set.size() == 2);
}

TEST_CASE("MultiplicityTable reads invalid spins as zero and bounds-checks sectors") {
    MultiplicityTable table;
    table.resize(2, 4);
    table.slot(2, 4, 2) = 7;
    CHECK(table.at(2, 4, 2) == 7);
    CHECK(table.at(2, 4, 1) == 0);  // parity mismatch
    CHECK(table.at(2, 4, 6) == 0);  // beyond L
    CHECK(table.at(2, 3, 3) == 0);  // zero-initialized but valid slot
    CHECK_THROWS_AS(table.at(3, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(table.at(1, 5, 1), std::out_of_range);
    CHECK_THROWS_AS(table.slot(2, 4, 1), std::invalid_argument);
}
