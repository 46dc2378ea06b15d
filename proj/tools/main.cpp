// dfs: exact multiplicity tables for collectively depolarized bosonic
// sectors, with brute-force and numerical verification oracles.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 resource cap exceeded.

#include "dfs/cg_oracle.hpp"
#include "dfs/channel.hpp"
#include "dfs/core_types.hpp"
#include "dfs/multiplicity.hpp"
#include "dfs/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct Caps {
    std::uint64_t compositions = dfs::default_composition_cap;
    std::int64_t sector_dim = dfs::default_sector_dimension_cap;
    int commutant_dim = dfs::default_commutant_dimension_cap;
};

// DFS_CAP_COMPOSITIONS and DFS_CAP_SECTOR_DIM override the oracle caps;
// the latter also bounds the commutant solver since its cap is a sector
// dimension too.
Caps caps_from_env() {
    Caps caps;
    if (const char *raw = std::getenv("DFS_CAP_COMPOSITIONS")) {
        const long long value = std::stoll(raw);
        if (value < 1)
            throw CLI::ValidationError("DFS_CAP_COMPOSITIONS must be a positive integer");
        caps.compositions = static_cast<std::uint64_t>(value);
    }
    if (const char *raw = std::getenv("DFS_CAP_SECTOR_DIM")) {
        const long long value = std::stoll(raw);
        if (value < 1)
            throw CLI::ValidationError("DFS_CAP_SECTOR_DIM must be a positive integer");
        caps.sector_dim = value;
        caps.commutant_dim = static_cast<int>(std::min<long long>(value, 1 << 20));
    }
    return caps;
}

std::string j_string(int two_j) {
    if (two_j % 2 == 0)
        return std::to_string(two_j / 2);
    return std::to_string(two_j) + "/2";
}

std::string rational_string(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_str();
}

class OutputFile {
  public:
    explicit OutputFile(const std::string &path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw CLI::ValidationError("cannot open output file: " + path);
        }
    }
    std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// ---- table ----------------------------------------------------------------

int run_table(int n, int l_max, const std::string &format, const std::string &output) {
    const dfs::MultiplicityTable table = dfs::build_table(n, l_max);
    OutputFile out(output);

    // Zero multiplicities stay absent, mirroring the table convention.
    if (format == "csv") {
        out.stream() << "n_uses,total_excitations,two_j,multiplicity,irrep_dimension\n";
        for (int nu = 1; nu <= n; ++nu)
            for (int L = 0; L <= l_max; ++L)
                for (dfs::SpinLabel j : dfs::valid_spins(dfs::SectorIndex(nu, L))) {
                    const dfs::Multiplicity &k = table.at(nu, L, j.two_j);
                    if (k == 0)
                        continue;
                    out.stream() << nu << ',' << L << ',' << j.two_j << ',' << k.get_str() << ','
                                 << j.dimension() << '\n';
                }
        return exit_ok;
    }

    ordered_json doc;
    doc["n_max"] = n;
    doc["l_max"] = l_max;
    doc["records"] = ordered_json::array();
    for (int nu = 1; nu <= n; ++nu) {
        for (int L = 0; L <= l_max; ++L) {
            for (dfs::SpinLabel j : dfs::valid_spins(dfs::SectorIndex(nu, L))) {
                const dfs::Multiplicity &k = table.at(nu, L, j.two_j);
                if (k == 0)
                    continue;
                ordered_json rec;
                rec["n_uses"] = nu;
                rec["total_excitations"] = L;
                rec["two_j"] = j.two_j;
                rec["multiplicity"] = k.get_str();
                rec["irrep_dimension"] = j.dimension();
                doc["records"].push_back(std::move(rec));
            }
        }
    }
    out.stream() << doc.dump(2) << '\n';
    return exit_ok;
}

// ---- verify ---------------------------------------------------------------

int verify_against(const dfs::SectorIndex &sector, const std::string &oracle_name,
                   const std::function<dfs::Multiplicity(dfs::SpinLabel)> &oracle_value) {
    dfs::MultiplicityTable table = dfs::build_table(sector.n_uses, sector.total_excitations);
    std::cout << "N=" << sector.n_uses << " L=" << sector.total_excitations << '\n';
    for (dfs::SpinLabel j : dfs::valid_spins(sector)) {
        const dfs::Multiplicity recursion = dfs::k_value(table, sector, j);
        const dfs::Multiplicity expected = oracle_value(j);
        if (recursion != expected) {
            std::cout << "MISMATCH at two_j=" << j.two_j << " (j=" << j_string(j.two_j)
                      << "): recursion=" << recursion.get_str() << " " << oracle_name << "="
                      << expected.get_str() << '\n';
            return exit_mismatch;
        }
        std::cout << "  two_j=" << j.two_j << " (j=" << j_string(j.two_j)
                  << "): recursion=" << recursion.get_str() << " " << oracle_name << "="
                  << expected.get_str() << '\n';
    }
    std::cout << "PASS recursion agrees with the " << oracle_name << " oracle\n";
    return exit_ok;
}

int run_verify(int n, int l, const std::string &oracle, std::uint64_t seed, const Caps &caps) {
    const dfs::SectorIndex sector(n, l);

    if (oracle == "cg") {
        const dfs::IrrepMultiset reference = dfs::oracle_multiplicities(sector, caps.compositions);
        return verify_against(sector, "cg",
                              [&](dfs::SpinLabel j) { return reference.count(j); });
    }

    if (oracle == "weight") {
        return verify_against(sector, "weight", [&](dfs::SpinLabel j) -> dfs::Multiplicity {
            const int m = (l + j.two_j) / 2;
            return dfs::weight_count(sector, m) - dfs::weight_count(sector, m + 1);
        });
    }

    if (oracle == "character") {
        const dfs::MultiplicityTable table = dfs::build_table(n, l);
        constexpr int n_draws = 50;
        dfs::HaarSampler sampler(seed);
        double worst = 0.0;
        // Make sure the basis fits the cap before the sampling loop.
        (void)dfs::sector_basis(sector, caps.sector_dim);
        for (int i = 0; i < n_draws; ++i) {
            const dfs::SpecialUnitarySU2 branch = dfs::decompose_u2(sampler.next());
            worst = std::max(worst, dfs::character_check(sector, table, branch));
        }
        std::ostringstream residual;
        residual.setf(std::ios::scientific);
        residual.precision(3);
        residual << worst;
        std::cout << "N=" << n << " L=" << l << ": max character residual over " << n_draws
                  << " samples (seed " << seed << ") = " << residual.str() << '\n';
        if (worst < dfs::tau_char) {
            std::cout << "PASS residual below " << dfs::tau_char << '\n';
            return exit_ok;
        }
        std::cout << "FAIL residual exceeds " << dfs::tau_char << '\n';
        return exit_mismatch;
    }

    // commutant
    const int dim = dfs::commutant_dimension(sector, 3, seed, caps.commutant_dim);
    const dfs::MultiplicityTable table = dfs::build_table(n, l);
    dfs::Multiplicity expected = 0;
    for (dfs::SpinLabel j : dfs::valid_spins(sector)) {
        const dfs::Multiplicity &k = table.at(n, l, j.two_j);
        expected += k * k;
    }
    std::cout << "N=" << n << " L=" << l << ": commutant dimension " << dim
              << ", sum of squared multiplicities " << expected.get_str() << '\n';
    if (dfs::Multiplicity(dim) == expected) {
        std::cout << "PASS commutant dimension matches\n";
        return exit_ok;
    }
    std::cout << "FAIL commutant dimension differs\n";
    return exit_mismatch;
}

// ---- grid -----------------------------------------------------------------

int run_grid(int l, int two_j, const std::string &format, const std::string &output) {
    const auto support = dfs::recursion_support(dfs::SectorIndex(1, l), dfs::SpinLabel(two_j));

    // Rectangle vertices in the (L', j') plane: (L, j), (L-2j, 0),
    // (L/2-j, L/4-j/2), (L/2+j, L/4+j/2); exact rationals.
    const std::pair<std::string, std::string> vertices[4] = {
        {rational_string(l, 1), rational_string(two_j, 2)},
        {rational_string(l - two_j, 1), rational_string(0, 1)},
        {rational_string(l - two_j, 2), rational_string(l - two_j, 4)},
        {rational_string(l + two_j, 2), rational_string(l + two_j, 4)},
    };

    OutputFile out(output);
    if (format == "csv") {
        out.stream() << "kind,l_prime,two_j_prime,x,y\n";
        for (const auto &[lp, tjp] : support)
            out.stream() << "support," << lp << ',' << tjp << ',' << rational_string(lp, 1)
                         << ',' << rational_string(tjp, 2) << '\n';
        for (const auto &[x, y] : vertices)
            out.stream() << "vertex,,," << x << ',' << y << '\n';
        return exit_ok;
    }

    ordered_json doc;
    doc["total_excitations"] = l;
    doc["two_j"] = two_j;
    doc["support"] = ordered_json::array();
    for (const auto &[lp, tjp] : support) {
        ordered_json rec;
        rec["l_prime"] = lp;
        rec["two_j_prime"] = tjp;
        rec["x"] = rational_string(lp, 1);
        rec["y"] = rational_string(tjp, 2);
        doc["support"].push_back(std::move(rec));
    }
    doc["vertices"] = ordered_json::array();
    for (const auto &[x, y] : vertices) {
        ordered_json rec;
        rec["x"] = x;
        rec["y"] = y;
        doc["vertices"].push_back(std::move(rec));
    }
    out.stream() << doc.dump(2) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Decoherence-free subsystem dimensions for a collectively depolarizing "
                 "two-mode bosonic channel"};
    app.require_subcommand(1);

    // table
    auto *table_cmd = app.add_subcommand("table", "Emit K^j_{NL} for all N <= n, L <= l-max");
    int table_n = 1, table_lmax = 0;
    std::string table_format = "csv", table_output;
    table_cmd->add_option("--n", table_n, "Maximum number of channel uses")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--l-max", table_lmax, "Maximum total excitation number")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_option("--output", table_output, "Write to a file instead of stdout");

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "Check the recursion against an oracle");
    int verify_n = 1, verify_l = 0;
    std::string verify_oracle;
    std::uint64_t verify_seed = 0;
    verify_cmd->add_option("--n", verify_n, "Number of channel uses")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--l", verify_l, "Total excitation number")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--oracle", verify_oracle, "Oracle to compare against")
        ->required()
        ->check(CLI::IsMember({"cg", "weight", "character", "commutant"}));
    verify_cmd->add_option("--seed", verify_seed, "Seed for sampled oracles");

    // grid
    auto *grid_cmd = app.add_subcommand("grid", "Export the recursion support rectangle");
    int grid_n = 1, grid_l = 0, grid_two_j = 0;
    std::string grid_format = "csv", grid_output;
    grid_cmd->add_option("--n", grid_n, "Number of channel uses (metadata only)")
        ->check(CLI::PositiveNumber);
    grid_cmd->add_option("--l", grid_l, "Total excitation number")
        ->required()
        ->check(CLI::NonNegativeNumber);
    grid_cmd->add_option("--two-j", grid_two_j, "Doubled spin 2j")
        ->required()
        ->check(CLI::NonNegativeNumber);
    grid_cmd->add_option("--format", grid_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    grid_cmd->add_option("--output", grid_output, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
        const Caps caps = caps_from_env();
        if (*table_cmd)
            return run_table(table_n, table_lmax, table_format, table_output);
        if (*verify_cmd)
            return run_verify(verify_n, verify_l, verify_oracle, verify_seed, caps);
        return run_grid(grid_l, grid_two_j, grid_format, grid_output);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    } catch (const dfs::ResourceError &e) {
        std::cerr << "resource cap exceeded: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::bad_alloc &) {
        std::cerr << "resource exhaustion: out of memory\n";
        return exit_resource;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
