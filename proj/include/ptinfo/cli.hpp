#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ptinfo/fixtures.hpp"
#include "ptinfo/model.hpp"
#include "ptinfo/observables.hpp"
#include "ptinfo/quadrature.hpp"
#include "ptinfo/report.hpp"
#include "ptinfo/reproduction.hpp"

namespace ptinfo::cli {

enum class Command { state, sweep, table, validate, figure1 };

struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

struct RunConfig {
    Command command = Command::state;

    PotentialParams params{0.5, 1.0, 1.0, 0.5};
    double d0 = kDefaultD0;
    QuantumNumbers state;
    P2Mode p2_mode = P2Mode::identity;

    Range sweep{0.5, 9.5, 1.0};

    int table_id = 1;
    D0Grid d0_grid;

    bool validate_reproduction = true;

    std::vector<int> figure_ns{0, 1, 2, 3};
    std::vector<int> figure_ls{0, 2, 5};
    double figure_alpha = 0.1;
    Range figure_lambda{10.0, 200.0, 1.0};

    OutputFormat format = OutputFormat::csv;
    std::string output;  // empty: standard output
    QuadratureOptions quadrature;
    std::filesystem::path fixtures = default_fixture_dir();
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Column order of the `state` and `sweep` outputs.
const std::vector<std::string>& state_columns();

/// Builds the report for a command. Throws on computation failure.
Report build_report(const RunConfig& config, std::ostream& diag, bool& identity_failure);

/// Runs a parsed configuration; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors return kExitUsage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptinfo::cli
