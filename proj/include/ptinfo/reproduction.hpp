#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptinfo/fixtures.hpp"
#include "ptinfo/model.hpp"
#include "ptinfo/observables.hpp"

namespace ptinfo {

struct CellDeviation {
    int table_id = 0;
    std::string row;
    std::string column;
    std::optional<P2Mode> mode;  // set for cells that depend on <p^2>
    double lambda = 0.0;
    int n = 0;
    int l = 0;
    double printed = 0.0;
    double computed = 0.0;
    double abs_dev = 0.0;  // computed - printed
    double rel_dev = 0.0;  // abs_dev / |printed|
};

struct D0Grid {
    double start = 0.0;
    double stop = 0.5;
    double step = 0.005;
};

struct D0Fit {
    double d0 = 0.0;
    double rms_rel = 0.0;  // over the identity-mode <p^2>-dependent cells
    std::size_t cells = 0;
};

struct ReproductionOptions {
    double d0 = kDefaultD0;
    QuadratureOptions quadrature;
    D0Grid d0_grid;
};

struct DeviationReport {
    int table_id = 0;
    double d0 = kDefaultD0;
    std::vector<CellDeviation> cells;
    std::optional<D0Fit> best_fit;  // only for tables holding l > 0 states

    /// Largest |rel_dev| over cells of one column (and mode, when given).
    [[nodiscard]] double max_rel_dev(const std::string& column,
                                     std::optional<P2Mode> mode = std::nullopt) const;
};

/// Recomputes every printed cell of a table from the library and records the
/// per-cell deviation. Empty printed cells are skipped.
DeviationReport reproduction_report(const Table& table, const ReproductionOptions& opts = {});

DeviationReport reproduction_report(int table_id, double d0,
                                    const std::filesystem::path& dir = default_fixture_dir());

}  // namespace ptinfo
