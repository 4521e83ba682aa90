#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptinfo {

inline constexpr int kTableCount = 15;

class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Column {
    std::string name;
    std::optional<double> value;  // nullopt for an empty printed cell
};

struct TableRow {
    int table_id = 0;
    std::optional<double> lambda;  // absent for the wide lambda tables (7-9)
    double alpha = 1.0;
    double hbar = 1.0;
    double two_mu = 1.0;
    std::optional<int> n;  // absent for table 15, whose columns span several states
    std::optional<int> l;
    std::vector<Column> columns;  // every printed column, header order

    [[nodiscard]] std::optional<double> value(std::string_view column) const;
    /// Throws FixtureError when the column is missing or empty.
    [[nodiscard]] double at(std::string_view column) const;
    /// e.g. "lambda=2.5" or "n=1,l=2"
    [[nodiscard]] std::string label() const;
};

struct Table {
    int id = 0;
    std::string caption;
    std::map<std::string, std::string> metadata;  // from "# key: value" lines
    std::vector<std::string> header;
    std::vector<TableRow> rows;
};

/// Directory holding table_01.csv ... table_15.csv.
std::filesystem::path default_fixture_dir();

std::filesystem::path table_path(int table_id, const std::filesystem::path& dir);

/// Parses one fixture stream. Throws FixtureError on malformed content.
Table parse_table(int table_id, std::istream& in);

/// Throws std::invalid_argument for table ids outside 1..15 and FixtureError for
/// unreadable or malformed files.
Table load_full_table(int table_id, const std::filesystem::path& dir = default_fixture_dir());

std::vector<TableRow> load_table(int table_id,
                                 const std::filesystem::path& dir = default_fixture_dir());

/// FNV-1a 64 over the raw file bytes.
std::uint64_t fixture_checksum(const std::filesystem::path& file);

/// Checksums of the committed transcriptions, indexed by table id - 1.
const std::array<std::uint64_t, kTableCount>& committed_checksums();

class FixtureSet {
public:
    static FixtureSet load(const std::filesystem::path& dir = default_fixture_dir());

    [[nodiscard]] const Table& table(int table_id) const;

private:
    std::vector<Table> tables_;
};

/// One identity or bound check on the printed numbers.
struct CheckResult {
    std::string check;  // "a".."g"
    std::string description;
    int table_id = 0;
    std::string row;
    std::string column;
    double printed = 0.0;
    double expected = 0.0;  // value implied by the other tables, or the bound
    double residual = 0.0;  // printed - expected
    bool passed = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] bool all_passed() const { return failures() == 0; }
};

/// Tolerances derived from the six-significant-figure print precision.
struct IdentityTolerances {
    double fisher_rel = 1e-5;
    double fisher_abs = 5e-3;
    double product_rel = 1e-4;
    double cramer_rao_rel = 1e-3;
};

/// Checks:
///   a  I[rho] (tables 10-14)  = 4 <p^2> (tables 2-6)
///   b  I[gamma] (tables 10-14) = 4 <r^2> (tables 2-6)
///   c  product column (tables 2-6) = <r^2><p^2>
///   d  table 15 cells = I[rho] <r^2>
///   e  bound columns hold and match their closed forms
///   f  I[rho] I[gamma] column (tables 10-14) = I[rho] * I[gamma]
///   g  table 9 = table 7 * table 8
ValidationReport validate_identities(const FixtureSet& fixtures,
                                     const IdentityTolerances& tol = {});

/// Table 15 column name for each (n, l) pair it reports, with the matching
/// uncertainty (2-6) and Fisher (10-14) tables.
struct CramerRaoColumn {
    std::string name;
    int n;
    int l;
    int uncertainty_table;
    int fisher_table;
};

const std::vector<CramerRaoColumn>& cramer_rao_columns();

}  // namespace ptinfo
