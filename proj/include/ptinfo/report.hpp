#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ptinfo {

enum class OutputFormat { csv, json };

using Value = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// Column-ordered rows that serialize to CSV (header line, %.10g numbers) or to a
/// JSON array of objects keyed by column name in the same order.
class Report {
public:
    explicit Report(std::vector<std::string> columns);

    /// Throws std::invalid_argument when the row width differs from the header.
    void add_row(std::vector<Value> row);

    [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }
    [[nodiscard]] const std::vector<std::vector<Value>>& rows() const noexcept { return rows_; }

    void write(std::ostream& out, OutputFormat format) const;
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Value>> rows_;
};

std::string format_number(double v);

}  // namespace ptinfo
