#include "ptinfo/report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace ptinfo {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
        if (!std::isfinite(v)) return nullptr;
        return v;
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    return fmt::format("{:.10g}", v);
}

Report::Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Report::add_row(std::vector<Value> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument(fmt::format("report row has {} values, expected {}",
                                                row.size(), columns_.size()));
    }
    rows_.push_back(std::move(row));
}

void Report::write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::csv) {
        write_csv(out);
    } else {
        write_json(out);
    }
}

void Report::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << csv_escape(columns_[i]);
    }
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        }
        out << '\n';
    }
}

void Report::write_json(std::ostream& out) const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[columns_[i]] = std::visit(JsonCell{}, row[i]);
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace ptinfo
