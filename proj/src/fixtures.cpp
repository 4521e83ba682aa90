#include "ptinfo/fixtures.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <fmt/format.h>

namespace ptinfo {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view field, int table_id, int line_no) {
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw FixtureError(fmt::format("table {}: line {}: '{}' is not a number", table_id,
                                       line_no, field));
    }
    return v;
}

int parse_int(std::string_view field, int table_id, const char* what) {
    int v = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw FixtureError(fmt::format("table {}: {} '{}' is not an integer", table_id, what, field));
    }
    return v;
}

std::optional<double> as_int_valued(const std::optional<double>& v) {
    if (v && std::floor(*v) == *v) return v;
    return std::nullopt;
}

// "hbar=1 two_mu=1"
void apply_units(std::string_view units, TableRow& row, int table_id) {
    std::istringstream ss{std::string(units)};
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const auto key = tok.substr(0, eq);
        const double val = parse_number(std::string_view(tok).substr(eq + 1), table_id, 0);
        if (key == "hbar") row.hbar = val;
        if (key == "two_mu") row.two_mu = val;
    }
}

void check_id(int table_id) {
    if (table_id < 1 || table_id > kTableCount) {
        throw std::invalid_argument(fmt::format("unknown table id {}", table_id));
    }
}

}  // namespace

std::optional<double> TableRow::value(std::string_view column) const {
    for (const auto& c : columns) {
        if (c.name == column) return c.value;
    }
    return std::nullopt;
}

double TableRow::at(std::string_view column) const {
    const auto v = value(column);
    if (!v) {
        throw FixtureError(
            fmt::format("table {} row {}: no value in column '{}'", table_id, label(), column));
    }
    return *v;
}

std::string TableRow::label() const {
    std::string s;
    if (lambda) s = fmt::format("lambda={:g}", *lambda);
    if (n && l) s += fmt::format("{}n={},l={}", s.empty() ? "" : ",", *n, *l);
    return s;
}

std::filesystem::path default_fixture_dir() {
#ifdef PTINFO_FIXTURE_DIR
    return PTINFO_FIXTURE_DIR;
#else
    return "data/tables";
#endif
}

std::filesystem::path table_path(int table_id, const std::filesystem::path& dir) {
    check_id(table_id);
    return dir / fmt::format("table_{:02d}.csv", table_id);
}

Table parse_table(int table_id, std::istream& in) {
    check_id(table_id);
    Table t;
    t.id = table_id;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            const auto body = trim(sv.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string_view::npos) continue;
            t.metadata[std::string(trim(body.substr(0, colon)))] =
                std::string(trim(body.substr(colon + 1)));
            continue;
        }
        const auto fields = split(sv);
        if (t.header.empty()) {
            for (auto f : fields) t.header.emplace_back(f);
            continue;
        }
        if (fields.size() != t.header.size()) {
            throw FixtureError(fmt::format("table {}: line {} has {} fields, header has {}",
                                           table_id, line_no, fields.size(), t.header.size()));
        }
        TableRow row;
        row.table_id = table_id;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::optional<double> v;
            if (!fields[i].empty() && fields[i] != "null") {
                v = parse_number(fields[i], table_id, line_no);
            }
            row.columns.push_back({t.header[i], v});
        }
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty()) throw FixtureError(fmt::format("table {}: missing header", table_id));

    const auto meta = [&](const char* key) -> const std::string* {
        const auto it = t.metadata.find(key);
        return it == t.metadata.end() ? nullptr : &it->second;
    };
    if (const auto* c = meta("caption")) t.caption = *c;
    const auto* alpha = meta("alpha");
    if (!alpha) throw FixtureError(fmt::format("table {}: missing '# alpha:' line", table_id));
    const double alpha_v = parse_number(*alpha, table_id, 0);

    for (auto& row : t.rows) {
        row.alpha = alpha_v;
        if (const auto* u = meta("units")) apply_units(*u, row, table_id);
        if (auto v = row.value("lambda")) {
            row.lambda = v;
        } else if (const auto* lam = meta("lambda")) {
            row.lambda = parse_number(*lam, table_id, 0);
        }
        for (const char* key : {"n", "l"}) {
            std::optional<int> q;
            if (auto v = as_int_valued(row.value(key))) {
                q = static_cast<int>(*v);
            } else if (const auto* m = meta(key)) {
                q = parse_int(*m, table_id, key);
            }
            (key[0] == 'n' ? row.n : row.l) = q;
        }
    }
    return t;
}

Table load_full_table(int table_id, const std::filesystem::path& dir) {
    const auto path = table_path(table_id, dir);
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture " + path.string());
    return parse_table(table_id, in);
}

std::vector<TableRow> load_table(int table_id, const std::filesystem::path& dir) {
    return load_full_table(table_id, dir).rows;
}

std::uint64_t fixture_checksum(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw FixtureError("cannot open fixture " + file.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

FixtureSet FixtureSet::load(const std::filesystem::path& dir) {
    FixtureSet set;
    for (int id = 1; id <= kTableCount; ++id) set.tables_.push_back(load_full_table(id, dir));
    return set;
}

const Table& FixtureSet::table(int table_id) const {
    check_id(table_id);
    return tables_.at(static_cast<std::size_t>(table_id - 1));
}

const std::vector<CramerRaoColumn>& cramer_rao_columns() {
    static const std::vector<CramerRaoColumn> cols = {
        {"n0_l0", 0, 0, 2, 10},
        {"n1_l0", 1, 0, 3, 11},
        {"n2_l1", 2, 1, 5, 13},
        {"n3_l2", 3, 2, 6, 14},
    };
    return cols;
}

}  // namespace ptinfo

namespace ptinfo {

const std::array<std::uint64_t, kTableCount>& committed_checksums() {
    static const std::array<std::uint64_t, kTableCount> sums = {
        0x81c79158eddf6014ULL,  // table_01.csv
        0x484bcf7235714010ULL,  // table_02.csv
        0xffa03ce9b8156f7bULL,  // table_03.csv
        0x23aff098645d9527ULL,  // table_04.csv
        0x36099e3a841026ceULL,  // table_05.csv
        0xcf1f1ef3efa704bcULL,  // table_06.csv
        0xaf44943f18a6ae07ULL,  // table_07.csv
        0x3974dce0c2b96d66ULL,  // table_08.csv
        0xbd7b4389e825bfb5ULL,  // table_09.csv
        0x47822ff5ae53c3a7ULL,  // table_10.csv
        0x87a878925aa409f5ULL,  // table_11.csv
        0xa894e657e55b1dd9ULL,  // table_12.csv
        0xcae0991e713f2d63ULL,  // table_13.csv
        0x6de830e07d2f685aULL,  // table_14.csv
        0xb018d756fdca4392ULL,  // table_15.csv
    };
    return sums;
}

}  // namespace ptinfo
