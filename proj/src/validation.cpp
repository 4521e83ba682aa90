#include <cmath>
#include <string>

#include <fmt/format.h>

#include "ptinfo/fixtures.hpp"

namespace ptinfo {

namespace {

const TableRow* row_at_lambda(const Table& t, double lambda) {
    for (const auto& r : t.rows) {
        if (r.lambda && std::abs(*r.lambda - lambda) < 1e-9) return &r;
    }
    return nullptr;
}

bool within(double printed, double expected, double rel, double abs_floor) {
    const double diff = std::abs(printed - expected);
    return diff <= abs_floor || diff <= rel * std::abs(expected);
}

double lambda_of_column(std::string_view name) {
    // "lambda_20" -> 20
    return std::stod(std::string(name.substr(name.find('_') + 1)));
}

class Recorder {
public:
    explicit Recorder(ValidationReport& r) : report_(r) {}

    void add(std::string check, std::string description, const TableRow& row,
             std::string column, double printed, double expected, bool passed) {
        report_.checks.push_back({std::move(check), std::move(description), row.table_id,
                                  row.label(), std::move(column), printed, expected,
                                  printed - expected, passed});
    }

private:
    ValidationReport& report_;
};

}  // namespace

std::size_t ValidationReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.passed ? 0 : 1;
    return f;
}

ValidationReport validate_identities(const FixtureSet& fx, const IdentityTolerances& tol) {
    ValidationReport report;
    Recorder rec(report);

    for (int k = 0; k < 5; ++k) {
        const Table& unc = fx.table(2 + k);
        const Table& fis = fx.table(10 + k);

        for (const auto& u : unc.rows) {
            const double r2 = u.at("r2");
            const double p2 = u.at("p2");

            // c
            const double prod = r2 * p2;
            rec.add("c", "product = <r^2><p^2>", u, "product2", u.at("product2"), prod,
                    within(u.at("product2"), prod, tol.product_rel, 0.0));
            // e
            const double bound = (*u.l + 1.5) * (*u.l + 1.5);
            rec.add("e", "printed bound = (l+3/2)^2", u, "bound", u.at("bound"), bound,
                    u.at("bound") == bound);
            rec.add("e", "product >= (l+3/2)^2", u, "product2", u.at("product2"), bound,
                    u.at("product2") >= bound);

            const TableRow* f = row_at_lambda(fis, *u.lambda);
            if (!f) continue;
            rec.add("a", "I[rho] = 4<p^2>", *f, "fisher_rho", f->at("fisher_rho"), 4.0 * p2,
                    within(f->at("fisher_rho"), 4.0 * p2, tol.fisher_rel, tol.fisher_abs));
            rec.add("b", "I[gamma] = 4<r^2>", *f, "fisher_gamma", f->at("fisher_gamma"),
                    4.0 * r2,
                    within(f->at("fisher_gamma"), 4.0 * r2, tol.fisher_rel, tol.fisher_abs));
        }

        for (const auto& f : fis.rows) {
            const double prod = f.at("fisher_rho") * f.at("fisher_gamma");
            rec.add("f", "I[rho]I[gamma] column = I[rho] * I[gamma]", f, "fisher_product",
                    f.at("fisher_product"), prod,
                    within(f.at("fisher_product"), prod, tol.product_rel, 0.0));
            rec.add("e", "printed bound = 36", f, "bound", f.at("bound"), 36.0,
                    f.at("bound") == 36.0);
            rec.add("e", "I[rho]I[gamma] >= 36", f, "fisher_product", f.at("fisher_product"),
                    36.0, f.at("fisher_product") >= 36.0);
        }
    }

    // d, e on table 15
    for (const auto& row : fx.table(15).rows) {
        rec.add("e", "printed bound = 9", row, "bound", row.at("bound"), 9.0,
                row.at("bound") == 9.0);
        for (const auto& col : cramer_rao_columns()) {
            const auto cell = row.value(col.name);
            if (!cell) continue;
            rec.add("e", "I[rho]V[rho] >= 9", row, col.name, *cell, 9.0, *cell >= 9.0);

            const TableRow* u = row_at_lambda(fx.table(col.uncertainty_table), *row.lambda);
            const TableRow* f = row_at_lambda(fx.table(col.fisher_table), *row.lambda);
            if (!u || !f) continue;
            const double expected = f->at("fisher_rho") * u->at("r2");
            rec.add("d", "I[rho]V[rho] = I[rho] <r^2>", row, col.name, *cell, expected,
                    within(*cell, expected, tol.cramer_rao_rel, 0.0));
        }
    }

    // e, g on tables 7-9
    const Table& t7 = fx.table(7);
    const Table& t8 = fx.table(8);
    const Table& t9 = fx.table(9);
    for (std::size_t i = 0; i < t9.rows.size(); ++i) {
        const auto& row = t9.rows[i];
        const double bound = *row.l + 1.5;
        rec.add("e", "printed bound = l+3/2", row, "bound", row.at("bound"), bound,
                row.at("bound") == bound);
        for (const auto& c : row.columns) {
            if (!c.name.starts_with("lambda_") || !c.value) continue;
            rec.add("e", fmt::format("dr dp >= l+3/2 at lambda={:g}", lambda_of_column(c.name)),
                    row, c.name, *c.value, bound, *c.value >= bound);
            if (i < t7.rows.size() && i < t8.rows.size() && t7.rows[i].n == row.n &&
                t8.rows[i].n == row.n && t7.rows[i].l == row.l && t8.rows[i].l == row.l) {
                const double prod = t7.rows[i].at(c.name) * t8.rows[i].at(c.name);
                rec.add("g", "dr dp = dr * dp", row, c.name, *c.value, prod,
                        within(*c.value, prod, tol.product_rel, 0.0));
            }
        }
    }
    return report;
}

}  // namespace ptinfo
