#include "ptinfo/reproduction.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <tuple>

#include "ptinfo/evaluation.hpp"
#include "ptinfo/information.hpp"
#include "ptinfo/spectrum.hpp"

namespace ptinfo {

namespace {

using Extract = double (*)(const QuantumNumbers&, const StateObservables&);

struct State {
    PotentialParams p;
    QuantumNumbers q;
    DerivedParams d;
    StateObservables obs;  // identity mode at the requested d0
    bool closed_form_only = false;
};

struct Cell {
    std::string row;
    std::string column;
    std::optional<P2Mode> mode;
    double printed;
    std::size_t state;
    Extract extract;
};

StateObservables with_mode(StateObservables obs, P2Mode mode) {
    obs.p2_mode = mode;
    obs.p2 = mode == P2Mode::identity ? obs.p2_identity : obs.p2_derivative;
    return obs;
}

double r_inv2_hft(const QuantumNumbers&, const StateObservables& o) { return o.r_inv2_hft; }
double r2(const QuantumNumbers&, const StateObservables& o) { return o.r2; }
double p2(const QuantumNumbers&, const StateObservables& o) { return o.p2; }
double product2(const QuantumNumbers& q, const StateObservables& o) {
    return uncertainty_report(q, o).product2;
}
double delta_r(const QuantumNumbers& q, const StateObservables& o) {
    return uncertainty_report(q, o).delta_r;
}
double delta_p(const QuantumNumbers& q, const StateObservables& o) {
    return uncertainty_report(q, o).delta_p;
}
double dr_dp(const QuantumNumbers& q, const StateObservables& o) {
    const auto u = uncertainty_report(q, o);
    return u.delta_r * u.delta_p;
}
double fisher_rho(const QuantumNumbers& q, const StateObservables& o) {
    return information_report(q, o).fisher_rho;
}
double fisher_gamma(const QuantumNumbers& q, const StateObservables& o) {
    return information_report(q, o).fisher_gamma;
}
double fisher_product(const QuantumNumbers& q, const StateObservables& o) {
    return information_report(q, o).product;
}
double cramer_rao(const QuantumNumbers& q, const StateObservables& o) {
    return information_report(q, o).cramer_rao;
}

class Builder {
public:
    Builder(const Table& t, const ReproductionOptions& opts) : table_(t), opts_(opts) {}

    std::size_t state(double lambda, double alpha, int n, int l, bool closed_form_only,
                      const TableRow& row) {
        const auto key = std::make_tuple(lambda, alpha, n, l);
        if (const auto it = index_.find(key); it != index_.end()) return it->second;
        State s;
        s.p = PotentialParams{lambda, alpha, row.hbar, 0.5 * row.two_mu};
        s.q = QuantumNumbers{n, l, 0};
        s.d = derive_params(s.p, s.q, opts_.d0);
        s.closed_form_only = closed_form_only;
        if (closed_form_only) {
            s.obs.r_inv2_hft = r_inverse_squared(s.p, s.q, s.d);
        } else {
            s.obs = compute_observables(s.p, s.q, s.d, opts_.quadrature);
        }
        states_.push_back(s);
        index_[key] = states_.size() - 1;
        return states_.size() - 1;
    }

    void cell(const TableRow& row, std::string column, std::optional<double> printed,
              std::size_t st, Extract fn, bool p2_dependent) {
        if (!printed) return;
        if (p2_dependent) {
            for (P2Mode m : {P2Mode::identity, P2Mode::derivative}) {
                cells_.push_back({row.label(), column, m, *printed, st, fn});
            }
        } else {
            cells_.push_back({row.label(), std::move(column), std::nullopt, *printed, st, fn});
        }
    }

    DeviationReport finish() const {
        DeviationReport rep;
        rep.table_id = table_.id;
        rep.d0 = opts_.d0;
        for (const auto& c : cells_) {
            const State& s = states_[c.state];
            const auto obs = with_mode(s.obs, c.mode.value_or(P2Mode::identity));
            const double v = c.extract(s.q, obs);
            CellDeviation dev;
            dev.table_id = table_.id;
            dev.row = c.row;
            dev.column = c.column;
            dev.mode = c.mode;
            dev.lambda = s.p.lambda;
            dev.n = s.q.n;
            dev.l = s.q.l;
            dev.printed = c.printed;
            dev.computed = v;
            dev.abs_dev = v - c.printed;
            dev.rel_dev = dev.abs_dev / std::abs(c.printed);
            rep.cells.push_back(dev);
        }
        rep.best_fit = fit_d0();
        return rep;
    }

private:
    // Only the identity-mode <p^2> depends on d0, through 2 mu E.
    std::optional<D0Fit> fit_d0() const {
        bool has_l = false;
        for (const auto& c : cells_) {
            has_l = has_l || (c.mode == P2Mode::identity && states_[c.state].q.l > 0);
        }
        if (!has_l) return std::nullopt;

        std::optional<D0Fit> best;
        for (double d0 : linear_grid(opts_.d0_grid.start, opts_.d0_grid.stop,
                                     opts_.d0_grid.step)) {
            double sum = 0.0;
            std::size_t count = 0;
            for (const auto& c : cells_) {
                if (c.mode != P2Mode::identity) continue;
                const State& s = states_[c.state];
                DerivedParams d = s.d;
                d.d0 = d0;
                auto obs = s.obs;
                obs.p2_identity = kinetic_identity(s.p, s.q, d, obs.r_inv2_numeric, obs.tanh2);
                const double v = c.extract(s.q, with_mode(obs, P2Mode::identity));
                const double rel = (v - c.printed) / std::abs(c.printed);
                if (!std::isfinite(rel)) continue;
                sum += rel * rel;
                ++count;
            }
            if (count == 0) continue;
            const double rms = std::sqrt(sum / static_cast<double>(count));
            if (!best || rms < best->rms_rel) best = D0Fit{d0, rms, count};
        }
        return best;
    }

    const Table& table_;
    const ReproductionOptions& opts_;
    std::vector<State> states_;
    std::map<std::tuple<double, double, int, int>, std::size_t> index_;
    std::vector<Cell> cells_;
};

double lambda_of_column(const std::string& name) {
    return std::stod(name.substr(name.find('_') + 1));
}

}  // namespace

double DeviationReport::max_rel_dev(const std::string& column, std::optional<P2Mode> mode) const {
    double m = 0.0;
    for (const auto& c : cells) {
        if (c.column != column) continue;
        if (mode && c.mode != mode) continue;
        m = std::max(m, std::abs(c.rel_dev));
    }
    return m;
}

DeviationReport reproduction_report(const Table& table, const ReproductionOptions& opts) {
    Builder b(table, opts);
    const int id = table.id;
    for (const auto& row : table.rows) {
        if (id == 1) {
            const auto s = b.state(*row.lambda, row.alpha, *row.n, *row.l, true, row);
            b.cell(row, "r_inv2", row.value("r_inv2"), s, r_inv2_hft, false);
        } else if (id >= 2 && id <= 6) {
            const auto s = b.state(*row.lambda, row.alpha, *row.n, *row.l, false, row);
            b.cell(row, "r2", row.value("r2"), s, r2, false);
            b.cell(row, "p2", row.value("p2"), s, p2, true);
            b.cell(row, "product2", row.value("product2"), s, product2, true);
        } else if (id >= 7 && id <= 9) {
            for (const auto& col : row.columns) {
                if (!col.name.starts_with("lambda_")) continue;
                const auto s =
                    b.state(lambda_of_column(col.name), row.alpha, *row.n, *row.l, false, row);
                if (id == 7) b.cell(row, col.name, col.value, s, delta_r, false);
                if (id == 8) b.cell(row, col.name, col.value, s, delta_p, true);
                if (id == 9) b.cell(row, col.name, col.value, s, dr_dp, true);
            }
        } else if (id >= 10 && id <= 14) {
            const auto s = b.state(*row.lambda, row.alpha, *row.n, *row.l, false, row);
            b.cell(row, "fisher_rho", row.value("fisher_rho"), s, fisher_rho, true);
            b.cell(row, "fisher_gamma", row.value("fisher_gamma"), s, fisher_gamma, false);
            b.cell(row, "fisher_product", row.value("fisher_product"), s, fisher_product, true);
        } else if (id == 15) {
            for (const auto& col : cramer_rao_columns()) {
                const auto cell = row.value(col.name);
                if (!cell) continue;
                const auto s = b.state(*row.lambda, row.alpha, col.n, col.l, false, row);
                b.cell(row, col.name, cell, s, cramer_rao, true);
            }
        }
    }
    return b.finish();
}

DeviationReport reproduction_report(int table_id, double d0, const std::filesystem::path& dir) {
    ReproductionOptions opts;
    opts.d0 = d0;
    return reproduction_report(load_full_table(table_id, dir), opts);
}

}  // namespace ptinfo
