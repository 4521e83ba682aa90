#include "ptinfo/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ptinfo/evaluation.hpp"

namespace ptinfo::cli {

namespace {

std::vector<Value> state_row(const StateEvaluation& ev) {
    const auto& o = ev.obs;
    const auto& u = ev.uncertainty;
    std::vector<Value> row{ev.params.lambda,
                           ev.params.alpha,
                           std::int64_t{ev.q.n},
                           std::int64_t{ev.q.l},
                           o.energy,
                           o.r_inv2_hft,
                           o.r_inv2_numeric,
                           o.r2,
                           o.tanh2,
                           o.p2_identity,
                           o.p2_derivative,
                           u.delta_r,
                           u.delta_p,
                           u.product2,
                           u.bound,
                           u.squeezed};
    if (ev.information) {
        const auto& i = *ev.information;
        row.insert(row.end(), {i.fisher_rho, i.fisher_gamma, i.product, i.cramer_rao});
    } else {
        row.insert(row.end(), {fisher_position(ev.q, o), std::monostate{}, std::monostate{},
                               std::monostate{}});
    }
    return row;
}

Value mode_value(const std::optional<P2Mode>& m) {
    if (!m) return std::monostate{};
    return std::string(to_string(*m));
}

Report deviation_report(const DeviationReport& rep) {
    Report out({"table", "row", "column", "mode", "lambda", "n", "l", "printed", "computed",
                "abs_dev", "rel_dev"});
    for (const auto& c : rep.cells) {
        out.add_row({std::int64_t{c.table_id}, c.row, c.column, mode_value(c.mode), c.lambda,
                     std::int64_t{c.n}, std::int64_t{c.l}, c.printed, c.computed, c.abs_dev,
                     c.rel_dev});
    }
    return out;
}

void describe_fit(const DeviationReport& rep, std::ostream& diag) {
    if (!rep.best_fit) return;
    diag << fmt::format("table {}: best-fit d0 = {} (rms relative deviation {} over {} cells)\n",
                        rep.table_id, format_number(rep.best_fit->d0),
                        format_number(rep.best_fit->rms_rel), rep.best_fit->cells);
}

ReproductionOptions reproduction_options(const RunConfig& c) {
    ReproductionOptions o;
    o.d0 = c.d0;
    o.quadrature = c.quadrature;
    o.d0_grid = c.d0_grid;
    return o;
}

Report validate_report(const RunConfig& c, std::ostream& diag, bool& identity_failure) {
    const auto fx = FixtureSet::load(c.fixtures);
    const auto val = validate_identities(fx);
    identity_failure = !val.all_passed();

    Report out({"section", "check", "table", "row", "column", "mode", "printed", "expected",
                "residual", "relative", "status"});
    for (const auto& k : val.checks) {
        const double rel = k.expected != 0.0 ? k.residual / std::abs(k.expected) : 0.0;
        out.add_row({std::string("identity"), k.check, std::int64_t{k.table_id}, k.row, k.column,
                     std::monostate{}, k.printed, k.expected, k.residual, rel,
                     std::string(k.passed ? "pass" : "FAIL")});
    }
    diag << fmt::format("identity checks: {} run, {} failed\n", val.checks.size(),
                        val.failures());
    for (const auto& k : val.checks) {
        if (k.passed) continue;
        diag << fmt::format("  FAIL [{}] table {} {} {}: printed {} expected {}\n", k.check,
                            k.table_id, k.row, k.column, format_number(k.printed),
                            format_number(k.expected));
    }
    if (!c.validate_reproduction) return out;

    const auto opts = reproduction_options(c);
    for (int id = 1; id <= kTableCount; ++id) {
        const auto rep = reproduction_report(fx.table(id), opts);
        // one summary line per (column, mode), in first-seen order
        std::vector<std::pair<std::string, std::optional<P2Mode>>> keys;
        for (const auto& cell : rep.cells) {
            const auto key = std::make_pair(cell.column, cell.mode);
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        }
        for (const auto& [col, mode] : keys) {
            out.add_row({std::string("reproduction"), std::string("max_rel_dev"),
                         std::int64_t{id}, std::monostate{}, col, mode_value(mode),
                         std::monostate{}, std::monostate{}, std::monostate{},
                         rep.max_rel_dev(col, mode), std::string("info")});
        }
        if (rep.best_fit) {
            out.add_row({std::string("reproduction"), std::string("best_fit_d0"),
                         std::int64_t{id}, std::monostate{}, std::monostate{},
                         std::string(to_string(P2Mode::identity)), std::monostate{},
                         rep.best_fit->d0, std::monostate{}, rep.best_fit->rms_rel,
                         std::string("info")});
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& state_columns() {
    static const std::vector<std::string> cols = {
        "lambda",       "alpha",         "n",        "l",          "energy",
        "r_inv2_hft",   "r_inv2_numeric", "r2",      "tanh2",      "p2_identity",
        "p2_derivative", "delta_r",      "delta_p",  "product2",   "bound",
        "squeezed",     "fisher_rho",    "fisher_gamma", "fisher_product", "cramer_rao"};
    return cols;
}

Report build_report(const RunConfig& c, std::ostream& diag, bool& identity_failure) {
    identity_failure = false;
    switch (c.command) {
    case Command::state: {
        Report out(state_columns());
        out.add_row(state_row(evaluate_state(c.params, c.state, c.d0, c.quadrature, c.p2_mode)));
        return out;
    }
    case Command::sweep: {
        Report out(state_columns());
        for (double lam : linear_grid(c.sweep.start, c.sweep.stop, c.sweep.step)) {
            PotentialParams p = c.params;
            p.lambda = lam;
            if (c.state.n > max_bound_state(p)) {
                diag << fmt::format("skipping lambda = {}: n = {} is not bound\n",
                                    format_number(lam), c.state.n);
                continue;
            }
            out.add_row(state_row(evaluate_state(p, c.state, c.d0, c.quadrature, c.p2_mode)));
        }
        return out;
    }
    case Command::table: {
        const auto rep =
            reproduction_report(load_full_table(c.table_id, c.fixtures), reproduction_options(c));
        describe_fit(rep, diag);
        return deviation_report(rep);
    }
    case Command::validate:
        return validate_report(c, diag, identity_failure);
    case Command::figure1: {
        Report out({"n", "l", "lambda", "r_inv2"});
        const auto lambdas =
            linear_grid(c.figure_lambda.start, c.figure_lambda.stop, c.figure_lambda.step);
        for (const auto& pt : figure1_series(c.figure_ns, c.figure_ls, c.figure_alpha, lambdas,
                                             c.params.hbar, c.params.mu)) {
            out.add_row({std::int64_t{pt.n}, std::int64_t{pt.l}, pt.lambda, pt.r_inv2});
        }
        return out;
    }
    }
    throw std::logic_error("unhandled command");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    bool identity_failure = false;
    try {
        const Report rep = build_report(c, err, identity_failure);
        if (c.output.empty()) {
            rep.write(out, c.format);
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << c.output << " for writing\n";
                return kExitFailure;
            }
            rep.write(file, c.format);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return identity_failure ? kExitFailure : kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states, uncertainty products and Fisher information of the tanh^2 well",
                 "ptinfo"};
    app.require_subcommand(1);

    RunConfig c;
    double two_mu = c.params.two_mu();
    std::string format = "csv";
    std::string p2_mode = "identity";

    const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv},
                                                      {"json", OutputFormat::json}};
    const std::map<std::string, P2Mode> modes{{"identity", P2Mode::identity},
                                              {"derivative", P2Mode::derivative}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
        sub->add_option("--rel-tol", c.quadrature.rel_tol, "Quadrature relative tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--order", c.quadrature.order, "Gauss-Legendre points per panel")
            ->check(CLI::Range(1, kMaxRuleOrder))
            ->capture_default_str();
        sub->add_option("--max-panels", c.quadrature.max_panels, "Adaptive panel budget")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--hbar", c.params.hbar, "Action unit")->capture_default_str();
        sub->add_option("--two-mu", two_mu, "Twice the particle mass")->capture_default_str();
        sub->add_option("--d0", c.d0, "Centrifugal approximation constant")
            ->capture_default_str();
    };
    auto physics = [&](CLI::App* sub) {
        sub->add_option("--alpha", c.params.alpha, "Inverse range")->capture_default_str();
        sub->add_option("--n", c.state.n, "Radial quantum number")->capture_default_str();
        sub->add_option("--l", c.state.l, "Orbital quantum number")->capture_default_str();
        sub->add_option("--m", c.state.m, "Magnetic quantum number")->capture_default_str();
        sub->add_option("--p2-mode", p2_mode,
                        "<p^2> used for dp, the products and the Fisher measures")
            ->check(CLI::IsMember({"identity", "derivative"}))
            ->capture_default_str();
    };
    auto fixtures = [&](CLI::App* sub) {
        sub->add_option("--fixtures", c.fixtures, "Directory holding table_NN.csv")
            ->capture_default_str();
        sub->add_option("--d0-start", c.d0_grid.start, "d0 fit grid start")->capture_default_str();
        sub->add_option("--d0-stop", c.d0_grid.stop, "d0 fit grid stop")->capture_default_str();
        sub->add_option("--d0-step", c.d0_grid.step, "d0 fit grid step")->capture_default_str();
    };

    auto* state = app.add_subcommand("state", "Observables for one state");
    common(state);
    physics(state);
    state->add_option("--lambda", c.params.lambda, "Depth parameter")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "One state row per lambda");
    common(sweep);
    physics(sweep);
    sweep->add_option("--start", c.sweep.start, "First lambda")->capture_default_str();
    sweep->add_option("--stop", c.sweep.stop, "Last lambda (inclusive)")->capture_default_str();
    sweep->add_option("--step", c.sweep.step, "lambda step")->capture_default_str();

    auto* table = app.add_subcommand("table", "Recompute a printed table and report deviations");
    common(table);
    fixtures(table);
    table->add_option("id", c.table_id, "Table number")->required()->check(CLI::Range(1, 15));

    auto* validate = app.add_subcommand("validate", "Inter-table identity and bound checks");
    common(validate);
    fixtures(validate);
    bool identities_only = false;
    validate->add_flag("--identities-only", identities_only, "Skip the reproduction summary");

    auto* figure = app.add_subcommand("figure1", "Closed-form <r^-2> against lambda");
    common(figure);
    figure->add_option("--n", c.figure_ns, "Radial quantum numbers")->capture_default_str();
    figure->add_option("--l", c.figure_ls, "Orbital quantum numbers")->capture_default_str();
    figure->add_option("--alpha", c.figure_alpha, "Inverse range")->capture_default_str();
    figure->add_option("--start", c.figure_lambda.start, "First lambda")->capture_default_str();
    figure->add_option("--stop", c.figure_lambda.stop, "Last lambda")->capture_default_str();
    figure->add_option("--step", c.figure_lambda.step, "lambda step")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    c.params.mu = 0.5 * two_mu;
    c.format = formats.at(format);
    c.p2_mode = modes.at(p2_mode);
    c.validate_reproduction = !identities_only;
    if (*state) c.command = Command::state;
    if (*sweep) c.command = Command::sweep;
    if (*table) c.command = Command::table;
    if (*validate) c.command = Command::validate;
    if (*figure) c.command = Command::figure1;
    return run(c, out, err);
}

}  // namespace ptinfo::cli
