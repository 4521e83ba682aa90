#pragma once

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptinfo {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    int panels = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int order = 32;         ///< Gauss-Legendre points per panel
    int max_panels = 2000;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] int order() const noexcept { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxRuleOrder = 512;

/// Throws std::invalid_argument for order outside [1, 512].
GaussLegendreRule gauss_legendre_rule(int order);

/// Globally adaptive bisection over fixed-order Gauss-Legendre panels. A panel's
/// error is the difference between the rule applied to the whole panel and to its
/// two halves; the panel with the largest error is split until the summed error
/// meets rel_tol * |value| + abs_tol. Nodes are interior, so endpoints are never
/// sampled. Deterministic: the final sum runs over panels in left-to-right order.
class AdaptiveIntegrator {
public:
    explicit AdaptiveIntegrator(QuadratureOptions opts = {});

    [[nodiscard]] const QuadratureOptions& options() const noexcept { return opts_; }
    [[nodiscard]] const GaussLegendreRule& rule() const noexcept { return rule_; }

    template <class F>
    QuadratureResult integrate(F&& f, double a, double b) const;

private:
    struct Panel {
        double lo, hi;
        double left, right;  // rule values on the two halves
        double value, error;
        bool operator<(const Panel& o) const { return error < o.error; }
    };

    template <class F>
    double apply(F& f, double lo, double hi, std::int64_t& evals) const;

    template <class F>
    Panel refine(F& f, double lo, double hi, double coarse, std::int64_t& evals) const;

    QuadratureOptions opts_;
    GaussLegendreRule rule_;
};

template <class F>
double AdaptiveIntegrator::apply(F& f, double lo, double hi, std::int64_t& evals) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
        const double fx = f(mid + half * rule_.nodes[i]);
        if (!std::isfinite(fx)) {
            throw QuadratureError("integrand is not finite at x = " +
                                  std::to_string(mid + half * rule_.nodes[i]));
        }
        sum += rule_.weights[i] * fx;
    }
    evals += static_cast<std::int64_t>(rule_.nodes.size());
    return half * sum;
}

template <class F>
auto AdaptiveIntegrator::refine(F& f, double lo, double hi, double coarse,
                                std::int64_t& evals) const -> Panel {
    const double mid = 0.5 * (lo + hi);
    Panel p{lo, hi, apply(f, lo, mid, evals), apply(f, mid, hi, evals), 0.0, 0.0};
    p.value = p.left + p.right;
    p.error = std::abs(p.value - coarse);
    return p;
}

template <class F>
QuadratureResult AdaptiveIntegrator::integrate(F&& f, double a, double b) const {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("integration requires finite a < b");
    }
    std::int64_t evals = 0;
    std::priority_queue<Panel> heap;
    heap.push(refine(f, a, b, apply(f, a, b, evals), evals));
    double total = heap.top().value;
    double err = heap.top().error;

    auto converged = [&] { return err <= opts_.rel_tol * std::abs(total) + opts_.abs_tol; };
    while (!converged()) {
        if (static_cast<int>(heap.size()) + 1 > opts_.max_panels) {
            throw QuadratureError("adaptive quadrature did not converge within " +
                                  std::to_string(opts_.max_panels) + " panels (estimate " +
                                  std::to_string(total) + ", error " + std::to_string(err) +
                                  ")");
        }
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel l = refine(f, worst.lo, mid, worst.left, evals);
        const Panel r = refine(f, mid, worst.hi, worst.right, evals);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
    }

    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.lo < y.lo; });

    QuadratureResult res;
    for (const auto& p : panels) {
        res.value += p.value;
        res.error_estimate += p.error;
    }
    res.evaluations = evals;
    res.panels = static_cast<int>(panels.size());
    return res;
}

/// One-shot convenience wrapper with default panel order and panel budget.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    return AdaptiveIntegrator(opts).integrate(std::forward<F>(f), a, b);
}

}  // namespace ptinfo
