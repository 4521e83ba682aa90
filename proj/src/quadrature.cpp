#include "ptinfo/quadrature.hpp"

#include <numbers>

namespace ptinfo {

GaussLegendreRule gauss_legendre_rule(int order) {
    if (order < 1 || order > kMaxRuleOrder) {
        throw std::invalid_argument("Gauss-Legendre order must lie in [1, " +
                                    std::to_string(kMaxRuleOrder) + "], got " +
                                    std::to_string(order));
    }
    const int n = order;
    GaussLegendreRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    // Newton on P_n from the Tricomi initial guess; roots come in +/- pairs.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // refresh the derivative at the converged root
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

AdaptiveIntegrator::AdaptiveIntegrator(QuadratureOptions opts)
    : opts_(opts), rule_(gauss_legendre_rule(opts.order)) {
    if (!(opts_.rel_tol >= 0.0) || !(opts_.abs_tol >= 0.0)) {
        throw std::invalid_argument("quadrature tolerances must be non-negative");
    }
    if (opts_.max_panels < 1) throw std::invalid_argument("max_panels must be >= 1");
}

}  // namespace ptinfo
