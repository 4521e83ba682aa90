#include "ptinfo/evaluation.hpp"

#include <cmath>
#include <stdexcept>

#include "ptinfo/spectrum.hpp"

namespace ptinfo {

StateEvaluation evaluate_state(const PotentialParams& p, const QuantumNumbers& q, double d0,
                               const QuadratureOptions& opts, P2Mode mode) {
    StateEvaluation ev;
    ev.params = p;
    ev.q = q;
    ev.derived = derive_params(p, q, d0);
    ev.obs = compute_observables(p, q, ev.derived, opts, mode);
    ev.uncertainty = uncertainty_report(q, ev.obs);
    if (q.m == 0) ev.information = information_report(q, ev.obs);
    return ev;
}

std::vector<double> linear_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid step must be > 0");
    if (!(stop >= start)) throw std::invalid_argument("grid stop must not be below start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

std::vector<Figure1Point> figure1_series(const std::vector<int>& ns, const std::vector<int>& ls,
                                         double alpha, const std::vector<double>& lambdas,
                                         double hbar, double mu) {
    std::vector<Figure1Point> out;
    for (int n : ns) {
        for (int l : ls) {
            for (double lam : lambdas) {
                const PotentialParams p{lam, alpha, hbar, mu};
                const QuantumNumbers q{n, l, 0};
                if (n > max_bound_state(p)) continue;
                out.push_back({n, l, lam, r_inverse_squared(p, q, derive_params(p, q))});
            }
        }
    }
    return out;
}

}  // namespace ptinfo
