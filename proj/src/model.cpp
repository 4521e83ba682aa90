#include "ptinfo/model.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ptinfo {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void PotentialParams::validate() const {
    if (!positive(lambda)) throw std::domain_error("lambda must be finite and > 0");
    if (!positive(alpha)) throw std::domain_error("alpha must be finite and > 0");
    if (!positive(hbar)) throw std::domain_error("hbar must be finite and > 0");
    if (!positive(mu)) throw std::domain_error("mu must be finite and > 0");
}

void QuantumNumbers::validate() const {
    if (n < 0) throw std::domain_error("n must be non-negative");
    if (l < 0) throw std::domain_error("l must be non-negative");
    if (std::abs(m) > l) throw std::domain_error("|m| must not exceed l");
}

DerivedParams derive_params(const PotentialParams& p, const QuantumNumbers& q, double d0) {
    p.validate();
    q.validate();
    if (!std::isfinite(d0)) throw std::domain_error("d0 must be finite");

    const double a2 = p.alpha * p.alpha;
    const double ll = static_cast<double>(q.l);

    DerivedParams d;
    d.Lambda = a2 * ll * (ll + 1.0);
    d.beta = a2 * p.lambda * (p.lambda + 1.0);
    d.gamma = std::sqrt(1.0 / 16.0 + d.beta / 4.0);
    d.zeta = std::sqrt(1.0 / 16.0 + d.Lambda / 4.0);
    d.d0 = d0;
    return d;
}

double potential_ceiling(const PotentialParams& p) noexcept {
    return p.hbar * p.hbar * p.alpha * p.alpha * p.lambda * (p.lambda + 1.0) / p.two_mu();
}

double potential_value(const PotentialParams& p, double r) noexcept {
    const double t = std::tanh(p.alpha * r);
    return potential_ceiling(p) * t * t;
}

int max_bound_state(const PotentialParams& p) {
    if (!positive(p.lambda)) throw std::domain_error("lambda must be finite and > 0");
    const double fl = std::floor(p.lambda);
    // "largest integer inferior to lambda" is strict for integral lambda
    return static_cast<int>(fl == p.lambda ? fl - 1.0 : fl);
}

void check_admissible(const PotentialParams& p, const QuantumNumbers& q) {
    p.validate();
    q.validate();
    const int nmax = max_bound_state(p);
    if (q.n > nmax) {
        throw std::domain_error("n = " + std::to_string(q.n) + " exceeds the bound-state limit " +
                                std::to_string(nmax) + " for this lambda");
    }
}

}  // namespace ptinfo
