#include "ptinfo/observables.hpp"

#include <cmath>
#include <numbers>

#include "ptinfo/specfun.hpp"
#include "ptinfo/spectrum.hpp"

namespace ptinfo {

namespace {

QuadratureResult run(const QuadratureOptions& opts, auto&& f) {
    return AdaptiveIntegrator(opts).integrate(f, 0.0, kUpperS);
}

QuadratureResult norm_integral(const WavefunctionSpec& w, const QuadratureOptions& opts) {
    return run(opts, [&](double s) { return density_weight_s(w, s); });
}

QuadratureResult r2_integral(const WavefunctionSpec& w, const QuadratureOptions& opts) {
    const double a2 = w.alpha * w.alpha;
    return run(opts, [&](double s) {
        const double as = std::asinh(std::sqrt(s));
        return as * as * density_weight_s(w, s) / a2;
    });
}

QuadratureResult tanh2_integral(const WavefunctionSpec& w, const QuadratureOptions& opts) {
    return run(opts, [&](double s) { return s / (1.0 + s) * density_weight_s(w, s); });
}

QuadratureResult r_inv2_integral(const WavefunctionSpec& w, const QuadratureOptions& opts) {
    return run(opts, [&](double s) { return polynomial_weight_s(w, s) / (2.0 * w.alpha); });
}

// r^2 R (-R'') dr / N^2 written in s.
QuadratureResult kinetic_integral(const WavefunctionSpec& w, const QuadratureOptions& opts) {
    const double a3 = w.alpha * w.alpha * w.alpha;
    return run(opts, [&](double s) {
        const double as = std::asinh(std::sqrt(s));
        const double P = jacobi_factor(w, s);
        const double h2 = std::exp(2.0 * w.derived.zeta * std::log(s) -
                                   2.0 * w.derived.gamma * std::log1p(s));
        return -as * as * h2 * P * second_derivative_core_s(w, s) / (2.0 * a3);
    });
}

WavefunctionSpec unit_wavefunction(const PotentialParams& p, const QuantumNumbers& q,
                                   const DerivedParams& d) {
    check_admissible(p, q);
    return make_wavefunction(p, q, d, 1.0);
}

double norm_from_integral(double integral) {
    return 1.0 / std::sqrt(4.0 * std::numbers::pi * integral);
}

}  // namespace

const char* to_string(P2Mode mode) noexcept {
    return mode == P2Mode::identity ? "identity" : "derivative";
}

QuadratureResult normalization_integral(const PotentialParams& p, const QuantumNumbers& q,
                                        const DerivedParams& d, const QuadratureOptions& opts) {
    return norm_integral(unit_wavefunction(p, q, d), opts);
}

double normalization_constant(const PotentialParams& p, const QuantumNumbers& q,
                              const DerivedParams& d, const QuadratureOptions& opts) {
    return norm_from_integral(normalization_integral(p, q, d, opts).value);
}

double expect_r2(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d,
                 const QuadratureOptions& opts) {
    const auto w = unit_wavefunction(p, q, d);
    return r2_integral(w, opts).value / norm_integral(w, opts).value;
}

double expect_r2_with_norm(const PotentialParams& p, const QuantumNumbers& q,
                           const DerivedParams& d, double norm, const QuadratureOptions& opts) {
    const auto w = unit_wavefunction(p, q, d);
    return 4.0 * std::numbers::pi * norm * norm * r2_integral(w, opts).value;
}

double expect_tanh2(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d,
                    const QuadratureOptions& opts) {
    const auto w = unit_wavefunction(p, q, d);
    return tanh2_integral(w, opts).value / norm_integral(w, opts).value;
}

double expect_r_inv2_numeric(const PotentialParams& p, const QuantumNumbers& q,
                             const DerivedParams& d, const QuadratureOptions& opts) {
    const auto w = unit_wavefunction(p, q, d);
    return r_inv2_integral(w, opts).value / norm_integral(w, opts).value;
}

double kinetic_identity(const PotentialParams& p, const QuantumNumbers& q,
                        const DerivedParams& d, double r_inv2, double tanh2) {
    const double h2 = p.hbar * p.hbar;
    return p.two_mu() * energy(p, q, d) - h2 * d.Lambda * r_inv2 - h2 * d.beta * tanh2;
}

double expect_p2(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d,
                 P2Mode mode, const QuadratureOptions& opts) {
    const auto w = unit_wavefunction(p, q, d);
    const double norm = norm_integral(w, opts).value;
    if (mode == P2Mode::derivative) {
        return p.hbar * p.hbar * kinetic_integral(w, opts).value / norm;
    }
    // Lambda = 0 drops the centrifugal term; skip its integral.
    const double r_inv2 = d.Lambda == 0.0 ? 0.0 : r_inv2_integral(w, opts).value / norm;
    const double tanh2 = tanh2_integral(w, opts).value / norm;
    return kinetic_identity(p, q, d, r_inv2, tanh2);
}

StateObservables compute_observables(const PotentialParams& p, const QuantumNumbers& q,
                                     const DerivedParams& d, const QuadratureOptions& opts,
                                     P2Mode mode) {
    const auto w = unit_wavefunction(p, q, d);
    const auto norm = norm_integral(w, opts);
    const auto r2 = r2_integral(w, opts);
    const auto tanh2 = tanh2_integral(w, opts);
    const auto r_inv2 = r_inv2_integral(w, opts);
    const auto kin = kinetic_integral(w, opts);

    StateObservables obs;
    obs.energy = energy(p, q, d);
    obs.norm_constant = norm_from_integral(norm.value);
    obs.r2 = r2.value / norm.value;
    obs.tanh2 = tanh2.value / norm.value;
    obs.r_inv2_numeric = r_inv2.value / norm.value;
    obs.r_inv2_hft = r_inverse_squared(p, q, d);
    obs.p2_identity = kinetic_identity(p, q, d, obs.r_inv2_numeric, obs.tanh2);
    obs.p2_derivative = p.hbar * p.hbar * kin.value / norm.value;
    obs.p2_mode = mode;
    obs.p2 = mode == P2Mode::identity ? obs.p2_identity : obs.p2_derivative;
    obs.quadrature_errors = {norm.error_estimate, r2.error_estimate, r_inv2.error_estimate,
                             tanh2.error_estimate, kin.error_estimate};
    return obs;
}

double uncertainty_bound(int l) noexcept {
    const double b = l + 1.5;
    return b * b;
}

bool is_squeezed(double r2) noexcept { return r2 < kSqueezingThreshold; }

UncertaintyReport uncertainty_report(const QuantumNumbers& q, const StateObservables& obs) {
    UncertaintyReport u;
    u.delta_r = std::sqrt(obs.r2);
    u.delta_p = std::sqrt(obs.p2);
    u.product2 = obs.r2 * obs.p2;
    u.bound = uncertainty_bound(q.l);
    u.squeezed = is_squeezed(obs.r2);
    return u;
}

UncertaintyReport uncertainty_report(const PotentialParams& p, const QuantumNumbers& q,
                                     const DerivedParams& d, const QuadratureOptions& opts,
                                     P2Mode mode) {
    return uncertainty_report(q, compute_observables(p, q, d, opts, mode));
}

}  // namespace ptinfo
