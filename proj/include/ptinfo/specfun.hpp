#pragma once

#include "ptinfo/model.hpp"

namespace ptinfo {

struct JacobiParams {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    double x = 0.0;
};

/// P_n^{(a,b)}(x) by the three-term recurrence in n. Valid for arbitrary real a, b
/// and any real x; parameter combinations where the recurrence divides by zero are
/// routed to jacobi_explicit_sum. Throws std::domain_error for n < 0 and
/// std::overflow_error if an intermediate value is not finite.
double jacobi(const JacobiParams& jp);

/// Finite binomial-sum form
///   sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k)
/// with generalized binomial coefficients.
double jacobi_explicit_sum(const JacobiParams& jp);

/// k-th derivative in x (k = 0, 1, 2, ...), via d/dx P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}.
double jacobi_derivative(const JacobiParams& jp, int k);

/// Radial state R(r) = N s^{1/4+zeta} (1+s)^{1/4-gamma} P_n^{(2 zeta, -2 gamma)}(1+2s), s = sinh^2(alpha r).
struct WavefunctionSpec {
    DerivedParams derived;
    QuantumNumbers q;
    double alpha = 1.0;
    double norm = 1.0;  ///< N, finite and > 0
};

WavefunctionSpec make_wavefunction(const PotentialParams& p, const QuantumNumbers& q,
                                   const DerivedParams& d, double norm = 1.0);

/// s = sinh^2(alpha r) and its inverse r = arcsinh(sqrt(s))/alpha.
double s_of_r(double alpha, double r) noexcept;
double r_of_s(double alpha, double s) noexcept;

/// The Jacobi factor P_n^{(2 zeta, -2 gamma)}(1 + 2s).
double jacobi_factor(const WavefunctionSpec& w, double s);

double radial_wavefunction(const WavefunctionSpec& w, double r);

/// d^2 R / dr^2 at r, by the chain rule through s and analytic Jacobi derivatives.
double radial_second_derivative(const WavefunctionSpec& w, double r);

/// R''(r(s)) / (N s^{1/4+zeta} (1+s)^{1/4-gamma}). Finite on (0, 1]; behaves like
/// alpha^2 Lambda P / s as s -> 0.
double second_derivative_core_s(const WavefunctionSpec& w, double s);

/// s^{2 zeta} (1+s)^{-2 gamma} P^2, the polynomial-weight part shared by all s-integrands.
double polynomial_weight_s(const WavefunctionSpec& w, double s);

/// Unnormalized radial probability weight in s: r^2 R^2 dr / (N^2 ds)
///   = (arcsinh sqrt s)^2 s^{2 zeta} (1+s)^{-2 gamma} P^2 / (2 alpha^3).
double density_weight_s(const WavefunctionSpec& w, double s);

}  // namespace ptinfo
