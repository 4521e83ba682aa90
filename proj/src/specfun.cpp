#include "ptinfo/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptinfo {

namespace {

// Generalized binomial coefficient C(z, j) for integer j >= 0.
double binomial(double z, int j) {
    double c = 1.0;
    for (int i = 1; i <= j; ++i) c *= (z - j + i) / i;
    return c;
}

bool near_zero(double v, double scale) { return std::abs(v) <= 1e-9 * std::max(1.0, scale); }

void require_finite(double v) {
    if (!std::isfinite(v)) throw std::overflow_error("Jacobi evaluation overflowed");
}

}  // namespace

double jacobi_explicit_sum(const JacobiParams& jp) {
    if (jp.n < 0) throw std::domain_error("Jacobi degree must be non-negative");
    const int n = jp.n;
    const double lo = 0.5 * (jp.x - 1.0);
    const double hi = 0.5 * (jp.x + 1.0);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double term = binomial(n + jp.a, n - k) * binomial(n + jp.b, k) *
                            std::pow(lo, k) * std::pow(hi, n - k);
        sum += term;
    }
    require_finite(sum);
    return sum;
}

double jacobi(const JacobiParams& jp) {
    if (jp.n < 0) throw std::domain_error("Jacobi degree must be non-negative");
    const double a = jp.a;
    const double b = jp.b;
    const double x = jp.x;
    if (jp.n == 0) return 1.0;

    double prev = 1.0;
    double cur = 0.5 * (a - b) + (1.0 + 0.5 * (a + b)) * x;
    require_finite(cur);

    const double scale = std::abs(a) + std::abs(b);
    for (int q = 2; q <= jp.n; ++q) {
        const double c = 2.0 * q + a + b;
        if (near_zero(q + a + b, scale + q) || near_zero(c - 2.0, scale + q)) {
            return jacobi_explicit_sum(jp);
        }
        const double lead = 2.0 * q * (q + a + b) * (c - 2.0);
        const double next = ((c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * cur -
                             2.0 * (q + a - 1.0) * (q + b - 1.0) * c * prev) /
                            lead;
        require_finite(next);
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_derivative(const JacobiParams& jp, int k) {
    if (k < 0) throw std::domain_error("derivative order must be non-negative");
    if (jp.n < 0) throw std::domain_error("Jacobi degree must be non-negative");
    if (k > jp.n) return 0.0;
    double factor = 1.0;
    for (int i = 1; i <= k; ++i) factor *= 0.5 * (jp.n + jp.a + jp.b + i);
    return factor * jacobi({jp.n - k, jp.a + k, jp.b + k, jp.x});
}

WavefunctionSpec make_wavefunction(const PotentialParams& p, const QuantumNumbers& q,
                                   const DerivedParams& d, double norm) {
    if (!(std::isfinite(norm) && norm > 0.0)) {
        throw std::domain_error("normalization constant must be finite and > 0");
    }
    return WavefunctionSpec{d, q, p.alpha, norm};
}

double s_of_r(double alpha, double r) noexcept {
    const double sh = std::sinh(alpha * r);
    return sh * sh;
}

double r_of_s(double alpha, double s) noexcept { return std::asinh(std::sqrt(s)) / alpha; }

double jacobi_factor(const WavefunctionSpec& w, double s) {
    return jacobi({w.q.n, 2.0 * w.derived.zeta, -2.0 * w.derived.gamma, 1.0 + 2.0 * s});
}

double radial_wavefunction(const WavefunctionSpec& w, double r) {
    const double s = s_of_r(w.alpha, r);
    const double ea = 0.25 + w.derived.zeta;
    const double eb = 0.25 - w.derived.gamma;
    if (s == 0.0) return 0.0;
    return w.norm * std::exp(ea * std::log(s) + eb * std::log1p(s)) * jacobi_factor(w, s);
}

double second_derivative_core_s(const WavefunctionSpec& w, double s) {
    const double a = 0.25 + w.derived.zeta;
    const double b = 0.25 - w.derived.gamma;
    const JacobiParams jp{w.q.n, 2.0 * w.derived.zeta, -2.0 * w.derived.gamma, 1.0 + 2.0 * s};
    const double P = jacobi(jp);
    const double dP = jacobi_derivative(jp, 1);
    const double d2P = jacobi_derivative(jp, 2);

    // R = h(s) P(1+2s), h = s^a (1+s)^b; d/ds acting on P brings a factor 2.
    // R'' = f''(s) (ds/dr)^2 + f'(s) d^2s/dr^2 with (ds/dr)^2 = 4 alpha^2 s(1+s),
    // d^2s/dr^2 = 2 alpha^2 (1+2s). The a-dependent 1/s pieces are combined
    // so that the l = 0 case (a = 1/2) carries no 1/s term at all.
    const double s1 = 1.0 + s;
    const double c_p = (4.0 * a * a - 2.0 * a) / s + 4.0 * a * a + 8.0 * a * b +
                       4.0 * (b * b - b) * s / s1 + 2.0 * b * (1.0 + 2.0 * s) / s1;
    const double c_dp = 16.0 * (a * s1 + b * s) + 4.0 * (1.0 + 2.0 * s);
    const double c_d2p = 16.0 * s * s1;
    return w.alpha * w.alpha * (c_p * P + c_dp * dP + c_d2p * d2P);
}

double radial_second_derivative(const WavefunctionSpec& w, double r) {
    const double s = s_of_r(w.alpha, r);
    if (s == 0.0) throw std::domain_error("second derivative is evaluated on r > 0 only");
    const double a = 0.25 + w.derived.zeta;
    const double b = 0.25 - w.derived.gamma;
    return w.norm * std::exp(a * std::log(s) + b * std::log1p(s)) * second_derivative_core_s(w, s);
}

double polynomial_weight_s(const WavefunctionSpec& w, double s) {
    if (s <= 0.0) return 0.0;
    const double P = jacobi_factor(w, s);
    return std::exp(2.0 * w.derived.zeta * std::log(s) - 2.0 * w.derived.gamma * std::log1p(s)) *
           P * P;
}

double density_weight_s(const WavefunctionSpec& w, double s) {
    const double as = std::asinh(std::sqrt(s));
    return as * as * polynomial_weight_s(w, s) / (2.0 * w.alpha * w.alpha * w.alpha);
}

}  // namespace ptinfo
