#pragma once

#include <cstdint>

namespace ptinfo {

/// Physical inputs of the tanh^2 well V(r) = hbar^2 alpha^2 lambda(lambda+1)/(2 mu) tanh^2(alpha r).
/// The defaults are the hbar = 2 mu = 1, alpha = 1 unit convention.
struct PotentialParams {
    double lambda = 1.0;  ///< depth parameter, > 0
    double alpha = 1.0;   ///< inverse range, > 0
    double hbar = 1.0;
    double mu = 0.5;

    /// Throws std::domain_error unless every field is finite and strictly positive.
    void validate() const;

    [[nodiscard]] double two_mu() const noexcept { return 2.0 * mu; }
};

struct QuantumNumbers {
    int n = 0;
    int l = 0;
    int m = 0;

    /// Throws std::domain_error for n < 0, l < 0 or |m| > l.
    void validate() const;
};

/// Conventional Pekeris-type centrifugal constant used when none is supplied.
inline constexpr double kDefaultD0 = 1.0 / 12.0;

struct DerivedParams {
    double Lambda = 0.0;  // alpha^2 l(l+1)
    double beta = 0.0;    // alpha^2 lambda(lambda+1)
    double gamma = 0.25;  // sqrt(1/16 + beta/4)
    double zeta = 0.25;   // sqrt(1/16 + Lambda/4)
    double d0 = kDefaultD0;
};

DerivedParams derive_params(const PotentialParams& p, const QuantumNumbers& q,
                            double d0 = kDefaultD0);

/// hbar^2 alpha^2 lambda(lambda+1)/(2 mu) * tanh^2(alpha r); defined for every real r.
double potential_value(const PotentialParams& p, double r) noexcept;

/// Asymptotic height of the well, the supremum of potential_value.
double potential_ceiling(const PotentialParams& p) noexcept;

/// Largest integer strictly below lambda. Throws std::domain_error for lambda <= 0.
int max_bound_state(const PotentialParams& p);

/// p, q valid and q.n within the bound-state range. Throws std::domain_error otherwise.
void check_admissible(const PotentialParams& p, const QuantumNumbers& q);

}  // namespace ptinfo
