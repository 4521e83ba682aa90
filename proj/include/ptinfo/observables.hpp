#pragma once

#include "ptinfo/model.hpp"
#include "ptinfo/quadrature.hpp"

namespace ptinfo {

/// How <p^2> is obtained.
///   identity:   2 mu E - hbar^2 Lambda <r^-2> - hbar^2 beta <tanh^2(alpha r)>
///   derivative: hbar^2 <R, -R''> under the same r^2 R^2 dr density
enum class P2Mode { identity, derivative };

const char* to_string(P2Mode mode) noexcept;

struct QuadratureErrors {
    double norm = 0.0;
    double r2 = 0.0;
    double r_inv2 = 0.0;
    double tanh2 = 0.0;
    double kinetic = 0.0;
};

/// Expectations are ratios over the radial density r^2 R^2 on s = sinh^2(alpha r) in [0, 1].
struct StateObservables {
    double energy = 0.0;
    double norm_constant = 0.0;  ///< N with 4 pi N^2 * (density integral) = 1
    double r2 = 0.0;
    double tanh2 = 0.0;
    double r_inv2_numeric = 0.0;
    double r_inv2_hft = 0.0;
    double p2_identity = 0.0;
    double p2_derivative = 0.0;
    double p2 = 0.0;  ///< whichever of the two the caller selected
    P2Mode p2_mode = P2Mode::identity;
    QuadratureErrors quadrature_errors;
};

struct UncertaintyReport {
    double mean_r = 0.0;  // zero by symmetry of the well
    double mean_p = 0.0;
    double delta_r = 0.0;
    double delta_p = 0.0;
    double product2 = 0.0;  ///< (dr)^2 (dp)^2 = <r^2><p^2>
    double bound = 0.0;     ///< (l + 3/2)^2
    bool squeezed = false;  ///< (dr)^2 < 0.5
};

inline constexpr double kSqueezingThreshold = 0.5;

/// Upper end of the s-range used by every expectation value.
inline constexpr double kUpperS = 1.0;

/// Integral of density_weight_s over [0, 1].
QuadratureResult normalization_integral(const PotentialParams& p, const QuantumNumbers& q,
                                        const DerivedParams& d,
                                        const QuadratureOptions& opts = {});

double normalization_constant(const PotentialParams& p, const QuantumNumbers& q,
                              const DerivedParams& d, const QuadratureOptions& opts = {});

/// Ratio form, independent of N.
double expect_r2(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d,
                 const QuadratureOptions& opts = {});

/// 4 pi N^2 times the unnormalized <r^2> integral, for a caller-supplied N.
double expect_r2_with_norm(const PotentialParams& p, const QuantumNumbers& q,
                           const DerivedParams& d, double norm,
                           const QuadratureOptions& opts = {});

double expect_tanh2(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d,
                    const QuadratureOptions& opts = {});

double expect_r_inv2_numeric(const PotentialParams& p, const QuantumNumbers& q,
                             const DerivedParams& d, const QuadratureOptions& opts = {});

double expect_p2(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d,
                 P2Mode mode, const QuadratureOptions& opts = {});

/// 2 mu E - hbar^2 Lambda r_inv2 - hbar^2 beta tanh2, with E from the closed form at d.d0.
double kinetic_identity(const PotentialParams& p, const QuantumNumbers& q,
                        const DerivedParams& d, double r_inv2, double tanh2);

/// Every expectation in one pass over the shared normalization integral.
StateObservables compute_observables(const PotentialParams& p, const QuantumNumbers& q,
                                     const DerivedParams& d,
                                     const QuadratureOptions& opts = {},
                                     P2Mode mode = P2Mode::identity);

UncertaintyReport uncertainty_report(const QuantumNumbers& q, const StateObservables& obs);

UncertaintyReport uncertainty_report(const PotentialParams& p, const QuantumNumbers& q,
                                     const DerivedParams& d,
                                     const QuadratureOptions& opts = {},
                                     P2Mode mode = P2Mode::identity);

double uncertainty_bound(int l) noexcept;

bool is_squeezed(double r2) noexcept;

}  // namespace ptinfo
