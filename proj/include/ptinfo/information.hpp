#pragma once

#include <stdexcept>

#include "ptinfo/model.hpp"
#include "ptinfo/observables.hpp"

namespace ptinfo {

/// Raised for inputs the closed-form Fisher identities cannot handle, i.e. m != 0
/// in momentum space where <p^-2> would need the momentum density.
class UnsupportedConfiguration : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr int kSpatialDimension = 3;
inline constexpr double kFisherProductBound = 36.0;
inline constexpr double kCramerRaoBound = kSpatialDimension * kSpatialDimension;

struct InformationReport {
    double fisher_rho = 0.0;    ///< I[rho]
    double fisher_gamma = 0.0;  ///< I[gamma]
    double product = 0.0;       ///< I[rho] I[gamma]
    double product_bound = kFisherProductBound;
    double variance_rho = 0.0;  ///< V[rho] = <r^2> (zero mean)
    double cramer_rao = 0.0;    ///< I[rho] V[rho]
    double cramer_rao_bound = kCramerRaoBound;
    bool product_satisfied = false;
    bool cramer_rao_satisfied = false;
};

/// I[rho] = 4 <p^2> - 2 (2l+1) |m| <r^-2>, with the closed-form <r^-2>.
double fisher_position(const QuantumNumbers& q, const StateObservables& obs);

/// I[gamma] = 4 <r^2> for m = 0; throws UnsupportedConfiguration otherwise.
double fisher_momentum(const QuantumNumbers& q, const StateObservables& obs);

InformationReport information_report(const QuantumNumbers& q, const StateObservables& obs);

}  // namespace ptinfo
