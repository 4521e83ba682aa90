#pragma once

#include "ptinfo/model.hpp"

namespace ptinfo {

/// Closed-form level E_{n,l}. The bracket is evaluated term by term without
/// clamping; throws std::domain_error when n exceeds the bound-state range.
double energy(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d);

/// The dimensionless bracket of the level formula, so that 2 mu E = hbar^2 * bracket.
double energy_bracket(const QuantumNumbers& q, const DerivedParams& d) noexcept;

/// Hellmann-Feynman <r^-2> = -2/3 - (n + 1/2 - gamma)/sqrt(zeta).
double r_inverse_squared(const PotentialParams& p, const QuantumNumbers& q,
                         const DerivedParams& d);

}  // namespace ptinfo
