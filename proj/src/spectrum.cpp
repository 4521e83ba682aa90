#include "ptinfo/spectrum.hpp"

#include <cmath>

namespace ptinfo {

double energy_bracket(const QuantumNumbers& q, const DerivedParams& d) noexcept {
    const double n = q.n;
    const double g = d.gamma;
    const double z = d.zeta;
    return 4.0 * d.d0 * d.Lambda - 4.0 * n * n - 4.0 * n + 8.0 * n * g + 4.0 * g - 8.0 * n * z -
           4.0 * z - 1.5 - d.Lambda + 8.0 * g * z;
}

double energy(const PotentialParams& p, const QuantumNumbers& q, const DerivedParams& d) {
    check_admissible(p, q);
    return p.hbar * p.hbar / p.two_mu() * energy_bracket(q, d);
}

double r_inverse_squared(const PotentialParams& p, const QuantumNumbers& q,
                         const DerivedParams& d) {
    check_admissible(p, q);
    const double rz = std::sqrt(d.zeta);
    return -2.0 / 3.0 - q.n / rz - 1.0 / (2.0 * rz) + d.gamma / rz;
}

}  // namespace ptinfo
