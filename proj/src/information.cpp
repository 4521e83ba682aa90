#include "ptinfo/information.hpp"

#include <cstdlib>

namespace ptinfo {

double fisher_position(const QuantumNumbers& q, const StateObservables& obs) {
    if (q.m == 0) return 4.0 * obs.p2;
    const double m = std::abs(q.m);
    return 4.0 * obs.p2 - 2.0 * (2.0 * q.l + 1.0) * m * obs.r_inv2_hft;
}

double fisher_momentum(const QuantumNumbers& q, const StateObservables& obs) {
    if (q.m != 0) {
        throw UnsupportedConfiguration(
            "momentum-space Fisher information needs <p^-2> for m != 0, which requires the "
            "momentum density; only m = 0 is supported");
    }
    return 4.0 * obs.r2;
}

InformationReport information_report(const QuantumNumbers& q, const StateObservables& obs) {
    InformationReport r;
    r.fisher_rho = fisher_position(q, obs);
    r.fisher_gamma = fisher_momentum(q, obs);
    r.product = r.fisher_rho * r.fisher_gamma;
    r.variance_rho = obs.r2;
    r.cramer_rao = r.fisher_rho * r.variance_rho;
    r.product_satisfied = r.product >= r.product_bound;
    r.cramer_rao_satisfied = r.cramer_rao >= r.cramer_rao_bound;
    return r;
}

}  // namespace ptinfo
