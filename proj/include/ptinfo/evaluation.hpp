#pragma once

#include <optional>
#include <vector>

#include "ptinfo/information.hpp"
#include "ptinfo/model.hpp"
#include "ptinfo/observables.hpp"

namespace ptinfo {

/// Everything reported for one (lambda, n, l) state.
struct StateEvaluation {
    PotentialParams params;
    QuantumNumbers q;
    DerivedParams derived;
    StateObservables obs;
    UncertaintyReport uncertainty;
    std::optional<InformationReport> information;  // empty when m != 0
};

StateEvaluation evaluate_state(const PotentialParams& p, const QuantumNumbers& q,
                               double d0 = kDefaultD0, const QuadratureOptions& opts = {},
                               P2Mode mode = P2Mode::identity);

/// Closed grid start, start+step, ..., stop built from integer indices so the end
/// point survives floating-point step drift. Throws std::invalid_argument for
/// step <= 0 or stop < start.
std::vector<double> linear_grid(double start, double stop, double step);

struct Figure1Point {
    int n;
    int l;
    double lambda;
    double r_inv2;
};

/// Closed-form <r^-2> against lambda for every (n, l) pair; pairs whose n is not
/// bound at a given lambda are skipped.
std::vector<Figure1Point> figure1_series(const std::vector<int>& ns, const std::vector<int>& ls,
                                         double alpha, const std::vector<double>& lambdas,
                                         double hbar = 1.0, double mu = 0.5);

}  // namespace ptinfo
