#pragma once

#include <utility>
#include <vector>

#include "dirac/sampling.hpp"
#include "dirac/walk.hpp"

namespace dirac {

inline double consistency_constant(int n) { return 1.0 + 0.5 * n; }
inline constexpr double kLowPassConstant = 0.10132118364233778;  // pi^-2
inline constexpr double kBoundSlack = 1e-9;

struct ConsistencyResult {
    double error;
    double bound;
};

/// Single-step error ||W phi - T(eps) phi||_{H^s} and its guarantee
/// eps^2 (1 + n/2) ||phi||_{H^{s+2}}. Throws BoundViolation if the
/// measurement exceeds the guarantee beyond relative slack 1e-9.
ConsistencyResult consistency_error(const LatticeField& phi, double mass, double eps, double s);

/// ||W phi||_{H^s} / ||phi||_{H^s}; must sit within 1e-11 of one.
double stability_check(const LatticeField& phi, double mass, double eps, double s);

struct ConvergenceRow {
    int l;
    double eps;
    double error;
    double bound;
    bool in_fit;  // false for pre-asymptotic rows excluded from the regression
};

struct ConvergenceReport {
    int dim;
    double mass;
    double x0;
    double s;
    double c;        // 1 + n/2
    double c_prime;  // pi^-2
    std::vector<ConvergenceRow> rows;
    double fitted_order;  // NaN when every error is at rounding level
};

/// Runs the walk for each step count l at eps_l = x0/l and compares with the
/// exact evolution at time x0 in H^s. The master state is band-limited to
/// the coarsest grid and spectrally resampled so all rows share the same
/// initial condition. Requires the master period L = rho * x0 with rho a
/// positive integer and each rho*l even and at most the master grid size.
ConvergenceReport convergence_study(const LatticeField& master, double mass, double x0,
                                    const std::vector<int>& l_list, double s);

/// Probability sin^2(theta) of a measurement distinguishing two unit states.
double observation_probability(const LatticeField& a, const LatticeField& b);

struct EndToEndResult {
    double error;
    double bound;
    double identity_residual;  // || Reconstruct(W^l Discretize(phi)) - W^l(phi_LP) ||_2
};

/// Full pipeline Discretize -> l walk steps -> Reconstruct against the exact
/// evolution of the fine-grid state, with the guarantee
/// eps^2 (l C + C') ||phi||_{H^{s+2}} and the exactness of the intermediate
/// identity checked to 1e-11.
EndToEndResult end_to_end_error(const LatticeField& phi_fine, double mass, double x0, int l,
                                double s);

/// Least-squares slope of log(error) against log(eps).
double fit_order(const std::vector<std::pair<double, double>>& points);

}  // namespace dirac
