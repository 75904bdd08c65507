#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dirac/fields.hpp"

namespace dirac {

// Sign conventions, fixed once for the whole project:
//   forward(a)(k)  = N^{-n/2} sum_x a(x) e^{-i k.x}
//   inverse(b)(x)  = N^{-n/2} sum_k b(k) e^{+i k.x}
// so translating a field by +eps along axis j multiplies mode k by
// e^{+i k_j eps}. Momentum ordering is the standard FFT layout; every symbol
// evaluation goes through GridSpec::momentum_of_index.

/// Momentum-space counterpart of a LatticeField; coeffs(idx, c) is the
/// amplitude of mode idx (FFT layout, flattened like site indices).
struct SpectralField {
    GridSpec grid;
    Eigen::MatrixXcd coeffs;  // modes x d
};

SpectralField forward_transform(const LatticeField& a);
LatticeField inverse_transform(const SpectralField& b);

/// Relativistic dispersion sqrt(m^2 + |k|^2).
double gamma(const Eigen::VectorXd& k, double mass);

/// D_hat(k) = m alpha^0 + sum_j k_j alpha^j, hermitian with eigenvalues
/// +-gamma(k, m).
Matrix dirac_symbol(const Eigen::VectorXd& k, double mass, int n);

/// Split generators (A_0, ..., A_n): A_0 = m alpha^0, A_j = k_j alpha^j.
/// They sum to dirac_symbol(k, m, n).
std::vector<Matrix> a_symbols(const Eigen::VectorXd& k, double mass, int n);

/// Per-mode evolution matrix exp(-i t D_hat(k)) in closed form
/// (D_hat^2 = gamma^2 Id); the gamma = 0 mode maps to the identity.
Matrix evolution_symbol(const Eigen::VectorXd& k, double mass, int n, double t);

/// Exact solution operator: multiplies each momentum mode by
/// exp(-i t D_hat(k)).
LatticeField exact_evolve(const LatticeField& a, double t, double mass);

/// Walk symbol W_hat(k) = prod_mu exp(-i eps A_mu), mu = 0..n in product
/// order (mu = 0 leftmost), matching the position-space factor order.
Matrix walk_symbol(const Eigen::VectorXd& k, double mass, int n, double eps);

/// Momentum vector of a flattened mode index.
Eigen::VectorXd momentum_at(const GridSpec& grid, std::int64_t idx);

}  // namespace dirac
