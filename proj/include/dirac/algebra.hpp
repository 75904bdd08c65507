#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace dirac {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-14;
inline constexpr double kUnitaryTol = 1e-12;

bool is_hermitian(const Matrix& a, double tol = kHermitianTol);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Pauli matrix sigma^mu, mu in 0..3 (sigma^0 is the identity).
Matrix pauli(int mu);

/// Hadamard gate.
Matrix hadamard();

/// F = R_{pi/2} H, the basis change with F sigma^3 F^dag = sigma^2.
Matrix fgate();

/// Generator matrices (alpha^0, alpha^1, ..., alpha^n) for spatial dimension
/// n in {1,2,3}: hermitian, squaring to the identity, pairwise anticommuting.
/// d = 2 for n <= 2, d = 4 for n = 3. Entries are exact (0, +-1, +-i).
std::vector<Matrix> alpha_set(int n);

/// Kronecker product, |r,l> = |r> (x) |l> with the r index major.
Matrix kron(const Matrix& a, const Matrix& b);

/// exp(-i t A) for hermitian A. Uses the closed form when A^2 is a multiple
/// of the identity, a self-adjoint eigendecomposition otherwise.
Matrix exp_hermitian(const Matrix& a, double t);

}  // namespace dirac
