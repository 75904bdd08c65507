#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dirac/fields.hpp"

namespace dirac {

/// Internal-space unitary applied at every site.
struct CoinFactor {
    Matrix u;
    std::string label;
};

/// Spin-conditional translation along one axis: component b moves by
/// steps[b] substep units, each unit being eps/substeps of length. On a grid
/// of spacing h the displacement is an exact cyclic site permutation, so the
/// factor is exactly norm-preserving. Momentum-space symbol:
/// diag_b( e^{-i k_axis * steps[b] * eps/substeps} ).
struct ShiftFactor {
    int axis;
    std::vector<int> steps;
};

using WalkFactor = std::variant<CoinFactor, ShiftFactor>;

/// Ordered product of coins and partial shifts. Factors are stored in
/// product order (leftmost first); application runs right-to-left, i.e. the
/// last factor in the list acts first.
struct WalkOperator {
    int dim;
    int spinor_dim;
    double eps;      // time advanced per application
    int substeps;    // shift quantum is eps/substeps (q of the rational eigenstructure)
    std::vector<WalkFactor> factors;
};

/// Dirac Quantum Walk for n in {1,2,3}:
///   n=1: C T1                      (coin exp(-i eps m sigma^1))
///   n=2: C H T1 H T2               (coin exp(-i eps m sigma^2))
///   n=3: C (IxH) T1 (IxHF) T2 (IxFdag) T3   (coin exp(-i eps m sigma^2 x sigma^0))
WalkOperator build_dirac_walk(int n, double mass, double eps);

/// Walk for i d_t psi = (beta0 - i sum_j beta_j d_j) psi where every beta_j
/// is hermitian with rational eigenvalues numerators[j][i]/q. The caller
/// asserts the rational spectrum; it is checked against a numerical
/// eigensolve to 1e-9. Factors: exp(-i eps beta0) * prod_j U_j T_j U_j^dag,
/// with T_j shifting the U_j eigenbasis by the integer numerators at substep
/// eps/q.
WalkOperator build_general_walk(const Matrix& beta0, const std::vector<Matrix>& betas,
                                const std::vector<std::vector<int>>& numerators, int q,
                                double eps);

/// Concatenation: walks listed in product order (first = leftmost = applied
/// last). All walks must share dim, spinor dimension, eps and substeps.
WalkOperator build_product_walk(const std::vector<WalkOperator>& walks);

/// Reversed factor list with daggered coins and negated shifts.
WalkOperator adjoint(const WalkOperator& w);

/// One application. The field's grid must be aligned: eps/substeps must be
/// an integer multiple of the grid spacing (shifts of a walk built for step
/// eps land on sites of any grid refining it).
LatticeField apply_walk(const WalkOperator& w, const LatticeField& a);

/// l-fold application; l = 0 is the identity.
LatticeField apply_walk_steps(const WalkOperator& w, const LatticeField& a, int l);

/// Momentum-space matrix of the factor list at momentum k.
Matrix symbol_of(const WalkOperator& w, const Eigen::VectorXd& k);

}  // namespace dirac
