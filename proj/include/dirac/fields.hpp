#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "dirac/algebra.hpp"

namespace dirac {

/// Cubic periodic lattice: N sites per axis (N even), spacing eps,
/// period L = N*eps. Momentum grid per axis: k = (2*pi/L) * w with
/// w in {-N/2, ..., N/2 - 1} in standard FFT layout.
struct GridSpec {
    int dim;
    int points;
    double spacing;

    GridSpec(int n, int points_per_axis, double eps);

    double period() const { return points * spacing; }
    std::int64_t sites() const;

    /// FFT index (0..N-1) -> signed mode number w in [-N/2, N/2).
    int mode_of_index(int j) const { return j < points / 2 ? j : j - points; }
    /// FFT index -> momentum component (2*pi/L)*w.
    double momentum_of_index(int j) const;

    /// Axis stride in the flat site ordering (axis 0 fastest).
    std::int64_t stride(int axis) const;
    std::int64_t site_index(const std::array<int, 3>& coords) const;
    std::array<int, 3> site_coords(std::int64_t flat) const;

    bool operator==(const GridSpec& o) const;
};

/// Spinor-valued wavefunction on a periodic lattice. values(s, c) is the
/// amplitude of spinor component c at flat site s; each component is a
/// contiguous column. l2 norms carry the eps^n site measure, mirroring the
/// continuum L^2 norm.
struct LatticeField {
    GridSpec grid;
    Eigen::MatrixXcd values;  // sites x d

    LatticeField(GridSpec g, int spinor_dim);
    int spinor_dim() const { return static_cast<int>(values.cols()); }
};

LatticeField operator+(const LatticeField& a, const LatticeField& b);
LatticeField operator-(const LatticeField& a, const LatticeField& b);
LatticeField operator*(Complex c, const LatticeField& a);

/// eps^n-weighted inner product, conjugate-linear in the first argument.
Complex inner_product(const LatticeField& a, const LatticeField& b);

double l2_norm(const LatticeField& a);

/// Returns a copy scaled to unit l2 norm.
LatticeField normalized(const LatticeField& a);

/// Discrete Sobolev norm: sqrt( eps^n * sum_k (1+m^2+|k|^2)^s |a_hat(k)|^2 )
/// with a_hat the unitary transform of a. s = 0 reproduces l2_norm.
double sobolev_norm(const LatticeField& a, double s, double mass);

/// Periodized Gaussian envelope times a plane-wave carrier times a fixed
/// spinor, normalized. The carrier is snapped to the momentum grid so the
/// state is exactly periodic.
LatticeField gaussian_state(const GridSpec& grid, double width,
                            const Eigen::VectorXd& center,
                            const Eigen::VectorXd& carrier,
                            const Eigen::VectorXcd& spinor);

/// Normalized lattice plane wave with momentum (2*pi/L)*mode.
LatticeField plane_wave_state(const GridSpec& grid,
                              const std::vector<int>& mode,
                              const Eigen::VectorXcd& spinor);

/// Deterministic pairwise (tree) sum in a fixed traversal order.
double pairwise_sum(const double* xs, std::int64_t n);

}  // namespace dirac
