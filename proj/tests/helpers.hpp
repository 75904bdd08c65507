#pragma once

#include <random>

#include "dirac/fields.hpp"
#include "dirac/spectral.hpp"

namespace testutil {

using dirac::Complex;
using dirac::Matrix;

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double matrix_dist(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

/// Independent exponential oracle: Taylor series of exp(-i t A) summed until
/// the term drops below 1e-18, stabilized by argument scaling and repeated
/// squaring so the partial sums never grow.
inline Matrix exp_series_oracle(const Matrix& a, double t) {
    const Eigen::Index d = a.rows();
    const Complex mit{0.0, -1.0};
    double nrm = max_abs(a) * std::abs(t) * static_cast<double>(d);
    int squarings = 0;
    while (nrm > 0.5) {
        nrm *= 0.5;
        ++squarings;
    }
    const Matrix x = mit * (t / std::pow(2.0, squarings)) * a;
    Matrix term = Matrix::Identity(d, d);
    Matrix sum = Matrix::Identity(d, d);
    for (int k = 1; k < 200; ++k) {
        term = (term * x) / static_cast<double>(k);
        sum += term;
        if (max_abs(term) < 1e-18) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Complex(u(rng), u(rng));
    return (m + m.adjoint().eval()) / 2.0;
}

inline dirac::LatticeField random_field(const dirac::GridSpec& g, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    dirac::LatticeField f(g, d);
    for (std::int64_t s = 0; s < g.sites(); ++s)
        for (int c = 0; c < d; ++c) f.values(s, c) = Complex(n(rng), n(rng));
    return dirac::normalized(f);
}

/// Independent cyclic site roll: out(x) = in(x + delta * eps * e_axis),
/// written with plain coordinate arithmetic (no stride tricks) so it can
/// cross-check the walk's shift kernel.
inline dirac::LatticeField roll(const dirac::LatticeField& a, int axis, int delta) {
    dirac::LatticeField out(a.grid, a.spinor_dim());
    const int n = a.grid.points;
    for (std::int64_t s = 0; s < a.grid.sites(); ++s) {
        auto c = a.grid.site_coords(s);
        c[static_cast<std::size_t>(axis)] =
            ((c[static_cast<std::size_t>(axis)] + delta) % n + n) % n;
        out.values.row(s) = a.values.row(a.grid.site_index(c));
    }
    return out;
}

/// Spectral partial derivative along one axis (multiply by i k_j).
inline dirac::LatticeField spectral_derivative(const dirac::LatticeField& a, int axis) {
    dirac::SpectralField hat = dirac::forward_transform(a);
    for (std::int64_t idx = 0; idx < a.grid.sites(); ++idx) {
        const auto coords = a.grid.site_coords(idx);
        const double k = a.grid.momentum_of_index(coords[static_cast<std::size_t>(axis)]);
        hat.coeffs.row(idx) *= Complex(0.0, k);
    }
    return dirac::inverse_transform(hat);
}

inline Eigen::VectorXcd basis_spinor(int d, int b) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(b) = 1.0;
    return v;
}

}  // namespace testutil
