#include "dirac/spectral.hpp"

#include <unsupported/Eigen/FFT>
#include <cmath>
#include <stdexcept>

#include "dirac/errors.hpp"
#include "dirac/parallel.hpp"

namespace dirac {

namespace {

const Complex kI{0.0, 1.0};

enum class Direction { Forward, Inverse };

// In-place multidimensional FFT of one component column, axis by axis.
// Forward leaves sum_x a e^{-ikx}; inverse leaves (1/N^n) sum_k b e^{+ikx}.
void fft_all_axes(Eigen::MatrixXcd& data, int col, const GridSpec& g, Direction dir) {
    Eigen::FFT<double> fft;
    const int n = g.points;
    std::vector<Complex> line(static_cast<std::size_t>(n));
    std::vector<Complex> out(static_cast<std::size_t>(n));
    Complex* base = data.col(col).data();
    const std::int64_t total = g.sites();
    for (int axis = 0; axis < g.dim; ++axis) {
        const std::int64_t stride = g.stride(axis);
        const std::int64_t block = stride * n;
        for (std::int64_t high = 0; high < total / block; ++high) {
            for (std::int64_t low = 0; low < stride; ++low) {
                Complex* start = base + high * block + low;
                for (int j = 0; j < n; ++j) line[static_cast<std::size_t>(j)] = start[j * stride];
                if (dir == Direction::Forward)
                    fft.fwd(out, line);
                else
                    fft.inv(out, line);
                for (int j = 0; j < n; ++j) start[j * stride] = out[static_cast<std::size_t>(j)];
            }
        }
    }
}

double pow_half_n(const GridSpec& g) {
    return std::pow(static_cast<double>(g.points), 0.5 * g.dim);
}

int expected_spinor_dim(int n) { return n == 3 ? 4 : 2; }

}  // namespace

SpectralField forward_transform(const LatticeField& a) {
    SpectralField out{a.grid, a.values};
    for (int c = 0; c < a.spinor_dim(); ++c)
        fft_all_axes(out.coeffs, c, a.grid, Direction::Forward);
    out.coeffs /= pow_half_n(a.grid);
    return out;
}

LatticeField inverse_transform(const SpectralField& b) {
    LatticeField out(b.grid, static_cast<int>(b.coeffs.cols()));
    out.values = b.coeffs;
    for (int c = 0; c < out.spinor_dim(); ++c)
        fft_all_axes(out.values, c, b.grid, Direction::Inverse);
    out.values *= pow_half_n(b.grid);
    return out;
}

double gamma(const Eigen::VectorXd& k, double mass) {
    return std::sqrt(mass * mass + k.squaredNorm());
}

Matrix dirac_symbol(const Eigen::VectorXd& k, double mass, int n) {
    const auto alphas = alpha_set(n);
    if (k.size() != n) throw std::invalid_argument("dirac_symbol: momentum dimension mismatch");
    Matrix d = mass * alphas[0];
    for (int j = 0; j < n; ++j) d += k(j) * alphas[static_cast<std::size_t>(j) + 1];
    return d;
}

std::vector<Matrix> a_symbols(const Eigen::VectorXd& k, double mass, int n) {
    const auto alphas = alpha_set(n);
    if (k.size() != n) throw std::invalid_argument("a_symbols: momentum dimension mismatch");
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(mass * alphas[0]);
    for (int j = 0; j < n; ++j) out.push_back(k(j) * alphas[static_cast<std::size_t>(j) + 1]);
    return out;
}

Matrix evolution_symbol(const Eigen::VectorXd& k, double mass, int n, double t) {
    const double g = gamma(k, mass);
    const int d = expected_spinor_dim(n);
    if (g == 0.0) return Matrix::Identity(d, d);
    return std::cos(g * t) * Matrix::Identity(d, d) -
           kI * (std::sin(g * t) / g) * dirac_symbol(k, mass, n);
}

LatticeField exact_evolve(const LatticeField& a, double t, double mass) {
    const int n = a.grid.dim;
    const int d = expected_spinor_dim(n);
    if (a.spinor_dim() != d)
        throw ContractViolation("exact_evolve: spinor dimension does not match the dimension's alpha set");

    const auto alphas = alpha_set(n);
    SpectralField hat = forward_transform(a);
    const std::int64_t modes = a.grid.sites();
    parallel_for(modes, [&](std::int64_t lo, std::int64_t hi) {
        Matrix dsym(d, d), evo(d, d);
        const Matrix id = Matrix::Identity(d, d);
        Eigen::VectorXcd spinor(d);
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            const auto coords = a.grid.site_coords(idx);
            dsym = mass * alphas[0];
            double k2 = 0.0;
            for (int ax = 0; ax < n; ++ax) {
                const double k = a.grid.momentum_of_index(coords[static_cast<std::size_t>(ax)]);
                dsym += k * alphas[static_cast<std::size_t>(ax) + 1];
                k2 += k * k;
            }
            const double g = std::sqrt(mass * mass + k2);
            if (g == 0.0)
                evo = id;
            else
                evo = std::cos(g * t) * id - kI * (std::sin(g * t) / g) * dsym;
            spinor = hat.coeffs.row(idx).transpose();
            hat.coeffs.row(idx) = (evo * spinor).transpose();
        }
    });
    return inverse_transform(hat);
}

Matrix walk_symbol(const Eigen::VectorXd& k, double mass, int n, double eps) {
    const auto as = a_symbols(k, mass, n);
    Matrix w = exp_hermitian(as[0], eps);
    for (std::size_t mu = 1; mu < as.size(); ++mu) w *= exp_hermitian(as[mu], eps);
    return w;
}

Eigen::VectorXd momentum_at(const GridSpec& grid, std::int64_t idx) {
    const auto coords = grid.site_coords(idx);
    Eigen::VectorXd k(grid.dim);
    for (int ax = 0; ax < grid.dim; ++ax)
        k(ax) = grid.momentum_of_index(coords[static_cast<std::size_t>(ax)]);
    return k;
}

}  // namespace dirac
