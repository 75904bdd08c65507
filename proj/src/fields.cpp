#include "dirac/fields.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "dirac/errors.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

GridSpec::GridSpec(int n, int points_per_axis, double eps)
    : dim(n), points(points_per_axis), spacing(eps) {
    if (n < 1 || n > 3) throw std::invalid_argument("GridSpec: dimension must be 1, 2 or 3");
    if (points_per_axis <= 0 || points_per_axis % 2 != 0)
        throw std::invalid_argument("GridSpec: points per axis must be a positive even integer");
    if (!(eps > 0.0)) throw std::invalid_argument("GridSpec: spacing must be positive");
}

std::int64_t GridSpec::sites() const {
    std::int64_t s = 1;
    for (int a = 0; a < dim; ++a) s *= points;
    return s;
}

double GridSpec::momentum_of_index(int j) const {
    return 2.0 * std::numbers::pi / period() * mode_of_index(j);
}

std::int64_t GridSpec::stride(int axis) const {
    std::int64_t s = 1;
    for (int a = 0; a < axis; ++a) s *= points;
    return s;
}

std::int64_t GridSpec::site_index(const std::array<int, 3>& coords) const {
    std::int64_t flat = 0;
    for (int a = dim - 1; a >= 0; --a) flat = flat * points + coords[a];
    return flat;
}

std::array<int, 3> GridSpec::site_coords(std::int64_t flat) const {
    std::array<int, 3> c{0, 0, 0};
    for (int a = 0; a < dim; ++a) {
        c[a] = static_cast<int>(flat % points);
        flat /= points;
    }
    return c;
}

bool GridSpec::operator==(const GridSpec& o) const {
    return dim == o.dim && points == o.points && spacing == o.spacing;
}

LatticeField::LatticeField(GridSpec g, int spinor_dim)
    : grid(g), values(Eigen::MatrixXcd::Zero(g.sites(), spinor_dim)) {
    if (spinor_dim < 1) throw std::invalid_argument("LatticeField: spinor dimension must be >= 1");
}

double pairwise_sum(const double* xs, std::int64_t n) {
    if (n <= 32) {
        double acc = 0.0;
        for (std::int64_t i = 0; i < n; ++i) acc += xs[i];
        return acc;
    }
    const std::int64_t half = n / 2;
    return pairwise_sum(xs, half) + pairwise_sum(xs + half, n - half);
}

namespace {

double measure(const GridSpec& g) {
    double w = 1.0;
    for (int a = 0; a < g.dim; ++a) w *= g.spacing;
    return w;
}

void require_same_shape(const LatticeField& a, const LatticeField& b, const char* who) {
    if (!(a.grid == b.grid) || a.spinor_dim() != b.spinor_dim())
        throw ContractViolation(std::string(who) + ": grid or spinor dimension mismatch");
}

}  // namespace

LatticeField operator+(const LatticeField& a, const LatticeField& b) {
    require_same_shape(a, b, "field sum");
    LatticeField out = a;
    out.values += b.values;
    return out;
}

LatticeField operator-(const LatticeField& a, const LatticeField& b) {
    require_same_shape(a, b, "field difference");
    LatticeField out = a;
    out.values -= b.values;
    return out;
}

LatticeField operator*(Complex c, const LatticeField& a) {
    LatticeField out = a;
    out.values *= c;
    return out;
}

Complex inner_product(const LatticeField& a, const LatticeField& b) {
    require_same_shape(a, b, "inner_product");
    Complex acc = 0.0;
    for (int c = 0; c < a.spinor_dim(); ++c)
        acc += a.values.col(c).dot(b.values.col(c));  // Eigen dot conjugates the left side
    return measure(a.grid) * acc;
}

double l2_norm(const LatticeField& a) {
    const std::int64_t n = a.values.size();
    std::vector<double> sq(static_cast<std::size_t>(n));
    const Complex* p = a.values.data();
    for (std::int64_t i = 0; i < n; ++i) sq[static_cast<std::size_t>(i)] = std::norm(p[i]);
    return std::sqrt(measure(a.grid) * pairwise_sum(sq.data(), n));
}

LatticeField normalized(const LatticeField& a) {
    const double nrm = l2_norm(a);
    if (nrm <= 0.0) throw std::invalid_argument("normalized: zero field");
    LatticeField out = a;
    out.values /= nrm;
    return out;
}

double sobolev_norm(const LatticeField& a, double s, double mass) {
    if (s < 0.0) throw std::invalid_argument("sobolev_norm: s must be >= 0");
    const SpectralField hat = forward_transform(a);
    const std::int64_t modes = a.grid.sites();
    const int d = a.spinor_dim();
    std::vector<double> terms(static_cast<std::size_t>(modes));
    for (std::int64_t idx = 0; idx < modes; ++idx) {
        const auto coords = a.grid.site_coords(idx);
        double k2 = 0.0;
        for (int ax = 0; ax < a.grid.dim; ++ax) {
            const double k = a.grid.momentum_of_index(coords[static_cast<std::size_t>(ax)]);
            k2 += k * k;
        }
        double amp2 = 0.0;
        for (int c = 0; c < d; ++c) amp2 += std::norm(hat.coeffs(idx, c));
        const double w = 1.0 + mass * mass + k2;
        terms[static_cast<std::size_t>(idx)] = (s == 0.0 ? amp2 : std::pow(w, s) * amp2);
    }
    return std::sqrt(measure(a.grid) * pairwise_sum(terms.data(), modes));
}

LatticeField gaussian_state(const GridSpec& grid, double width,
                            const Eigen::VectorXd& center,
                            const Eigen::VectorXd& carrier,
                            const Eigen::VectorXcd& spinor) {
    if (!(width > 0.0)) throw std::invalid_argument("gaussian_state: width must be positive");
    if (spinor.norm() == 0.0) throw std::invalid_argument("gaussian_state: zero spinor");
    if (center.size() != grid.dim || carrier.size() != grid.dim)
        throw std::invalid_argument("gaussian_state: center/carrier dimension mismatch");
    const double L = grid.period();
    if (width < 4.0 * grid.spacing || width > L / 4.0)
        std::cerr << "gaussian_state: width " << width << " outside [4*eps, L/4] = ["
                  << 4.0 * grid.spacing << ", " << L / 4.0 << "]\n";

    // Separable periodized envelope; images summed until they vanish.
    std::vector<std::vector<double>> env(static_cast<std::size_t>(grid.dim),
                                         std::vector<double>(static_cast<std::size_t>(grid.points)));
    std::vector<double> kc(static_cast<std::size_t>(grid.dim));
    const double two_pi_over_L = 2.0 * std::numbers::pi / L;
    for (int ax = 0; ax < grid.dim; ++ax) {
        kc[static_cast<std::size_t>(ax)] =
            two_pi_over_L * std::round(carrier(ax) / two_pi_over_L);
        const double inv2w2 = 1.0 / (2.0 * width * width);
        for (int j = 0; j < grid.points; ++j) {
            const double d0 = j * grid.spacing - center(ax);
            double v = std::exp(-d0 * d0 * inv2w2);
            for (int img = 1; img <= 64; ++img) {
                const double tp = std::exp(-(d0 + img * L) * (d0 + img * L) * inv2w2);
                const double tm = std::exp(-(d0 - img * L) * (d0 - img * L) * inv2w2);
                v += tp + tm;
                if (tp < 1e-300 && tm < 1e-300) break;
            }
            env[static_cast<std::size_t>(ax)][static_cast<std::size_t>(j)] = v;
        }
    }

    const Eigen::VectorXcd sp = spinor / spinor.norm();
    LatticeField out(grid, static_cast<int>(spinor.size()));
    const std::int64_t nsites = grid.sites();
    for (std::int64_t sidx = 0; sidx < nsites; ++sidx) {
        const auto c = grid.site_coords(sidx);
        double envelope = 1.0;
        double phase = 0.0;
        for (int ax = 0; ax < grid.dim; ++ax) {
            envelope *= env[static_cast<std::size_t>(ax)][static_cast<std::size_t>(c[static_cast<std::size_t>(ax)])];
            phase += kc[static_cast<std::size_t>(ax)] * c[static_cast<std::size_t>(ax)] * grid.spacing;
        }
        const Complex amp = envelope * std::polar(1.0, phase);
        for (int comp = 0; comp < out.spinor_dim(); ++comp)
            out.values(sidx, comp) = amp * sp(comp);
    }
    return normalized(out);
}

LatticeField plane_wave_state(const GridSpec& grid, const std::vector<int>& mode,
                              const Eigen::VectorXcd& spinor) {
    if (spinor.norm() == 0.0) throw std::invalid_argument("plane_wave_state: zero spinor");
    if (static_cast<int>(mode.size()) != grid.dim)
        throw std::invalid_argument("plane_wave_state: mode dimension mismatch");
    for (int w : mode)
        if (w < -grid.points / 2 || w >= grid.points / 2)
            throw std::invalid_argument("plane_wave_state: mode outside [-N/2, N/2)");

    const Eigen::VectorXcd sp = spinor / spinor.norm();
    const double two_pi_over_N = 2.0 * std::numbers::pi / grid.points;
    LatticeField out(grid, static_cast<int>(spinor.size()));
    const std::int64_t nsites = grid.sites();
    const double amp = 1.0 / std::sqrt(measure(out.grid) * static_cast<double>(nsites));
    for (std::int64_t sidx = 0; sidx < nsites; ++sidx) {
        const auto c = grid.site_coords(sidx);
        double phase = 0.0;
        for (int ax = 0; ax < grid.dim; ++ax)
            phase += two_pi_over_N * mode[static_cast<std::size_t>(ax)] * c[static_cast<std::size_t>(ax)];
        const Complex a = amp * std::polar(1.0, phase);
        for (int comp = 0; comp < out.spinor_dim(); ++comp) out.values(sidx, comp) = a * sp(comp);
    }
    return out;
}

}  // namespace dirac
