#include "dirac/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

void require_valid_target(const GridSpec& g, int target_n, const char* who) {
    if (target_n <= 0 || target_n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": target N must be a positive even integer");
    if (g.points % target_n != 0)
        throw std::invalid_argument(std::string(who) + ": target N must divide the fine grid size");
}

bool in_band(const GridSpec& g, std::int64_t idx, int target_n) {
    const auto coords = g.site_coords(idx);
    for (int ax = 0; ax < g.dim; ++ax) {
        const int w = g.mode_of_index(coords[static_cast<std::size_t>(ax)]);
        if (w < -target_n / 2 || w >= target_n / 2) return false;
    }
    return true;
}

// Copies the shared Fourier block between two grids of the same period.
// Unitary-transform coefficients scale by (N_dst/N_src)^{n/2} so that the
// represented amplitudes are preserved.
SpectralField block_copy(const SpectralField& src, int target_n) {
    const GridSpec& g = src.grid;
    const GridSpec tgt(g.dim, target_n, g.period() / target_n);
    SpectralField out{tgt, Eigen::MatrixXcd::Zero(tgt.sites(), src.coeffs.cols())};
    const int keep = std::min(g.points, target_n);
    const double scale =
        std::pow(static_cast<double>(target_n) / g.points, 0.5 * g.dim);

    const std::int64_t modes = tgt.sites();
    std::array<int, 3> sc{0, 0, 0};
    for (std::int64_t idx = 0; idx < modes; ++idx) {
        const auto tc = tgt.site_coords(idx);
        bool inside = true;
        for (int ax = 0; ax < g.dim; ++ax) {
            const int w = tgt.mode_of_index(tc[static_cast<std::size_t>(ax)]);
            if (w < -keep / 2 || w >= keep / 2) {
                inside = false;
                break;
            }
            sc[static_cast<std::size_t>(ax)] = w >= 0 ? w : w + g.points;
        }
        if (inside) out.coeffs.row(idx) = scale * src.coeffs.row(g.site_index(sc));
    }
    return out;
}

}  // namespace

LatticeField low_pass(const LatticeField& a, int target_n) {
    require_valid_target(a.grid, target_n, "low_pass");
    SpectralField hat = forward_transform(a);
    const std::int64_t modes = a.grid.sites();
    for (std::int64_t idx = 0; idx < modes; ++idx)
        if (!in_band(a.grid, idx, target_n)) hat.coeffs.row(idx).setZero();
    return inverse_transform(hat);
}

DiscretizedState discretize(const LatticeField& a, int target_n) {
    require_valid_target(a.grid, target_n, "discretize");
    const SpectralField hat = forward_transform(a);
    SpectralField block = block_copy(hat, target_n);
    LatticeField coarse = inverse_transform(block);
    const double nrm = l2_norm(coarse);
    if (nrm <= 1e-12 * l2_norm(a))
        throw std::invalid_argument(
            "discretize: low-passed state vanishes; eps^2 must stay below "
            "||phi||_2 / (pi^-2 ||phi||_{H^2}) for the sampling to be well defined");
    coarse.values /= nrm;
    return DiscretizedState{coarse, nrm};
}

LatticeField reconstruct(const DiscretizedState& s, int fine_r) {
    if (fine_r < 1) throw std::invalid_argument("reconstruct: refinement ratio must be >= 1");
    LatticeField scaled = s.field;
    scaled.values *= s.renorm_factor;
    if (fine_r == 1) return scaled;
    return regrid(scaled, s.field.grid.points * fine_r);
}

LatticeField regrid(const LatticeField& a, int target_n) {
    if (target_n <= 0 || target_n % 2 != 0)
        throw std::invalid_argument("regrid: target N must be a positive even integer");
    if (target_n == a.grid.points) return a;
    const SpectralField hat = forward_transform(a);
    return inverse_transform(block_copy(hat, target_n));
}

}  // namespace dirac
