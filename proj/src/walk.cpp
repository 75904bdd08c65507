#include "dirac/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirac/errors.hpp"
#include "dirac/parallel.hpp"

namespace dirac {

namespace {

const Complex kI{0.0, 1.0};

// out[v] = in[(v - delta) mod N] along the given axis, exact copy.
void shifted_copy(const Complex* src, Complex* dst, const GridSpec& g, int axis, int delta) {
    const int n = g.points;
    const int d = ((delta % n) + n) % n;
    const std::int64_t total = g.sites();
    if (axis == 0) {
        for (std::int64_t b = 0; b < total; b += n) {
            std::copy(src + b + n - d, src + b + n, dst + b);
            std::copy(src + b, src + b + n - d, dst + b + d);
        }
        return;
    }
    const std::int64_t stride = g.stride(axis);
    const std::int64_t block = stride * n;
    for (std::int64_t high = 0; high < total / block; ++high) {
        const Complex* sb = src + high * block;
        Complex* db = dst + high * block;
        for (int v = 0; v < n; ++v) {
            const int sv = (v + n - d) % n;
            std::copy(sb + sv * stride, sb + (sv + 1) * stride, db + v * stride);
        }
    }
}

int sites_per_unit(const WalkOperator& w, const GridSpec& g) {
    const double h = w.eps / w.substeps;
    const double ratio = h / g.spacing;
    const int u = static_cast<int>(std::lround(ratio));
    if (u < 1 || std::abs(ratio - u) > 1e-9 * std::max(1.0, ratio))
        throw ContractViolation(
            "apply_walk: shift unit eps/substeps is not an integer multiple of the grid spacing");
    return u;
}

void apply_factors(const WalkOperator& w, const GridSpec& g, Eigen::MatrixXcd& cur,
                   Eigen::MatrixXcd& tmp) {
    const int u = sites_per_unit(w, g);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        if (const auto* coin = std::get_if<CoinFactor>(&*it)) {
            const Matrix ut = coin->u.transpose();
            parallel_for(cur.rows(), [&](std::int64_t lo, std::int64_t hi) {
                tmp.middleRows(lo, hi - lo).noalias() = cur.middleRows(lo, hi - lo) * ut;
            });
            cur.swap(tmp);
        } else {
            const auto& sh = std::get<ShiftFactor>(*it);
            for (int b = 0; b < cur.cols(); ++b)
                shifted_copy(cur.col(b).data(), tmp.col(b).data(), g, sh.axis, sh.steps[static_cast<std::size_t>(b)] * u);
            cur.swap(tmp);
        }
    }
}

void check_walk_matches(const WalkOperator& w, const LatticeField& a) {
    if (w.dim != a.grid.dim)
        throw ContractViolation("apply_walk: walk and field dimensions differ");
    if (w.spinor_dim != a.spinor_dim())
        throw ContractViolation("apply_walk: walk and field spinor dimensions differ");
}

}  // namespace

WalkOperator build_dirac_walk(int n, double mass, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("build_dirac_walk: eps must be positive");
    if (mass < 0.0) throw std::invalid_argument("build_dirac_walk: mass must be >= 0");
    const auto alphas = alpha_set(n);  // also rejects bad n
    const int d = static_cast<int>(alphas[0].rows());
    WalkOperator w{n, d, eps, 1, {}};

    w.factors.push_back(CoinFactor{exp_hermitian(mass * alphas[0], eps), "C"});
    switch (n) {
        case 1:
            // alpha^1 = sigma^3 is already diagonal.
            w.factors.push_back(ShiftFactor{0, {1, -1}});
            break;
        case 2:
            w.factors.push_back(CoinFactor{hadamard(), "H"});
            w.factors.push_back(ShiftFactor{0, {1, -1}});
            w.factors.push_back(CoinFactor{hadamard(), "H"});
            w.factors.push_back(ShiftFactor{1, {1, -1}});
            break;
        case 3: {
            // alpha^j = -sigma^3 x sigma^j diagonalizes to -sigma^3 x sigma^3,
            // whose diagonal is (-1, 1, 1, -1) in the |r,l> basis.
            const std::vector<int> steps{-1, 1, 1, -1};
            const Matrix id2 = pauli(0);
            w.factors.push_back(CoinFactor{kron(id2, hadamard()), "IxH"});
            w.factors.push_back(ShiftFactor{0, steps});
            w.factors.push_back(CoinFactor{kron(id2, hadamard() * fgate()), "IxHF"});
            w.factors.push_back(ShiftFactor{1, steps});
            w.factors.push_back(CoinFactor{kron(id2, fgate().adjoint()), "IxFdag"});
            w.factors.push_back(ShiftFactor{2, steps});
            break;
        }
    }
    return w;
}

WalkOperator build_general_walk(const Matrix& beta0, const std::vector<Matrix>& betas,
                                const std::vector<std::vector<int>>& numerators, int q,
                                double eps) {
    if (q < 1) throw std::invalid_argument("build_general_walk: q must be >= 1");
    if (eps <= 0.0) throw std::invalid_argument("build_general_walk: eps must be positive");
    if (betas.empty() || betas.size() > 3)
        throw std::invalid_argument("build_general_walk: need 1 to 3 spatial generators");
    if (numerators.size() != betas.size())
        throw std::invalid_argument("build_general_walk: one numerator list per spatial generator");
    if (!is_hermitian(beta0))
        throw ContractViolation("build_general_walk: beta0 is not hermitian");
    const int d = static_cast<int>(beta0.rows());

    WalkOperator w{static_cast<int>(betas.size()), d, eps, q, {}};
    // Coin exp(-i h q beta0) with h = eps/q: one application per full step
    // advances the mass phase by eps * beta0.
    w.factors.push_back(CoinFactor{exp_hermitian(beta0, eps), "C"});

    for (std::size_t j = 0; j < betas.size(); ++j) {
        const Matrix& beta = betas[j];
        if (!is_hermitian(beta))
            throw ContractViolation("build_general_walk: spatial generator is not hermitian");
        if (beta.rows() != d)
            throw ContractViolation("build_general_walk: generator dimensions differ");
        if (static_cast<int>(numerators[j].size()) != d)
            throw std::invalid_argument("build_general_walk: numerator list size must equal d");

        Eigen::SelfAdjointEigenSolver<Matrix> es(beta);
        std::vector<int> nums = numerators[j];
        std::sort(nums.begin(), nums.end());
        for (int i = 0; i < d; ++i) {
            const double claimed = static_cast<double>(nums[static_cast<std::size_t>(i)]) / q;
            if (std::abs(es.eigenvalues()(i) - claimed) > 1e-9)
                throw std::invalid_argument(
                    "build_general_walk: supplied rational eigenvalues disagree with the "
                    "numerical spectrum beyond 1e-9");
        }
        const std::string idx = std::to_string(j + 1);
        w.factors.push_back(CoinFactor{es.eigenvectors(), "U" + idx});
        w.factors.push_back(ShiftFactor{static_cast<int>(j), nums});
        w.factors.push_back(CoinFactor{es.eigenvectors().adjoint(), "U" + idx + "dag"});
    }
    return w;
}

WalkOperator build_product_walk(const std::vector<WalkOperator>& walks) {
    if (walks.empty()) throw std::invalid_argument("build_product_walk: empty walk list");
    WalkOperator out = walks.front();
    for (std::size_t i = 1; i < walks.size(); ++i) {
        const auto& w = walks[i];
        if (w.dim != out.dim || w.spinor_dim != out.spinor_dim || w.eps != out.eps ||
            w.substeps != out.substeps)
            throw ContractViolation("build_product_walk: walks have mismatched shape or step");
        out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.end());
    }
    return out;
}

WalkOperator adjoint(const WalkOperator& w) {
    WalkOperator out{w.dim, w.spinor_dim, w.eps, w.substeps, {}};
    out.factors.reserve(w.factors.size());
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        if (const auto* coin = std::get_if<CoinFactor>(&*it)) {
            out.factors.push_back(CoinFactor{coin->u.adjoint(), coin->label + "dag"});
        } else {
            auto sh = std::get<ShiftFactor>(*it);
            for (int& s : sh.steps) s = -s;
            out.factors.push_back(sh);
        }
    }
    return out;
}

LatticeField apply_walk(const WalkOperator& w, const LatticeField& a) {
    check_walk_matches(w, a);
    LatticeField out = a;
    Eigen::MatrixXcd tmp(out.values.rows(), out.values.cols());
    apply_factors(w, a.grid, out.values, tmp);
    return out;
}

LatticeField apply_walk_steps(const WalkOperator& w, const LatticeField& a, int l) {
    if (l < 0) throw std::invalid_argument("apply_walk_steps: step count must be >= 0");
    check_walk_matches(w, a);
    LatticeField out = a;
    Eigen::MatrixXcd tmp(out.values.rows(), out.values.cols());
    for (int i = 0; i < l; ++i) apply_factors(w, a.grid, out.values, tmp);
    return out;
}

Matrix symbol_of(const WalkOperator& w, const Eigen::VectorXd& k) {
    if (k.size() != w.dim) throw std::invalid_argument("symbol_of: momentum dimension mismatch");
    const double h = w.eps / w.substeps;
    Matrix sym = Matrix::Identity(w.spinor_dim, w.spinor_dim);
    for (const auto& f : w.factors) {
        if (const auto* coin = std::get_if<CoinFactor>(&f)) {
            sym *= coin->u;
        } else {
            const auto& sh = std::get<ShiftFactor>(f);
            Eigen::VectorXcd diag(w.spinor_dim);
            for (int b = 0; b < w.spinor_dim; ++b)
                diag(b) = std::polar(1.0, -k(sh.axis) * sh.steps[static_cast<std::size_t>(b)] * h);
            sym *= diag.asDiagonal().toDenseMatrix();
        }
    }
    return sym;
}

}  // namespace dirac
