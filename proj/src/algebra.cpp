#include "dirac/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac/errors.hpp"

namespace dirac {

namespace {
const Complex kI{0.0, 1.0};
}

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const Matrix res = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
    return res.cwiseAbs().maxCoeff() <= tol;
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

Matrix pauli(int mu) {
    Matrix m(2, 2);
    switch (mu) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -kI, kI, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli: index must be in 0..3");
    }
    return m;
}

Matrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << s, s, s, -s;
    return h;
}

Matrix fgate() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix f(2, 2);
    f << s, s, kI * s, -kI * s;
    return f;
}

std::vector<Matrix> alpha_set(int n) {
    switch (n) {
        case 1:
            // alpha^0 = sigma^1 keeps the shift spin-diagonal, so the
            // massless walk is exact lattice transport.
            return {pauli(1), pauli(3)};
        case 2:
            return {pauli(2), pauli(1), pauli(3)};
        case 3:
            return {kron(pauli(2), pauli(0)), -kron(pauli(3), pauli(1)),
                    -kron(pauli(3), pauli(2)), -kron(pauli(3), pauli(3))};
        default:
            throw std::invalid_argument("alpha_set: spatial dimension must be 1, 2 or 3");
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix exp_hermitian(const Matrix& a, double t) {
    if (!is_hermitian(a))
        throw ContractViolation("exp_hermitian: generator is not hermitian");
    const Eigen::Index d = a.rows();
    const Matrix id = Matrix::Identity(d, d);

    // A^2 = c Id covers every generator on the Dirac path exactly.
    const Matrix sq = a * a;
    const double c = sq.trace().real() / static_cast<double>(d);
    if ((sq - c * id).cwiseAbs().maxCoeff() <= 1e-13 * std::max(1.0, std::abs(c))) {
        if (c <= 0.0) return id - kI * t * a;  // c = 0 forces A = 0 for hermitian A
        const double g = std::sqrt(c);
        return std::cos(g * t) * id - kI * (std::sin(g * t) / g) * a;
    }

    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    Eigen::VectorXcd phases(d);
    for (Eigen::Index i = 0; i < d; ++i)
        phases(i) = std::polar(1.0, -t * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace dirac
