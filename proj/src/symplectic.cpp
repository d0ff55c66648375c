#include "gqfi/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace gqfi {

namespace detail {

void require_symmetric(const Eigen::MatrixXd& sigma) {
    if (sigma.rows() != sigma.cols())
        throw std::invalid_argument("covariance matrix must be square");
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
        throw std::invalid_argument("covariance matrix must be symmetric");
}

void require_modes(const Eigen::MatrixXd& sigma, int n_modes, const char* op) {
    if (sigma.rows() != 2 * n_modes)
        throw std::invalid_argument(std::string(op) + " requires a " +
                                    std::to_string(n_modes) + "-mode covariance matrix");
}

double nu_squared_minus_one_product(const Eigen::MatrixXd& sigma) {
    if (sigma.rows() == 2) {
        return std::max(0.0, sigma.determinant() - 1.0);
    }
    // (nu1^2-1)(nu2^2-1) = D - Delta + 1 with Delta = A + B + 2C.
    const Invariants inv = invariants(sigma);
    return std::max(0.0, inv.D - (inv.A + inv.B + 2.0 * inv.C) + 1.0);
}

}  // namespace detail

Eigen::MatrixXd omega(int n_modes) {
    if (n_modes != 1 && n_modes != 2)
        throw std::invalid_argument("unsupported mode count: " + std::to_string(n_modes));
    Eigen::MatrixXd form = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        form(2 * k, 2 * k + 1) = 1.0;
        form(2 * k + 1, 2 * k) = -1.0;
    }
    return form;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& sigma) {
    detail::require_symmetric(sigma);
    const int n_modes = static_cast<int>(sigma.rows()) / 2;
    const Eigen::MatrixXd form = omega(n_modes);

    // Eigenvalues of i*Omega*sigma come in +/- pairs; collect moduli and
    // average each pair for robustness against solver jitter.
    Eigen::EigenSolver<Eigen::MatrixXd> solver(form * sigma, false);
    std::vector<double> moduli(2 * n_modes);
    for (int i = 0; i < 2 * n_modes; ++i) moduli[i] = std::abs(solver.eigenvalues()(i));
    std::sort(moduli.begin(), moduli.end());

    std::vector<double> result(n_modes);
    for (int i = 0; i < n_modes; ++i) result[i] = 0.5 * (moduli[2 * i] + moduli[2 * i + 1]);
    std::sort(result.begin(), result.end());
    return result;
}

bool is_bona_fide(const Eigen::MatrixXd& sigma, double tol) {
    if (sigma.rows() != sigma.cols()) return false;
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) return false;

    // sigma + i*Omega >= 0 implies sigma itself is PSD; moduli of complex
    // eigenvalue pairs would otherwise mask an indefinite matrix.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> psd(sigma, Eigen::EigenvaluesOnly);
    if (psd.eigenvalues().minCoeff() < -tol) return false;

    const int n_modes = static_cast<int>(sigma.rows()) / 2;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(omega(n_modes) * sigma, false);
    double min_nu = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2 * n_modes; ++i) {
        const std::complex<double> lambda = solver.eigenvalues()(i);
        // physical spectra are purely imaginary for Omega*sigma
        if (std::abs(lambda.real()) > 1e-7 * (1.0 + std::abs(lambda))) return false;
        min_nu = std::min(min_nu, std::abs(lambda));
    }
    return min_nu >= 1.0 - tol;
}

Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& sigma) {
    detail::require_symmetric(sigma);
    detail::require_modes(sigma, 2, "partial_transpose");
    Eigen::MatrixXd flipped = sigma;
    flipped.row(3) *= -1.0;
    flipped.col(3) *= -1.0;
    return flipped;
}

Invariants invariants(const Eigen::MatrixXd& sigma) {
    detail::require_symmetric(sigma);
    detail::require_modes(sigma, 2, "invariants");
    Invariants inv;
    inv.A = sigma.topLeftCorner<2, 2>().determinant();
    inv.B = sigma.bottomRightCorner<2, 2>().determinant();
    inv.C = sigma.topRightCorner<2, 2>().determinant();
    inv.D = sigma.determinant();
    return inv;
}

double pt_min_symplectic_eigenvalue(const Eigen::MatrixXd& sigma) {
    const Invariants inv = invariants(sigma);
    const double h = inv.A + inv.B - 2.0 * inv.C;
    const double disc = h * h - 4.0 * inv.D;
    if (disc < -1e-9 * std::max(1.0, h * h))
        throw std::domain_error("pt_min_symplectic_eigenvalue: H^2 < 4D");
    // H - sqrt(H^2-4D) cancels badly for strongly entangled states; use the
    // conjugate form 4D / (H + sqrt(disc)) instead.
    const double root = std::sqrt(std::max(0.0, disc));
    const double nu_sq = (inv.D <= 0.0) ? std::max(0.0, 0.5 * (h - root))
                                        : 2.0 * inv.D / (h + root);
    return std::sqrt(std::max(0.0, nu_sq));
}

}  // namespace gqfi
