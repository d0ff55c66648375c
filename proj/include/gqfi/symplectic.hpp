#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gqfi {

// Quadrature ordering is (q_A, p_A[, q_B, p_B]); hbar = 2 so the vacuum
// covariance matrix is the identity. Only one- and two-mode matrices are
// supported.

/// Default tolerance for the physicality (bona fide) check.
inline constexpr double kPhysicalityTol = 1e-9;

/// Symmetry tolerance for covariance matrix inputs.
inline constexpr double kSymmetryTol = 1e-12;

/// Two-mode symplectic invariants A = det(alpha), B = det(beta),
/// C = det(gamma), D = det(sigma).
struct Invariants {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

/// Symplectic form: block-diagonal repetition of [[0,1],[-1,0]].
Eigen::MatrixXd omega(int n_modes);

/// Moduli of the eigenvalues of i*Omega*sigma, ascending; one entry per mode.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& sigma);

/// Robertson-Schrodinger check: sigma is PSD and every symplectic
/// eigenvalue is real and >= 1 - tol.
bool is_bona_fide(const Eigen::MatrixXd& sigma, double tol = kPhysicalityTol);

/// Flip the sign of the p_B row and column (conjugation by diag(1,1,1,-1)).
Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& sigma);

Invariants invariants(const Eigen::MatrixXd& sigma);

/// Smallest symplectic eigenvalue of the partial transpose, from the
/// radical 2*nu~^2 = H - sqrt(H^2 - 4D) with H = A + B - 2C.
double pt_min_symplectic_eigenvalue(const Eigen::MatrixXd& sigma);

namespace detail {

/// Product over modes of (nu_i^2 - 1), from invariants alone so that it
/// stays accurate for near-pure states; factors clamped at zero.
double nu_squared_minus_one_product(const Eigen::MatrixXd& sigma);

void require_symmetric(const Eigen::MatrixXd& sigma);
void require_modes(const Eigen::MatrixXd& sigma, int n_modes, const char* op);

}  // namespace detail

}  // namespace gqfi
