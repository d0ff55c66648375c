#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "gqfi/symplectic.hpp"

namespace gqfi {

/// Gaussian state carrier: covariance matrix + displacement vector.
/// Constructors validate the bona fide condition; treat instances as
/// immutable values.
struct GaussianState {
    Eigen::MatrixXd sigma;
    Eigen::VectorXd displacement;
    int n_modes = 1;

    GaussianState() = default;
    GaussianState(Eigen::MatrixXd sigma_in, Eigen::VectorXd displacement_in,
                  double tol = kPhysicalityTol);
};

enum class StateClass {
    SingleGeneral,
    SingleCoherent,
    SingleThermal,
    SinglePureSqueezed,
    TwoModeGeneral,
    SeparableStandard,
    Discordant,
    EntangledStandard,
    Tmsv,
};

/// Class tag plus named free parameters, e.g. {"a", 3.0}.
struct StateClassSpec {
    StateClass class_tag = StateClass::SingleThermal;
    std::map<std::string, double> parameters;
};

const char* class_name(StateClass tag);
StateClass class_from_name(const std::string& name);
bool is_single_mode_class(StateClass tag);

/// Mean excitation number per mode:
/// n_k = (tr(block_k) - 2)/4 + (e_x^2 + e_p^2)/4.
std::vector<double> mean_photon_per_mode(const GaussianState& state);

GaussianState vacuum(int n_modes);
GaussianState thermal(double n_bar);
GaussianState coherent(double eps_x, double eps_p);

/// sigma = R(phi) diag(e^{2r}, e^{-2r}) R(phi)^T plus displacement.
GaussianState pure_squeezed(double r, double phi, double eps_x, double eps_p);

/// Euler-form single-mode state: R(phi) diag(nu e^{2r}, nu e^{-2r}) R(phi)^T,
/// which spans every physical single-mode covariance matrix for nu >= 1.
GaussianState single_mode_general(double nu, double r, double phi, double eps_x, double eps_p);

/// Build a two-mode state from a class template. Recognized parameters per
/// class (missing entries default to the decoupled value):
///   TwoModeGeneral:     a1, b1, g, b2, c, d, eps_x, eps_y
///   SeparableStandard:  a1, b1, b2, eps_x, eps_y
///   Discordant:         a, b, c, eps_x, eps_y
///   EntangledStandard:  a, b, c              (undisplaced by definition)
///   Tmsv:               r
GaussianState two_mode_from_class(const StateClassSpec& spec);

/// Pure two-mode squeezed vacuum: a = b = cosh(2r), c = sinh(2r), n_A = sinh^2 r.
GaussianState tmsv(double r);

/// JSON round-trip used by the CLI for reproducibility.
std::string to_json(const GaussianState& state, const std::string& class_tag,
                    const std::map<std::string, double>& parameters);

}  // namespace gqfi
