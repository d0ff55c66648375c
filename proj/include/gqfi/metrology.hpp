#pragma once

#include <optional>

#include "gqfi/states.hpp"

namespace gqfi {

/// Finite-difference and quadrature settings for the QFI evaluation.
struct QfiConfig {
    double d_epsilon = 1e-3;
    int theta_nodes = 128;     // >= 16 and even
    bool richardson = true;
    double base_epsilon = 0.0;

    void validate() const;
};

enum class BoundCurve {
    UpperSingle,            // 4n^2 + 4n + 2
    LowerSingle,            // 4(2n+1)^2 / (1 + (2n+1)^2)
    CoherentMax,            // 4n + 2
    SeparableMax,           // 3 - 1/(1+2n) + 2n
    EntangledVsNegativity,  // 2 + 8n(1+n) / (1 + (2+4n-nu~)nu~), nu~ = e^-E_N
};

const char* curve_name(BoundCurve curve);
BoundCurve curve_from_name(const std::string& name);

/// Uhlmann fidelity of two Gaussian states, exact closed form.
double gaussian_fidelity(const GaussianState& s1, const GaussianState& s2);

/// Quantum Fisher information of the squeezing parameter at in-flight
/// phase theta: H = 8 (1 - sqrt F(rho_e0, rho_e0+de)) / de^2, Richardson
/// extrapolated over {de, de/2} when configured.
double qfi_theta(const GaussianState& probe, double theta, const QfiConfig& cfg = {});

/// Phase-averaged QFI: uniform trapezoid over theta in [0, pi), which by
/// pi-periodicity equals the [0, 2pi) average.
double avg_qfi(const GaussianState& probe, const QfiConfig& cfg = {});

/// Closed-form bound curves of the studied classes. E_N is required for
/// (and only for) the EntangledVsNegativity curve.
double bound(BoundCurve curve, double n_a, std::optional<double> e_n = std::nullopt);

/// Averaged quantum Cramer-Rao bound: 1 / sqrt(M * avg_qfi).
double avg_precision_bound(double avg_qfi_value, long m_repetitions);

}  // namespace gqfi
