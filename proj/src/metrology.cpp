#include "gqfi/metrology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gqfi/channels.hpp"
#include "gqfi/symplectic.hpp"

namespace gqfi {

namespace {

constexpr double kPurityDetTol = 1e-9;

double displacement_factor(const Eigen::MatrixXd& sum, const Eigen::VectorXd& delta) {
    if (delta.isZero(0.0)) return 1.0;
    return std::exp(-0.5 * delta.dot(sum.llt().solve(delta)));
}

// F = Tr(rho1 rho2) = 2^N det(s1+s2)^{-1/2} exp(-1/2 d^T (s1+s2)^{-1} d),
// exact whenever at least one state is pure.
double fidelity_with_pure(const GaussianState& s1, const GaussianState& s2) {
    const Eigen::MatrixXd sum = s1.sigma + s2.sigma;
    return std::pow(2.0, s1.n_modes) / std::sqrt(sum.determinant()) *
           displacement_factor(sum, s1.displacement - s2.displacement);
}

// Scutaru closed form, written as 2 (sqrt(D+L) + sqrt(L)) / D to avoid the
// subtractive cancellation of the textbook 2 / (sqrt(D+L) - sqrt(L)).
double fidelity_single_mixed(const GaussianState& s1, const GaussianState& s2) {
    const Eigen::MatrixXd sum = s1.sigma + s2.sigma;
    const double delta = sum.determinant();
    const double lambda = std::max(0.0, s1.sigma.determinant() - 1.0) *
                          std::max(0.0, s2.sigma.determinant() - 1.0);
    return 2.0 * (std::sqrt(delta + lambda) + std::sqrt(lambda)) / delta *
           displacement_factor(sum, s1.displacement - s2.displacement);
}

// Two-mode closed form in the symplectic invariants, rearranged as
// (X + sqrt(X^2 - Delta)) / Delta for the same cancellation reason. The
// Lambda factors come from nu_squared_minus_one_product so that near-pure
// inputs keep full precision.
double fidelity_two_mode_mixed(const GaussianState& s1, const GaussianState& s2) {
    const Eigen::MatrixXd sum = s1.sigma + s2.sigma;
    const Eigen::MatrixXd form = omega(2);
    const double delta = sum.determinant() / 16.0;
    const double gamma =
        (Eigen::MatrixXd::Identity(4, 4) - form * s1.sigma * form * s2.sigma).determinant() / 16.0;
    const double lambda = detail::nu_squared_minus_one_product(s1.sigma) *
                          detail::nu_squared_minus_one_product(s2.sigma) / 16.0;
    const double x = std::sqrt(std::max(0.0, gamma)) + std::sqrt(lambda);
    const double f0 = (x + std::sqrt(std::max(0.0, x * x - delta))) / delta;
    return f0 * displacement_factor(sum, s1.displacement - s2.displacement);
}

}  // namespace

void QfiConfig::validate() const {
    if (d_epsilon <= 0.0) throw std::invalid_argument("d_epsilon must be positive");
    if (theta_nodes < 16 || theta_nodes % 2 != 0)
        throw std::invalid_argument("theta_nodes must be even and >= 16");
}

const char* curve_name(BoundCurve curve) {
    switch (curve) {
        case BoundCurve::UpperSingle: return "upper-single";
        case BoundCurve::LowerSingle: return "lower-single";
        case BoundCurve::CoherentMax: return "coherent-max";
        case BoundCurve::SeparableMax: return "separable-max";
        case BoundCurve::EntangledVsNegativity: return "entangled-vs-negativity";
    }
    return "unknown";
}

BoundCurve curve_from_name(const std::string& name) {
    for (BoundCurve curve : {BoundCurve::UpperSingle, BoundCurve::LowerSingle,
                             BoundCurve::CoherentMax, BoundCurve::SeparableMax,
                             BoundCurve::EntangledVsNegativity}) {
        if (name == curve_name(curve)) return curve;
    }
    throw std::invalid_argument("unknown bound curve: " + name);
}

double gaussian_fidelity(const GaussianState& s1, const GaussianState& s2) {
    if (s1.n_modes != s2.n_modes)
        throw std::invalid_argument("gaussian_fidelity: mode count mismatch");
    const bool pure1 = std::abs(s1.sigma.determinant() - 1.0) < kPurityDetTol;
    const bool pure2 = std::abs(s2.sigma.determinant() - 1.0) < kPurityDetTol;
    double f;
    if (pure1 || pure2)
        f = fidelity_with_pure(s1, s2);
    else if (s1.n_modes == 1)
        f = fidelity_single_mixed(s1, s2);
    else
        f = fidelity_two_mode_mixed(s1, s2);
    return std::min(1.0, f);
}

double qfi_theta(const GaussianState& probe, double theta, const QfiConfig& cfg) {
    cfg.validate();
    const GaussianState base = cfg.base_epsilon == 0.0
                                   ? probe
                                   : encoding_map(probe, cfg.base_epsilon, theta);
    const auto estimate = [&](double de) {
        const GaussianState stepped = encoding_map(probe, cfg.base_epsilon + de, theta);
        const double f = gaussian_fidelity(base, stepped);
        return 8.0 * (1.0 - std::sqrt(f)) / (de * de);
    };
    if (!cfg.richardson) return estimate(cfg.d_epsilon);
    // leading truncation term is linear in the step, so 2 H(d/2) - H(d)
    return 2.0 * estimate(cfg.d_epsilon / 2.0) - estimate(cfg.d_epsilon);
}

double avg_qfi(const GaussianState& probe, const QfiConfig& cfg) {
    cfg.validate();
    // periodic trapezoid = node mean; deterministic index-order accumulation
    double acc = 0.0;
    for (int k = 0; k < cfg.theta_nodes; ++k)
        acc += qfi_theta(probe, std::numbers::pi * k / cfg.theta_nodes, cfg);
    return acc / cfg.theta_nodes;
}

double bound(BoundCurve curve, double n_a, std::optional<double> e_n) {
    if (n_a < 0.0) throw std::invalid_argument("bound: n_A must be >= 0");
    switch (curve) {
        case BoundCurve::UpperSingle:
            return 4.0 * n_a * n_a + 4.0 * n_a + 2.0;
        case BoundCurve::LowerSingle: {
            const double nu = 2.0 * n_a + 1.0;
            return 4.0 * nu * nu / (1.0 + nu * nu);
        }
        case BoundCurve::CoherentMax:
            return 4.0 * n_a + 2.0;
        case BoundCurve::SeparableMax:
            return 3.0 - 1.0 / (1.0 + 2.0 * n_a) + 2.0 * n_a;
        case BoundCurve::EntangledVsNegativity: {
            if (!e_n) throw std::invalid_argument("entangled curve requires E_N");
            if (*e_n < 0.0) throw std::invalid_argument("E_N must be >= 0");
            const double nu_tilde = std::exp(-*e_n);
            return 2.0 + 8.0 * n_a * (1.0 + n_a) /
                             (1.0 + (2.0 + 4.0 * n_a - nu_tilde) * nu_tilde);
        }
    }
    throw std::invalid_argument("unknown bound curve");
}

double avg_precision_bound(double avg_qfi_value, long m_repetitions) {
    if (avg_qfi_value <= 0.0) throw std::invalid_argument("avg_qfi must be positive");
    if (m_repetitions < 1) throw std::invalid_argument("repetition count must be >= 1");
    return 1.0 / std::sqrt(static_cast<double>(m_repetitions) * avg_qfi_value);
}

}  // namespace gqfi
