#include "gqfi/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gqfi/errors.hpp"
#include "json.hpp"

namespace gqfi {

namespace {

Eigen::Matrix2d rotation_matrix(double phi) {
    Eigen::Matrix2d r;
    r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
    return r;
}

double param(const std::map<std::string, double>& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

}  // namespace

GaussianState::GaussianState(Eigen::MatrixXd sigma_in, Eigen::VectorXd displacement_in, double tol)
    : sigma(std::move(sigma_in)), displacement(std::move(displacement_in)) {
    n_modes = static_cast<int>(sigma.rows()) / 2;
    if (displacement.size() != 2 * n_modes)
        throw std::invalid_argument("displacement length must be 2 * n_modes");
    if (!is_bona_fide(sigma, tol)) {
        const auto nus = symplectic_eigenvalues(sigma);
        throw UnphysicalStateError("covariance matrix violates the uncertainty relation",
                                   nus.empty() ? 0.0 : nus.front());
    }
}

const char* class_name(StateClass tag) {
    switch (tag) {
        case StateClass::SingleGeneral: return "single-general";
        case StateClass::SingleCoherent: return "single-coherent";
        case StateClass::SingleThermal: return "single-thermal";
        case StateClass::SinglePureSqueezed: return "single-pure-squeezed";
        case StateClass::TwoModeGeneral: return "two-mode-general";
        case StateClass::SeparableStandard: return "separable-standard";
        case StateClass::Discordant: return "discordant";
        case StateClass::EntangledStandard: return "entangled-standard";
        case StateClass::Tmsv: return "tmsv";
    }
    return "unknown";
}

StateClass class_from_name(const std::string& name) {
    for (StateClass tag : {StateClass::SingleGeneral, StateClass::SingleCoherent,
                           StateClass::SingleThermal, StateClass::SinglePureSqueezed,
                           StateClass::TwoModeGeneral, StateClass::SeparableStandard,
                           StateClass::Discordant, StateClass::EntangledStandard,
                           StateClass::Tmsv}) {
        if (name == class_name(tag)) return tag;
    }
    throw std::invalid_argument("unknown state class: " + name);
}

bool is_single_mode_class(StateClass tag) {
    switch (tag) {
        case StateClass::SingleGeneral:
        case StateClass::SingleCoherent:
        case StateClass::SingleThermal:
        case StateClass::SinglePureSqueezed:
            return true;
        default:
            return false;
    }
}

std::vector<double> mean_photon_per_mode(const GaussianState& state) {
    std::vector<double> result(state.n_modes);
    for (int k = 0; k < state.n_modes; ++k) {
        const double tr = state.sigma(2 * k, 2 * k) + state.sigma(2 * k + 1, 2 * k + 1);
        const double disp_sq = state.displacement(2 * k) * state.displacement(2 * k) +
                               state.displacement(2 * k + 1) * state.displacement(2 * k + 1);
        result[k] = (tr - 2.0) / 4.0 + disp_sq / 4.0;
    }
    return result;
}

GaussianState vacuum(int n_modes) {
    if (n_modes != 1 && n_modes != 2)
        throw std::invalid_argument("unsupported mode count: " + std::to_string(n_modes));
    return {Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes),
            Eigen::VectorXd::Zero(2 * n_modes)};
}

GaussianState thermal(double n_bar) {
    if (n_bar < 0.0) throw std::invalid_argument("thermal occupation must be >= 0");
    return {(2.0 * n_bar + 1.0) * Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2)};
}

GaussianState coherent(double eps_x, double eps_p) {
    Eigen::VectorXd eps(2);
    eps << eps_x, eps_p;
    return {Eigen::MatrixXd::Identity(2, 2), eps};
}

GaussianState pure_squeezed(double r, double phi, double eps_x, double eps_p) {
    return single_mode_general(1.0, r, phi, eps_x, eps_p);
}

GaussianState single_mode_general(double nu, double r, double phi, double eps_x, double eps_p) {
    if (nu < 1.0 - kPhysicalityTol)
        throw std::invalid_argument("single_mode_general: nu must be >= 1");
    const Eigen::Matrix2d rot = rotation_matrix(phi);
    Eigen::Matrix2d core = Eigen::Matrix2d::Zero();
    core(0, 0) = nu * std::exp(2.0 * r);
    core(1, 1) = nu * std::exp(-2.0 * r);
    Eigen::VectorXd eps(2);
    eps << eps_x, eps_p;
    return {rot * core * rot.transpose(), eps};
}

GaussianState two_mode_from_class(const StateClassSpec& spec) {
    const auto& p = spec.parameters;
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(4, 4);
    Eigen::VectorXd eps = Eigen::VectorXd::Zero(4);

    switch (spec.class_tag) {
        case StateClass::TwoModeGeneral: {
            const double a1 = param(p, "a1", 1.0), b1 = param(p, "b1", 1.0);
            const double g = param(p, "g", 0.0), b2 = param(p, "b2", 1.0);
            const double c = param(p, "c", 0.0), d = param(p, "d", 0.0);
            sigma << a1, g, c, 0.0,
                     g, b1, 0.0, d,
                     c, 0.0, b2, 0.0,
                     0.0, d, 0.0, b2;
            eps(0) = param(p, "eps_x", 0.0);
            eps(1) = param(p, "eps_y", 0.0);
            break;
        }
        case StateClass::SeparableStandard: {
            sigma.diagonal() << param(p, "a1", 1.0), param(p, "b1", 1.0),
                                param(p, "b2", 1.0), param(p, "b2", 1.0);
            eps(0) = param(p, "eps_x", 0.0);
            eps(1) = param(p, "eps_y", 0.0);
            break;
        }
        case StateClass::Discordant: {
            const double a = param(p, "a", 1.0), b = param(p, "b", 1.0), c = param(p, "c", 0.0);
            sigma.diagonal() << a, a, b, b;
            sigma(0, 2) = sigma(2, 0) = c;
            sigma(1, 3) = sigma(3, 1) = c;
            eps(0) = param(p, "eps_x", 0.0);
            eps(1) = param(p, "eps_y", 0.0);
            break;
        }
        case StateClass::EntangledStandard: {
            const double a = param(p, "a", 1.0), b = param(p, "b", 1.0), c = param(p, "c", 0.0);
            sigma.diagonal() << a, a, b, b;
            sigma(0, 2) = sigma(2, 0) = c;
            sigma(1, 3) = sigma(3, 1) = -c;
            break;
        }
        case StateClass::Tmsv:
            return tmsv(param(p, "r", 0.0));
        default:
            throw std::invalid_argument("two_mode_from_class: not a two-mode class");
    }
    return {sigma, eps};
}

GaussianState tmsv(double r) {
    const double a = std::cosh(2.0 * r);
    const double c = std::sinh(2.0 * r);
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(4, 4);
    sigma.diagonal() << a, a, a, a;
    sigma(0, 2) = sigma(2, 0) = c;
    sigma(1, 3) = sigma(3, 1) = -c;
    return {sigma, Eigen::VectorXd::Zero(4)};
}

std::string to_json(const GaussianState& state, const std::string& class_tag,
                    const std::map<std::string, double>& parameters) {
    nlohmann::json j;
    j["n_modes"] = state.n_modes;
    std::vector<double> sigma_flat;
    sigma_flat.reserve(state.sigma.size());
    for (int i = 0; i < state.sigma.rows(); ++i)
        for (int k = 0; k < state.sigma.cols(); ++k) sigma_flat.push_back(state.sigma(i, k));
    j["sigma"] = sigma_flat;
    j["displacement"] = std::vector<double>(state.displacement.data(),
                                            state.displacement.data() + state.displacement.size());
    j["class_tag"] = class_tag;
    j["parameters"] = parameters;
    return j.dump();
}

}  // namespace gqfi
