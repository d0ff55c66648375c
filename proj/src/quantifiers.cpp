#include "gqfi/quantifiers.hpp"

#include <cmath>
#include <stdexcept>

#include "gqfi/symplectic.hpp"

namespace gqfi {

namespace {

// ((nu+1)/2) log2((nu+1)/2) - ((nu-1)/2) log2((nu-1)/2), with 0 log 0 = 0.
double mode_entropy(double nu) {
    if (nu < 1.0 - kPhysicalityTol)
        throw std::domain_error("entropy: symplectic eigenvalue below 1");
    if (nu < 1.0) nu = 1.0;  // clamp float noise at purity
    const double up = (nu + 1.0) / 2.0;
    const double down = (nu - 1.0) / 2.0;
    double s = up * std::log2(up);
    if (down > 0.0) s -= down * std::log2(down);
    return s;
}

double thermal_reference_entropy(double n_bar) {
    if (n_bar <= 0.0) return 0.0;
    return (n_bar + 1.0) * std::log2(n_bar + 1.0) - n_bar * std::log2(n_bar);
}

}  // namespace

double von_neumann_entropy(const GaussianState& state) {
    double s = 0.0;
    for (double nu : symplectic_eigenvalues(state.sigma)) s += mode_entropy(nu);
    return s;
}

double coherence(const GaussianState& state) {
    double reference = 0.0;
    for (double n_bar : mean_photon_per_mode(state)) reference += thermal_reference_entropy(n_bar);
    return reference - von_neumann_entropy(state);
}

double log_negativity(const GaussianState& state) {
    if (state.n_modes != 2)
        throw std::invalid_argument("log_negativity requires a two-mode state");
    const double nu_tilde = pt_min_symplectic_eigenvalue(state.sigma);
    if (nu_tilde <= 0.0) throw std::domain_error("log_negativity: vanishing nu~");
    return std::max(0.0, -std::log(nu_tilde));
}

}  // namespace gqfi
