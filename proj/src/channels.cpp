#include "gqfi/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace gqfi {

SymplecticTransform rotation(double theta) {
    SymplecticTransform t;
    t.entries.resize(2, 2);
    t.entries << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    t.n_modes = 1;
    return t;
}

SymplecticTransform squeezer(double eps) {
    SymplecticTransform t;
    t.entries = Eigen::MatrixXd::Zero(2, 2);
    t.entries(0, 0) = std::exp(eps);
    t.entries(1, 1) = std::exp(-eps);
    t.n_modes = 1;
    return t;
}

GaussianState apply(const GaussianState& state, const SymplecticTransform& transform,
                    int target_mode) {
    if (transform.n_modes != 1)
        throw std::invalid_argument("apply expects a single-mode transform");
    if (target_mode < 0 || target_mode >= state.n_modes)
        throw std::invalid_argument("apply: target mode out of range");

    Eigen::MatrixXd embedded = Eigen::MatrixXd::Identity(2 * state.n_modes, 2 * state.n_modes);
    embedded.block<2, 2>(2 * target_mode, 2 * target_mode) = transform.entries;

    GaussianState out = state;
    out.sigma = embedded * state.sigma * embedded.transpose();
    out.displacement = embedded * state.displacement;
    return out;
}

namespace detail {

Eigen::Matrix2d encoding_matrix(double eps, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Eigen::Matrix2d rot_fwd, rot_back, squeeze;
    rot_fwd << c, s, -s, c;
    rot_back << c, -s, s, c;
    squeeze << std::exp(eps), 0.0, 0.0, std::exp(-eps);
    return rot_back * squeeze * rot_fwd;
}

}  // namespace detail

GaussianState encoding_map(const GaussianState& state, double eps, double theta) {
    const Eigen::Matrix2d composite = detail::encoding_matrix(eps, theta);

    GaussianState out = state;
    if (state.n_modes == 1) {
        out.sigma = composite * state.sigma * composite.transpose();
        out.displacement = composite * state.displacement;
        return out;
    }
    // Mode-B block stays bit-identical: only the A block, the AB cross block
    // and the A displacement are recomputed.
    out.sigma.topLeftCorner<2, 2>() =
        composite * state.sigma.topLeftCorner<2, 2>() * composite.transpose();
    out.sigma.topRightCorner<2, 2>() = composite * state.sigma.topRightCorner<2, 2>();
    out.sigma.bottomLeftCorner<2, 2>() = out.sigma.topRightCorner<2, 2>().transpose();
    out.displacement.head<2>() = composite * state.displacement.head<2>();
    return out;
}

}  // namespace gqfi
