#pragma once

#include <Eigen/Dense>

#include "gqfi/states.hpp"

namespace gqfi {

/// A 2Nx2N matrix acting as sigma -> S sigma S^T, eps -> S eps.
struct SymplecticTransform {
    Eigen::MatrixXd entries;
    int n_modes = 1;
};

/// Single-mode rotation [[cos t, sin t], [-sin t, cos t]].
SymplecticTransform rotation(double theta);

/// Single-mode squeezer diag(e^eps, e^-eps).
SymplecticTransform squeezer(double eps);

/// Apply a single-mode transform to one mode of a state; the other mode
/// block is left untouched.
GaussianState apply(const GaussianState& state, const SymplecticTransform& transform,
                    int target_mode);

/// Full encoding map of the estimation strategy: R(theta)^-1 S(eps) R(theta)
/// on mode A, identity on mode B.
GaussianState encoding_map(const GaussianState& state, double eps, double theta);

namespace detail {
/// Bare 2x2 composite R(-theta) diag(e^eps, e^-eps) R(theta).
Eigen::Matrix2d encoding_matrix(double eps, double theta);
}  // namespace detail

}  // namespace gqfi
