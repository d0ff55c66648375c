#pragma once

#include "gqfi/states.hpp"

namespace gqfi {

/// Von Neumann entropy in bits:
/// S = sum_i [((nu+1)/2) log2((nu+1)/2) - ((nu-1)/2) log2((nu-1)/2)].
double von_neumann_entropy(const GaussianState& state);

/// Coherence in bits:
/// C = -S + sum_i [(n_i+1) log2(n_i+1) - n_i log2 n_i].
double coherence(const GaussianState& state);

/// Logarithmic negativity in nats: max(0, -ln nu~).
double log_negativity(const GaussianState& state);

}  // namespace gqfi
