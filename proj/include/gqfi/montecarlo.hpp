#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqfi/metrology.hpp"
#include "gqfi/states.hpp"

namespace gqfi {

/// Counter-based substream generator (splitmix64). Each sampled state owns
/// the substream derived from (seed, index), so any subset of a sweep is
/// reproducible and worker count cannot perturb the draws.
class SubstreamRng {
public:
    explicit SubstreamRng(std::uint64_t state) : state_(state), initial_(state) {}
    static SubstreamRng for_index(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    std::uint64_t initial_state() const { return initial_; }

private:
    std::uint64_t state_ = 0;
    std::uint64_t initial_ = 0;
};

/// Config-exposed sampling ranges; recorded in run manifests.
struct SamplerRanges {
    double b_scale = 10.0;   // ancilla thermal draws span [1, 1 + b_scale * n_A]
    double cd_overdraw = 1.2;  // general-class c,d bracket widening before rejection
    int attempt_cap = 10000;
};

struct SweepRecord {
    StateClass class_tag = StateClass::SingleThermal;
    double n_a = 0.0;
    double avg_qfi = 0.0;
    std::optional<double> coherence;
    std::optional<double> log_negativity;
    std::map<std::string, double> raw_parameters;
    std::uint64_t state_seed = 0;
};

struct FitResult {
    double a1 = 0.0;
    double a2 = 0.0;
    double b1 = 0.0;
    double mse = 0.0;
    double delta_mse = 0.0;
    double n_a = 0.0;
    int n_points = 0;
    bool converged = false;
    int iterations = 0;
};

/// One state at exactly the requested mode-A energy; raw parameter values
/// are appended to raw_out when given.
GaussianState sample_one(StateClass tag, double n_a, SubstreamRng& rng,
                         const SamplerRanges& ranges = {},
                         std::map<std::string, double>* raw_out = nullptr);

std::vector<GaussianState> sample_class(StateClass tag, double n_a, int count,
                                        std::uint64_t seed, const SamplerRanges& ranges = {});

/// Sample + evaluate avg QFI and the class quantifier for each record.
/// Records are index-ordered and byte-stable for fixed (tag, n_a, count,
/// seed, cfg) regardless of worker count.
std::vector<SweepRecord> run_sweep(StateClass tag, double n_a, int count, std::uint64_t seed,
                                   const QfiConfig& cfg = {}, const SamplerRanges& ranges = {},
                                   int workers = 1);

/// Scatter-figure variant: each record draws its own n_A uniformly from
/// (0, n_max] before sampling the class.
std::vector<SweepRecord> run_scatter(StateClass tag, double n_max, int count, std::uint64_t seed,
                                     const QfiConfig& cfg = {}, const SamplerRanges& ranges = {},
                                     int workers = 1);

/// Equal-width binning over the observed E_N range; emits (bin midpoint,
/// min avg_qfi) per nonempty bin. A zero-width range collapses to the
/// single global minimum.
std::vector<std::pair<double, double>> lower_envelope(const std::vector<SweepRecord>& records,
                                                      int n_bins);

/// Damped Gauss-Newton fit of y = A1 exp(B1 x) + A2.
FitResult fit_exponential(const std::vector<std::pair<double, double>>& points,
                          double init_a1, double init_a2, double init_b1,
                          int max_iter = 200, double tol = 1e-10);

/// Data-driven starting point for fit_exponential.
void default_fit_init(const std::vector<std::pair<double, double>>& points,
                      double& a1, double& a2, double& b1);

}  // namespace gqfi
