#include "gqfi/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "gqfi/errors.hpp"
#include "gqfi/quantifiers.hpp"
#include "gqfi/symplectic.hpp"

namespace gqfi {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void put(std::map<std::string, double>* raw, const char* key, double value) {
    if (raw) (*raw)[key] = value;
}

// Energy-split draw shared by the single-mode recipes: a fraction u_d of
// n_A goes into displacement, the rest into the covariance matrix.
struct EnergySplit {
    double displacement_energy;
    double cm_energy;
    double eps_x;
    double eps_y;
};

EnergySplit draw_split(double n_a, SubstreamRng& rng, bool with_displacement) {
    EnergySplit split{};
    const double u_d = with_displacement ? rng.uniform() : 0.0;
    split.displacement_energy = n_a * u_d;
    split.cm_energy = n_a - split.displacement_energy;
    const double radius = 2.0 * std::sqrt(split.displacement_energy);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    split.eps_x = radius * std::cos(phase);
    split.eps_y = radius * std::sin(phase);
    return split;
}

// cosh 2r = 1 + 2 n u_s and nu = (1 + 2n) / cosh 2r: the covariance-matrix
// energy lands on n exactly, for every u_s.
void draw_squeezed_thermal(double n_cm, SubstreamRng& rng, double& nu, double& r, double& phi) {
    const double u_s = rng.uniform();
    const double cosh2r = 1.0 + 2.0 * n_cm * u_s;
    nu = (1.0 + 2.0 * n_cm) / cosh2r;
    r = 0.5 * std::acosh(std::max(1.0, cosh2r));
    phi = rng.uniform(0.0, std::numbers::pi);
}

// Smallest PT symplectic eigenvalue reachable by the entangled standard
// form at block diagonals (a, b): attained on the physicality boundary
// c^2 = ab - 1 - |a - b|.
double entangled_nu_tilde_floor(double a, double b) {
    const double sum = a + b;
    const double disc = sum * sum - 4.0 * (std::abs(a - b) + 1.0);
    return 0.5 * (sum - std::sqrt(std::max(0.0, disc)));
}

GaussianState sample_two_mode_general(double n_a, SubstreamRng& rng, const SamplerRanges& ranges,
                                      std::map<std::string, double>* raw) {
    const EnergySplit split = draw_split(n_a, rng, true);
    double nu, r, phi;
    draw_squeezed_thermal(split.cm_energy, rng, nu, r, phi);
    const GaussianState mode_a = single_mode_general(nu, r, phi, split.eps_x, split.eps_y);

    for (int attempt = 0; attempt < ranges.attempt_cap; ++attempt) {
        const double b2 = rng.uniform(1.0, 1.0 + ranges.b_scale * std::max(n_a, 0.1));
        const double bracket =
            ranges.cd_overdraw * std::sqrt(std::max(0.0, (nu - 1.0) * (b2 - 1.0)));
        const double c = rng.uniform(-bracket, bracket);
        const double d = rng.uniform(-bracket, bracket);

        Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(4, 4);
        sigma.topLeftCorner<2, 2>() = mode_a.sigma;
        sigma(2, 2) = sigma(3, 3) = b2;
        sigma(0, 2) = sigma(2, 0) = c;
        sigma(1, 3) = sigma(3, 1) = d;
        if (!is_bona_fide(sigma)) continue;

        Eigen::VectorXd eps = Eigen::VectorXd::Zero(4);
        eps(0) = split.eps_x;
        eps(1) = split.eps_y;
        put(raw, "nu", nu);
        put(raw, "r", r);
        put(raw, "phi", phi);
        put(raw, "b2", b2);
        put(raw, "c", c);
        put(raw, "d", d);
        put(raw, "eps_x", split.eps_x);
        put(raw, "eps_y", split.eps_y);
        return {sigma, eps};
    }
    throw SamplingExhaustedError(class_name(StateClass::TwoModeGeneral), ranges.attempt_cap);
}

}  // namespace

SubstreamRng SubstreamRng::for_index(std::uint64_t seed, std::uint64_t index) {
    return SubstreamRng(mix64(seed) ^ mix64(0x5851F42D4C957F2Dull * (index + 1)));
}

std::uint64_t SubstreamRng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SubstreamRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SubstreamRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

GaussianState sample_one(StateClass tag, double n_a, SubstreamRng& rng,
                         const SamplerRanges& ranges, std::map<std::string, double>* raw) {
    if (n_a < 0.0) throw std::invalid_argument("sample_one: n_A must be >= 0");
    switch (tag) {
        case StateClass::SingleThermal: {
            put(raw, "nu", 2.0 * n_a + 1.0);
            return thermal(n_a);
        }
        case StateClass::SinglePureSqueezed: {
            const double r = std::asinh(std::sqrt(n_a));
            const double phi = rng.uniform(0.0, std::numbers::pi);
            put(raw, "r", r);
            put(raw, "phi", phi);
            return pure_squeezed(r, phi, 0.0, 0.0);
        }
        case StateClass::SingleCoherent: {
            const EnergySplit split = draw_split(n_a, rng, true);
            const double a = 1.0 + 2.0 * split.cm_energy;
            put(raw, "a", a);
            put(raw, "eps_x", split.eps_x);
            put(raw, "eps_p", split.eps_y);
            Eigen::VectorXd eps(2);
            eps << split.eps_x, split.eps_y;
            return {a * Eigen::MatrixXd::Identity(2, 2), eps};
        }
        case StateClass::SingleGeneral: {
            const EnergySplit split = draw_split(n_a, rng, true);
            double nu, r, phi;
            draw_squeezed_thermal(split.cm_energy, rng, nu, r, phi);
            put(raw, "nu", nu);
            put(raw, "r", r);
            put(raw, "phi", phi);
            put(raw, "eps_x", split.eps_x);
            put(raw, "eps_p", split.eps_y);
            return single_mode_general(nu, r, phi, split.eps_x, split.eps_y);
        }
        case StateClass::TwoModeGeneral:
            return sample_two_mode_general(n_a, rng, ranges, raw);
        case StateClass::SeparableStandard: {
            // standard form carries no displacement: the class ceiling
            // 3 - 1/(1+2n) + 2n only holds for classical diagonal states
            const double w = rng.uniform();
            const double a1 = 1.0 + 4.0 * n_a * w;
            const double b1 = 1.0 + 4.0 * n_a * (1.0 - w);
            const double b2 = rng.uniform(1.0, 1.0 + ranges.b_scale * std::max(n_a, 0.1));
            put(raw, "a1", a1);
            put(raw, "b1", b1);
            put(raw, "b2", b2);
            StateClassSpec spec{StateClass::SeparableStandard,
                                {{"a1", a1}, {"b1", b1}, {"b2", b2}}};
            return two_mode_from_class(spec);
        }
        case StateClass::Discordant: {
            const EnergySplit split = draw_split(n_a, rng, true);
            const double a = 1.0 + 2.0 * split.cm_energy;
            const double b = rng.uniform(1.0, 1.0 + ranges.b_scale * std::max(n_a, 0.1));
            const double c_max = std::sqrt(std::max(0.0, (a - 1.0) * (b - 1.0)));
            const double c = rng.uniform(-c_max, c_max);
            put(raw, "a", a);
            put(raw, "b", b);
            put(raw, "c", c);
            put(raw, "eps_x", split.eps_x);
            put(raw, "eps_y", split.eps_y);
            StateClassSpec spec{StateClass::Discordant,
                                {{"a", a},
                                 {"b", b},
                                 {"c", c},
                                 {"eps_x", split.eps_x},
                                 {"eps_y", split.eps_y}}};
            return two_mode_from_class(spec);
        }
        case StateClass::EntangledStandard: {
            const double a = 2.0 * n_a + 1.0;  // fixed by the energy of mode A
            const double b = rng.uniform(1.0, 1.0 + ranges.b_scale * std::max(n_a, 0.1));
            // nu~ drawn uniformly over the reachable sliver [floor, 1], then
            // c solved in closed form: c^2 = (a - nu~)(b - nu~). Covers the
            // whole (E_N, H) plane up to the TMSV endpoint without rejection.
            const double nu_lo = entangled_nu_tilde_floor(a, b);
            const double nu_tilde = nu_lo + rng.uniform() * (1.0 - nu_lo);
            const double c = std::sqrt(std::max(0.0, (a - nu_tilde) * (b - nu_tilde)));
            put(raw, "a", a);
            put(raw, "b", b);
            put(raw, "c", c);
            StateClassSpec spec{StateClass::EntangledStandard, {{"a", a}, {"b", b}, {"c", c}}};
            return two_mode_from_class(spec);
        }
        case StateClass::Tmsv: {
            const double r = std::asinh(std::sqrt(n_a));
            put(raw, "r", r);
            return tmsv(r);
        }
    }
    throw std::invalid_argument("sample_one: unknown class");
}

std::vector<GaussianState> sample_class(StateClass tag, double n_a, int count, std::uint64_t seed,
                                        const SamplerRanges& ranges) {
    if (count < 1) throw std::invalid_argument("sample_class: count must be >= 1");
    std::vector<GaussianState> states;
    states.reserve(count);
    for (int i = 0; i < count; ++i) {
        SubstreamRng rng = SubstreamRng::for_index(seed, static_cast<std::uint64_t>(i));
        states.push_back(sample_one(tag, n_a, rng, ranges));
    }
    return states;
}

namespace {

std::vector<SweepRecord> run_indexed(StateClass tag, int count, std::uint64_t seed,
                                     const QfiConfig& cfg, const SamplerRanges& ranges,
                                     int workers, double fixed_n_a, double scatter_n_max);

}  // namespace

std::vector<SweepRecord> run_sweep(StateClass tag, double n_a, int count, std::uint64_t seed,
                                   const QfiConfig& cfg, const SamplerRanges& ranges,
                                   int workers) {
    return run_indexed(tag, count, seed, cfg, ranges, workers, n_a, -1.0);
}

std::vector<SweepRecord> run_scatter(StateClass tag, double n_max, int count, std::uint64_t seed,
                                     const QfiConfig& cfg, const SamplerRanges& ranges,
                                     int workers) {
    if (n_max <= 0.0) throw std::invalid_argument("run_scatter: n_max must be positive");
    return run_indexed(tag, count, seed, cfg, ranges, workers, 0.0, n_max);
}

namespace {

std::vector<SweepRecord> run_indexed(StateClass tag, int count, std::uint64_t seed,
                                     const QfiConfig& cfg, const SamplerRanges& ranges,
                                     int workers, double fixed_n_a, double scatter_n_max) {
    if (count < 1) throw std::invalid_argument("run_sweep: count must be >= 1");
    cfg.validate();
    std::vector<SweepRecord> records(count);

    const auto evaluate = [&](int index) {
        SubstreamRng rng = SubstreamRng::for_index(seed, static_cast<std::uint64_t>(index));
        SweepRecord record;
        record.class_tag = tag;
        record.n_a = scatter_n_max > 0.0 ? scatter_n_max * (1.0 - rng.uniform()) : fixed_n_a;
        const GaussianState state =
            sample_one(tag, record.n_a, rng, ranges, &record.raw_parameters);
        record.state_seed = rng.initial_state();
        record.avg_qfi = avg_qfi(state, cfg);
        if (is_single_mode_class(tag))
            record.coherence = coherence(state);
        else
            record.log_negativity = log_negativity(state);
        records[index] = std::move(record);
    };

    const int n_workers = std::max(1, workers);
    if (n_workers == 1 || count < 4) {
        for (int i = 0; i < count; ++i) evaluate(i);
        return records;
    }
    std::vector<std::thread> pool;
    std::atomic<int> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int index = cursor.fetch_add(1);
                if (index >= count || failed.load()) return;
                try {
                    evaluate(index);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    failed = true;
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& thread : pool) thread.join();
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

}  // namespace

std::vector<std::pair<double, double>> lower_envelope(const std::vector<SweepRecord>& records,
                                                      int n_bins) {
    if (n_bins < 5) throw std::invalid_argument("lower_envelope: n_bins must be >= 5");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    int usable = 0;
    for (const auto& record : records) {
        if (!record.log_negativity) continue;
        lo = std::min(lo, *record.log_negativity);
        hi = std::max(hi, *record.log_negativity);
        ++usable;
    }
    if (usable == 0) throw InsufficientDataError("lower_envelope: no records carry E_N");

    if (hi - lo < 1e-12) {
        double min_qfi = std::numeric_limits<double>::infinity();
        for (const auto& record : records)
            if (record.log_negativity) min_qfi = std::min(min_qfi, record.avg_qfi);
        return {{lo, min_qfi}};
    }

    const double width = (hi - lo) / n_bins;
    std::vector<double> minima(n_bins, std::numeric_limits<double>::infinity());
    for (const auto& record : records) {
        if (!record.log_negativity) continue;
        int bin = static_cast<int>((*record.log_negativity - lo) / width);
        bin = std::clamp(bin, 0, n_bins - 1);
        minima[bin] = std::min(minima[bin], record.avg_qfi);
    }
    std::vector<std::pair<double, double>> envelope;
    for (int bin = 0; bin < n_bins; ++bin) {
        if (!std::isfinite(minima[bin])) continue;
        envelope.emplace_back(lo + (bin + 0.5) * width, minima[bin]);
    }
    if (static_cast<int>(envelope.size()) < n_bins / 2)
        throw InsufficientDataError("lower_envelope: fewer than n_bins/2 nonempty bins");
    return envelope;
}

void default_fit_init(const std::vector<std::pair<double, double>>& points, double& a1, double& a2,
                      double& b1) {
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    for (const auto& [x, y] : points) {
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    a2 = y_min - 0.05 * std::max(1.0, y_max - y_min);
    // log-linear regression of log(y - a2) on x
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [x, y] : points) {
        if (y <= a2) continue;
        const double ly = std::log(y - a2);
        sx += x;
        sy += ly;
        sxx += x * x;
        sxy += x * ly;
        ++n;
    }
    if (n >= 2 && sxx * n - sx * sx > 1e-12) {
        b1 = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        a1 = std::exp((sy - b1 * sx) / n);
    } else {
        b1 = 1.0;
        a1 = std::max(1e-3, y_max - y_min);
    }
}

FitResult fit_exponential(const std::vector<std::pair<double, double>>& points, double init_a1,
                          double init_a2, double init_b1, int max_iter, double tol) {
    const int n = static_cast<int>(points.size());
    if (n < 4) throw InsufficientDataError("fit_exponential: need at least 4 points");
    if (max_iter < 1) throw std::invalid_argument("fit_exponential: max_iter must be >= 1");

    FitResult result;
    result.n_points = n;

    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    for (const auto& [x, y] : points) {
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    if (y_max - y_min < 1e-12 * std::max(1.0, std::abs(y_max))) {
        // degenerate constant data: the A1 = 0 branch
        double mean = 0.0;
        for (const auto& [x, y] : points) mean += y;
        result.a1 = 0.0;
        result.a2 = mean / n;
        result.b1 = 0.0;
        result.converged = true;
        return result;
    }

    Eigen::Vector3d params(init_a1, init_a2, init_b1);
    const auto sse = [&](const Eigen::Vector3d& p) {
        double acc = 0.0;
        for (const auto& [x, y] : points) {
            const double r = y - (p(0) * std::exp(p(2) * x) + p(1));
            acc += r * r;
        }
        return acc;
    };

    double current = sse(params);
    for (int iter = 0; iter < max_iter; ++iter) {
        result.iterations = iter + 1;
        Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
        Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
        for (const auto& [x, y] : points) {
            const double e = std::exp(params(2) * x);
            const double r = y - (params(0) * e + params(1));
            Eigen::Vector3d row(e, 1.0, params(0) * x * e);
            jtj += row * row.transpose();
            jtr += row * r;
        }
        Eigen::FullPivLU<Eigen::Matrix3d> lu(jtj);
        if (!lu.isInvertible()) {
            // Levenberg damping as a last resort before declaring degeneracy
            jtj += 1e-8 * jtj.trace() * Eigen::Matrix3d::Identity();
            lu.compute(jtj);
            if (!lu.isInvertible())
                throw FitDegenerateError("fit_exponential: singular normal equations");
        }
        Eigen::Vector3d step = lu.solve(jtr);

        double scale = 1.0;
        Eigen::Vector3d next = params + step;
        double next_sse = sse(next);
        int halvings = 0;
        while (next_sse > current && halvings < 40) {
            scale *= 0.5;
            next = params + scale * step;
            next_sse = sse(next);
            ++halvings;
        }
        if (halvings == 40)
            throw FitDegenerateError("fit_exponential: no descent direction after damping floor");

        params = next;
        const double previous = current;
        current = next_sse;
        if ((scale * step).norm() < tol) {
            result.converged = true;
            break;
        }
        if (std::abs(previous - current) < 1e-15 * std::max(1.0, previous)) {
            result.converged = true;
            break;
        }
    }

    result.a1 = params(0);
    result.a2 = params(1);
    result.b1 = params(2);
    result.mse = current / n;

    double mean_sq = current / n;
    double var = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (params(0) * std::exp(params(2) * x) + params(1));
        var += (r * r - mean_sq) * (r * r - mean_sq);
    }
    result.delta_mse = std::sqrt(var / n);
    return result;
}

}  // namespace gqfi
