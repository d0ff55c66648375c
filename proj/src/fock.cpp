#include "gqfi/fock.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "gqfi/errors.hpp"
#include "gqfi/metrology.hpp"
#include "gqfi/quantifiers.hpp"

namespace gqfi::fock {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd herm(const Eigen::MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

Eigen::VectorXd clamped_spectrum(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    Eigen::VectorXd vals = solver.eigenvalues();
    if (vals.minCoeff() < -1e-8)
        throw std::domain_error("fock: density matrix eigenvalue below -1e-8");
    return vals.cwiseMax(0.0);
}

// exp[(r/2)(a'^2 - a^2)] so that the squeezed vacuum has <q^2> = e^{2r},
// matching the Gaussian-side squeezer diag(e^r, e^-r).
Eigen::MatrixXcd squeeze_operator(int cutoff, double r) {
    const Eigen::MatrixXcd a = annihilation(cutoff);
    const Eigen::MatrixXcd adag = a.adjoint();
    return expm(0.5 * r * (adag * adag - a * a));
}

Eigen::MatrixXcd displacement_operator(int cutoff, double alpha) {
    const Eigen::MatrixXcd a = annihilation(cutoff);
    return expm(alpha * (a.adjoint() - a));
}

Eigen::VectorXcd rotation_phases(int cutoff, double theta) {
    Eigen::VectorXcd phases(cutoff);
    for (int n = 0; n < cutoff; ++n) phases(n) = std::exp(Complex(0.0, -theta * n));
    return phases;
}

Eigen::MatrixXcd thermal_diagonal(double n_bar, int cutoff) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    if (n_bar <= 0.0) {
        rho(0, 0) = 1.0;
        return rho;
    }
    const double ratio = n_bar / (n_bar + 1.0);
    double p = 1.0 / (n_bar + 1.0);
    for (int k = 0; k < cutoff; ++k) {
        rho(k, k) = p;
        p *= ratio;
    }
    return rho;
}

// TMSV expansion coefficients from the generator r(a'b' - ab) restricted to
// its invariant subspace span{|nn>}, where it is the antisymmetric
// tridiagonal G(n+1,n) = r(n+1).
Eigen::VectorXd tmsv_diagonal_coefficients(double r, int cutoff) {
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(cutoff, cutoff);
    for (int n = 0; n + 1 < cutoff; ++n) {
        gen(n + 1, n) = r * (n + 1);
        gen(n, n + 1) = -r * (n + 1);
    }
    const Eigen::MatrixXcd u = expm(gen.cast<Complex>());
    return u.col(0).real();
}

double top_level_weight(const FockDensityMatrix& rho) {
    const int d = rho.cutoff;
    double tail = 0.0;
    if (rho.n_modes == 1) {
        for (int k = std::max(0, d - 2); k < d; ++k) tail += rho.entries(k, k).real();
        return tail;
    }
    for (int na = 0; na < d; ++na)
        for (int nb = 0; nb < d; ++nb)
            if (na >= d - 2 || nb >= d - 2) tail += rho.entries(na * d + nb, na * d + nb).real();
    return tail;
}

FockDensityMatrix finalize(Eigen::MatrixXcd entries, int cutoff, int n_modes,
                           const Recipe& recipe, double deficit_bound,
                           Eigen::VectorXcd pure_vector = {}) {
    FockDensityMatrix rho;
    rho.entries = std::move(entries);
    rho.pure_vector = std::move(pure_vector);
    rho.cutoff = cutoff;
    rho.n_modes = n_modes;
    rho.trace_deficit = 1.0 - rho.entries.trace().real();
    rho.tail_weight = top_level_weight(rho);
    // Unitarily built states keep trace 1 exactly, so the edge population is
    // the only truncation signal for them. It overstates the error of
    // spectrum-weighted quantities (the truncated generator is still exactly
    // anti-Hermitian), hence the looser floor.
    if (std::abs(rho.trace_deficit) > deficit_bound || rho.tail_weight > 1e-4)
        throw CutoffTooSmallError(recipe.name(), cutoff, cutoff * 2);
    return rho;
}

Eigen::MatrixXcd apply_mode_a(const Eigen::MatrixXcd& op, const Eigen::MatrixXcd& rho, int cutoff,
                              int n_modes) {
    if (n_modes == 1) return op * rho * op.adjoint();
    const Eigen::MatrixXcd big = Eigen::kroneckerProduct(op, Eigen::MatrixXcd::Identity(cutoff, cutoff));
    return big * rho * big.adjoint();
}

}  // namespace

std::string Recipe::name() const {
    char buf[96];
    switch (kind) {
        case Kind::Thermal: std::snprintf(buf, sizeof buf, "thermal(%g)", p1); break;
        case Kind::Coherent: std::snprintf(buf, sizeof buf, "coherent(%g)", p1); break;
        case Kind::SqueezedVacuum: std::snprintf(buf, sizeof buf, "squeezed_vacuum(%g)", p1); break;
        case Kind::SqueezedThermal:
            std::snprintf(buf, sizeof buf, "squeezed_thermal(%g,%g)", p1, p2);
            break;
        case Kind::Tmsv: std::snprintf(buf, sizeof buf, "tmsv(%g)", p1); break;
    }
    return buf;
}

GaussianState Recipe::gaussian() const {
    switch (kind) {
        case Kind::Thermal: return thermal(p1);
        case Kind::Coherent: return coherent(2.0 * p1, 0.0);
        case Kind::SqueezedVacuum: return pure_squeezed(p1, 0.0, 0.0, 0.0);
        case Kind::SqueezedThermal: return single_mode_general(p2, p1, 0.0, 0.0, 0.0);
        case Kind::Tmsv: return tmsv(p1);
    }
    throw std::logic_error("unreachable");
}

Recipe thermal_recipe(double n_bar) { return {Recipe::Kind::Thermal, n_bar, 0.0}; }
Recipe coherent_recipe(double alpha) { return {Recipe::Kind::Coherent, alpha, 0.0}; }
Recipe squeezed_vacuum_recipe(double r) { return {Recipe::Kind::SqueezedVacuum, r, 0.0}; }
Recipe squeezed_thermal_recipe(double r, double nu) {
    return {Recipe::Kind::SqueezedThermal, r, nu};
}
Recipe tmsv_recipe(double r) { return {Recipe::Kind::Tmsv, r, 0.0}; }

Eigen::MatrixXcd annihilation(int cutoff) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& generator) { return generator.exp(); }

FockDensityMatrix build_fock(const Recipe& recipe, int cutoff, double deficit_bound) {
    if (cutoff < 8) throw std::invalid_argument("fock cutoff must be >= 8");
    switch (recipe.kind) {
        case Recipe::Kind::Thermal:
            return finalize(thermal_diagonal(recipe.p1, cutoff), cutoff, 1, recipe, deficit_bound);
        case Recipe::Kind::Coherent: {
            const Eigen::VectorXcd psi = displacement_operator(cutoff, recipe.p1).col(0);
            return finalize(psi * psi.adjoint(), cutoff, 1, recipe, deficit_bound, psi);
        }
        case Recipe::Kind::SqueezedVacuum: {
            const Eigen::VectorXcd psi = squeeze_operator(cutoff, recipe.p1).col(0);
            return finalize(psi * psi.adjoint(), cutoff, 1, recipe, deficit_bound, psi);
        }
        case Recipe::Kind::SqueezedThermal: {
            if (recipe.p2 < 1.0) throw std::invalid_argument("squeezed_thermal: nu must be >= 1");
            const Eigen::MatrixXcd s = squeeze_operator(cutoff, recipe.p1);
            const Eigen::MatrixXcd rho = thermal_diagonal((recipe.p2 - 1.0) / 2.0, cutoff);
            return finalize(s * rho * s.adjoint(), cutoff, 1, recipe, deficit_bound);
        }
        case Recipe::Kind::Tmsv: {
            const Eigen::VectorXd coeff = tmsv_diagonal_coefficients(recipe.p1, cutoff);
            Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(cutoff * cutoff);
            for (int n = 0; n < cutoff; ++n) psi(n * cutoff + n) = coeff(n);
            return finalize(psi * psi.adjoint(), cutoff, 2, recipe, deficit_bound, psi);
        }
    }
    throw std::logic_error("unreachable");
}

double fidelity_fock(const FockDensityMatrix& rho1, const FockDensityMatrix& rho2) {
    if (rho1.entries.rows() != rho2.entries.rows())
        throw std::invalid_argument("fidelity_fock: cutoff mismatch");
    if (rho1.is_pure() && rho2.is_pure())
        return std::norm(rho1.pure_vector.dot(rho2.pure_vector));
    if (rho1.is_pure())
        return (rho1.pure_vector.adjoint() * rho2.entries * rho1.pure_vector)(0).real();
    if (rho2.is_pure())
        return (rho2.pure_vector.adjoint() * rho1.entries * rho2.pure_vector)(0).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm(rho1.entries));
    if (solver.eigenvalues().minCoeff() < -1e-8)
        throw std::domain_error("fidelity_fock: eigenvalue below -1e-8");
    const Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXcd sqrt1 =
        solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
    const Eigen::VectorXd inner = clamped_spectrum(herm(sqrt1 * rho2.entries * sqrt1));
    const double trace_root = inner.cwiseSqrt().sum();
    return trace_root * trace_root;
}

double entropy_fock(const FockDensityMatrix& rho) {
    const Eigen::VectorXd spectrum = clamped_spectrum(herm(rho.entries));
    double s = 0.0;
    for (int i = 0; i < spectrum.size(); ++i)
        if (spectrum(i) > 0.0) s -= spectrum(i) * std::log2(spectrum(i));
    return s;
}

double negativity_fock(const FockDensityMatrix& rho_ab) {
    if (rho_ab.n_modes != 2) throw std::invalid_argument("negativity_fock: two-mode state required");
    const int d = rho_ab.cutoff;
    Eigen::MatrixXcd pt(d * d, d * d);
    for (int ia = 0; ia < d; ++ia)
        for (int ib = 0; ib < d; ++ib)
            for (int ja = 0; ja < d; ++ja)
                for (int jb = 0; jb < d; ++jb)
                    pt(ia * d + jb, ja * d + ib) = rho_ab.entries(ia * d + ib, ja * d + jb);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm(pt), Eigen::EigenvaluesOnly);
    const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, std::log(trace_norm));
}

double qfi_fock(const Recipe& recipe, double theta, int cutoff, double d_eps, bool richardson) {
    const FockDensityMatrix rho0 = build_fock(recipe, cutoff);
    const int n_modes = rho0.n_modes;
    const int dim = static_cast<int>(rho0.entries.rows());

    // rotation exp(-i theta n) on mode A
    Eigen::VectorXcd phases(dim);
    const Eigen::VectorXcd single = rotation_phases(cutoff, theta);
    for (int i = 0; i < dim; ++i) phases(i) = (n_modes == 1) ? single(i) : single(i / cutoff);

    if (rho0.is_pure()) {
        const Eigen::VectorXcd psi_theta = phases.asDiagonal() * rho0.pure_vector;
        const auto estimate = [&](double de) {
            const Eigen::MatrixXcd u = squeeze_operator(cutoff, de);
            Eigen::VectorXcd stepped;
            if (n_modes == 1) {
                stepped = u * psi_theta;
            } else {
                // (U_A x 1_B) psi, with psi reshaped so rows index mode A
                Eigen::Map<const Eigen::MatrixXcd> grid(psi_theta.data(), cutoff, cutoff);
                const Eigen::MatrixXcd moved = grid * u.transpose();
                stepped = Eigen::Map<const Eigen::VectorXcd>(moved.data(), dim);
            }
            const double f = std::min(1.0, std::norm(psi_theta.dot(stepped)));
            return 8.0 * (1.0 - std::sqrt(f)) / (de * de);
        };
        if (!richardson) return estimate(d_eps);
        return 2.0 * estimate(d_eps / 2.0) - estimate(d_eps);
    }

    FockDensityMatrix base = rho0;
    base.entries = phases.asDiagonal() * rho0.entries * phases.conjugate().asDiagonal();
    base.pure_vector.resize(0);

    const auto estimate = [&](double de) {
        const Eigen::MatrixXcd u = squeeze_operator(cutoff, de);
        FockDensityMatrix stepped = base;
        stepped.entries = apply_mode_a(u, base.entries, cutoff, n_modes);
        const double f = std::min(1.0, fidelity_fock(base, stepped));
        return 8.0 * (1.0 - std::sqrt(f)) / (de * de);
    };
    if (!richardson) return estimate(d_eps);
    return 2.0 * estimate(d_eps / 2.0) - estimate(d_eps);
}

std::vector<OracleCheck> run_oracle_checks(int cutoff_single, int cutoff_two, double d_eps) {
    std::vector<OracleCheck> checks;
    const double asinh1 = std::asinh(1.0);  // sinh^2 r = 1

    struct FidPair {
        Recipe r1, r2;
    };
    const std::vector<FidPair> fidelity_pairs = {
        {coherent_recipe(0.0), coherent_recipe(1.0)},
        {thermal_recipe(1.0), thermal_recipe(2.0)},
        {squeezed_vacuum_recipe(0.6), thermal_recipe(1.0)},
        {squeezed_vacuum_recipe(0.4), squeezed_vacuum_recipe(-0.3)},
        {squeezed_thermal_recipe(0.5, 2.0), coherent_recipe(0.8)},
        {squeezed_thermal_recipe(0.4, 3.0), squeezed_thermal_recipe(-0.2, 1.5)},
    };
    for (const auto& pair : fidelity_pairs) {
        OracleCheck check;
        check.quantity = "fidelity";
        check.recipe = pair.r1.name() + " vs " + pair.r2.name();
        check.tolerance = 1e-6;
        check.cutoff = cutoff_single;
        try {
            check.fock_value = fidelity_fock(build_fock(pair.r1, cutoff_single),
                                             build_fock(pair.r2, cutoff_single));
            check.gaussian_value = gaussian_fidelity(pair.r1.gaussian(), pair.r2.gaussian());
            check.abs_diff = std::abs(check.fock_value - check.gaussian_value);
            check.pass = check.abs_diff < check.tolerance;
        } catch (const std::exception& e) {
            check.error = e.what();
        }
        checks.push_back(check);
    }
    {
        // two-mode fidelity through the same Fock machinery
        OracleCheck check;
        check.quantity = "fidelity";
        check.recipe = "tmsv(0.5) vs tmsv(0.3)";
        check.tolerance = 1e-6;
        check.cutoff = cutoff_two;
        try {
            check.fock_value = fidelity_fock(build_fock(tmsv_recipe(0.5), cutoff_two),
                                             build_fock(tmsv_recipe(0.3), cutoff_two));
            check.gaussian_value = gaussian_fidelity(tmsv(0.5), tmsv(0.3));
            check.abs_diff = std::abs(check.fock_value - check.gaussian_value);
            check.pass = check.abs_diff < check.tolerance;
        } catch (const std::exception& e) {
            check.error = e.what();
        }
        checks.push_back(check);
    }

    const std::vector<Recipe> entropy_recipes = {
        thermal_recipe(1.0),
        thermal_recipe(2.5),
        squeezed_thermal_recipe(0.5, 3.0),
        coherent_recipe(1.2),
    };
    for (const auto& recipe : entropy_recipes) {
        OracleCheck check;
        check.quantity = "entropy";
        check.recipe = recipe.name();
        check.tolerance = 1e-6;
        check.cutoff = cutoff_single;
        try {
            check.fock_value = entropy_fock(build_fock(recipe, cutoff_single));
            check.gaussian_value = von_neumann_entropy(recipe.gaussian());
            check.abs_diff = std::abs(check.fock_value - check.gaussian_value);
            check.pass = check.abs_diff < check.tolerance;
        } catch (const std::exception& e) {
            check.error = e.what();
        }
        checks.push_back(check);
    }

    for (double r : {std::asinh(1.0), 0.3}) {
        OracleCheck check;
        check.quantity = "log_negativity";
        check.recipe = tmsv_recipe(r).name();
        check.tolerance = 1e-4;
        check.cutoff = cutoff_two;
        try {
            check.fock_value = negativity_fock(build_fock(tmsv_recipe(r), cutoff_two));
            check.gaussian_value = log_negativity(tmsv(r));
            check.abs_diff = std::abs(check.fock_value - check.gaussian_value);
            check.pass = check.abs_diff < check.tolerance;
        } catch (const std::exception& e) {
            check.error = e.what();
        }
        checks.push_back(check);
    }

    struct QfiCase {
        Recipe recipe;
        double theta;
    };
    const std::vector<QfiCase> qfi_cases = {
        {coherent_recipe(0.0), 0.4},
        {thermal_recipe(1.0), 0.7},
        {coherent_recipe(1.0), 0.0},
        {coherent_recipe(1.0), std::numbers::pi / 4.0},
        {squeezed_vacuum_recipe(asinh1), std::numbers::pi / 4.0},
        {squeezed_thermal_recipe(0.4, 2.0), 1.1},
        {tmsv_recipe(0.5), 0.9},
    };
    for (const auto& item : qfi_cases) {
        OracleCheck check;
        check.quantity = "qfi_theta";
        check.recipe = item.recipe.name() + " @ theta=" + std::to_string(item.theta);
        check.cutoff = item.recipe.kind == Recipe::Kind::Tmsv ? cutoff_two : cutoff_single;
        try {
            check.fock_value = qfi_fock(item.recipe, item.theta, check.cutoff, d_eps);
            QfiConfig cfg;
            cfg.d_epsilon = d_eps;
            check.gaussian_value = qfi_theta(item.recipe.gaussian(), item.theta, cfg);
            check.abs_diff = std::abs(check.fock_value - check.gaussian_value);
            check.tolerance = 1e-2 * std::abs(check.gaussian_value);
            check.pass = check.abs_diff < check.tolerance;
        } catch (const std::exception& e) {
            check.error = e.what();
        }
        checks.push_back(check);
    }
    return checks;
}

}  // namespace gqfi::fock
