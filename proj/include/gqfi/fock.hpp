#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gqfi/states.hpp"

namespace gqfi::fock {

/// Truncated number-basis density matrix. For two-mode states the basis is
/// |n_A n_B> with flat index n_A * cutoff + n_B. Unitarily-constructed pure
/// states also carry their state vector, which the fidelity and QFI paths
/// use to skip the dense eigendecompositions.
struct FockDensityMatrix {
    Eigen::MatrixXcd entries;
    Eigen::VectorXcd pure_vector;  // empty for mixed states
    int cutoff = 0;
    int n_modes = 1;
    double trace_deficit = 0.0;  // 1 - trace
    double tail_weight = 0.0;    // population of the top two levels per mode

    bool is_pure() const { return pure_vector.size() > 0; }
};

struct Recipe {
    enum class Kind { Thermal, Coherent, SqueezedVacuum, SqueezedThermal, Tmsv };
    Kind kind = Kind::Thermal;
    double p1 = 0.0;  // n_bar | alpha | r | r        | r
    double p2 = 0.0;  //       |       |   | nu (>=1) |

    std::string name() const;
    /// The Gaussian state this recipe describes, for agreement checks.
    GaussianState gaussian() const;
};

Recipe thermal_recipe(double n_bar);
Recipe coherent_recipe(double alpha);
Recipe squeezed_vacuum_recipe(double r);
Recipe squeezed_thermal_recipe(double r, double nu);
Recipe tmsv_recipe(double r);

/// Annihilation operator on a cutoff-dimensional space.
Eigen::MatrixXcd annihilation(int cutoff);

/// Dense matrix exponential (scaling and squaring).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& generator);

/// Build the density matrix of a recipe; throws CutoffTooSmallError when the
/// truncation loses more than deficit_bound of the state.
FockDensityMatrix build_fock(const Recipe& recipe, int cutoff, double deficit_bound = 1e-8);

double fidelity_fock(const FockDensityMatrix& rho1, const FockDensityMatrix& rho2);
double entropy_fock(const FockDensityMatrix& rho);  // bits
double negativity_fock(const FockDensityMatrix& rho_ab);

/// Finite-difference QFI mirroring metrology::qfi_theta, evaluated on the
/// truncated density matrix with the same rotation/squeezer generators.
double qfi_fock(const Recipe& recipe, double theta, int cutoff, double d_eps,
                bool richardson = true);

/// One row of the Gaussian-vs-Fock agreement report.
struct OracleCheck {
    std::string quantity;
    std::string recipe;
    double gaussian_value = 0.0;
    double fock_value = 0.0;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    int cutoff = 0;
    bool pass = false;
    std::string error;  // set when the check aborted (e.g. cutoff too small)
};

/// Full agreement matrix at the given cutoffs (single-mode / two-mode).
std::vector<OracleCheck> run_oracle_checks(int cutoff_single, int cutoff_two,
                                           double d_eps = 1e-3);

}  // namespace gqfi::fock
