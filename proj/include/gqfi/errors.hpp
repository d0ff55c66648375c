#pragma once

#include <stdexcept>
#include <string>

namespace gqfi {

/// Rejection sampling hit the attempt cap before finding a physical state.
class SamplingExhaustedError : public std::runtime_error {
public:
    SamplingExhaustedError(const std::string& class_tag, int attempts)
        : std::runtime_error("sampling exhausted for class '" + class_tag + "' after " +
                             std::to_string(attempts) + " attempts"),
          class_tag_(class_tag) {}
    const std::string& class_tag() const { return class_tag_; }

private:
    std::string class_tag_;
};

/// A covariance matrix failed the bona fide (uncertainty relation) check.
class UnphysicalStateError : public std::runtime_error {
public:
    UnphysicalStateError(const std::string& what, double min_symplectic_eigenvalue)
        : std::runtime_error(what + " (min symplectic eigenvalue " +
                             std::to_string(min_symplectic_eigenvalue) + ")"),
          min_nu_(min_symplectic_eigenvalue) {}
    double min_symplectic_eigenvalue() const { return min_nu_; }

private:
    double min_nu_;
};

/// Too few usable points for an envelope or regression.
class InsufficientDataError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Normal equations stayed singular through the damping floor.
class FitDegenerateError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fock truncation too aggressive for the requested state.
class CutoffTooSmallError : public std::runtime_error {
public:
    CutoffTooSmallError(const std::string& recipe, int cutoff, int suggested)
        : std::runtime_error("cutoff " + std::to_string(cutoff) + " too small for recipe '" +
                             recipe + "', suggest >= " + std::to_string(suggested)),
          suggested_(suggested) {}
    int suggested_cutoff() const { return suggested_; }

private:
    int suggested_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gqfi
