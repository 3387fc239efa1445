#pragma once

#include <stdexcept>
#include <string>

namespace cpcs {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument, violated precondition, or unparsable input.
struct input_error : error {
    using error::error;
};

/// Molecule / CP-system file does not match the documented schema.
/// The message names the offending field path.
struct schema_error : error {
    using error::error;
};

/// Spectrum data violates its declared symmetry class, or a potential
/// family was requested for an incompatible molecule class.
struct classification_error : error {
    using error::error;
};

/// Degenerate unperturbed levels (perturbation theory requires
/// non-degenerate denominators).
struct degeneracy_error : error {
    using error::error;
};

/// Resonant energy denominator in a real-frequency evaluation.
struct singularity_error : error {
    using error::error;
};

/// Quadrature failed to reach the requested tolerance. Carries the best
/// available estimate so callers can still inspect it.
struct accuracy_error : error {
    accuracy_error(const std::string& msg, double best, double err_est)
        : error(msg), best_estimate(best), error_estimate(err_est) {}
    double best_estimate;
    double error_estimate;
};

} // namespace cpcs
