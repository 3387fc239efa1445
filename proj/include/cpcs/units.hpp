#pragma once

#include <string>

#include "cpcs/errors.hpp"

namespace cpcs {

// Physical constants, CODATA 2018. All internal computation is SI.
//
// The struct is a value so tests can pass a rescaled copy (e.g. lengths in
// mm instead of m) through any evaluator; dimensionally consistent formulas
// give the same physical answer either way, which is what the unit-audit
// test exploits.
struct Constants {
    double c;           // speed of light [m/s]
    double hbar;        // reduced Planck constant [J s]
    double eps0;        // vacuum permittivity [F/m]
    double mu0;         // vacuum permeability [H/m], kept equal to 1/(eps0 c^2)
    double e_a0;        // atomic dipole unit e*a0 [C m]
    double mu_B;        // Bohr magneton [J/T]
    double eV_to_radps; // e/hbar [rad/s per eV]
    double eV;          // 1 eV [J]

    /// Relative residual of mu0*eps0*c^2 = 1.
    double consistency_residual() const;

    /// Copy with the length unit scaled: 1 new unit = 1/lambda metres.
    /// Numeric values change by lambda^(length dimension of the quantity).
    Constants rescaled_length(double lambda) const;
};

/// CODATA-2018 SI constants. Checked once at first use: throws input_error
/// if the mu0 = 1/(eps0 c^2) identity fails beyond 1e-14 relative.
const Constants& si_constants();

enum class DipoleUnit { e_a0, C_m };
enum class MagneticUnit { mu_B, J_per_T };
enum class FrequencyUnit { eV, rad_per_s };

double convert_dipole(double value, DipoleUnit unit, const Constants& k = si_constants());
double convert_magnetic(double value, MagneticUnit unit, const Constants& k = si_constants());
double convert_frequency(double value, FrequencyUnit unit, const Constants& k = si_constants());

DipoleUnit parse_dipole_unit(const std::string& tag);
MagneticUnit parse_magnetic_unit(const std::string& tag);
FrequencyUnit parse_frequency_unit(const std::string& tag);

inline constexpr const char* kConstantsVersion = "CODATA-2018";

} // namespace cpcs
