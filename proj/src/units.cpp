#include "cpcs/units.hpp"

#include <cmath>

namespace cpcs {

namespace {

Constants make_codata2018() {
    Constants k{};
    // Exact SI defining constants (2019 redefinition).
    k.c = 299792458.0;                 // exact
    const double h = 6.62607015e-34;   // exact
    const double e = 1.602176634e-19;  // exact
    k.hbar = 1.054571817e-34;          // h/(2 pi), CODATA listed value
    // Measured (CODATA 2018).
    k.eps0 = 8.8541878128e-12;
    const double a0 = 5.29177210903e-11;
    k.mu_B = 9.2740100783e-24;
    // Derived, so the mu0*eps0*c^2 = 1 invariant holds by construction.
    k.mu0 = 1.0 / (k.eps0 * k.c * k.c);
    k.e_a0 = e * a0;
    k.eV = e;
    k.eV_to_radps = e / k.hbar;
    (void)h;
    return k;
}

} // namespace

double Constants::consistency_residual() const {
    return std::abs(mu0 * eps0 * c * c - 1.0);
}

Constants Constants::rescaled_length(double lambda) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw input_error("rescaled_length: lambda must be positive and finite");
    Constants k = *this;
    // Length dimensions: c ~ L, hbar ~ L^2 (J s = kg m^2/s), eps0 ~ L^-3
    // (C^2 s^2 kg^-1 m^-3), mu0 ~ L (kg m C^-2), e_a0 ~ L (C m),
    // mu_B ~ L^2 (J/T = C m^2/s), eV ~ L^2 (J), eV_to_radps ~ L^0.
    k.c *= lambda;
    k.hbar *= lambda * lambda;
    k.eps0 /= lambda * lambda * lambda;
    k.mu0 *= lambda;
    k.e_a0 *= lambda;
    k.mu_B *= lambda * lambda;
    k.eV *= lambda * lambda;
    return k;
}

const Constants& si_constants() {
    static const Constants k = [] {
        Constants v = make_codata2018();
        if (v.consistency_residual() > 1e-14)
            throw input_error("constants: mu0*eps0*c^2 deviates from 1 beyond 1e-14");
        return v;
    }();
    return k;
}

double convert_dipole(double value, DipoleUnit unit, const Constants& k) {
    if (!std::isfinite(value)) throw input_error("convert_dipole: non-finite value");
    switch (unit) {
        case DipoleUnit::C_m: return value;
        case DipoleUnit::e_a0: return value * k.e_a0;
    }
    throw input_error("convert_dipole: unknown unit tag");
}

double convert_magnetic(double value, MagneticUnit unit, const Constants& k) {
    if (!std::isfinite(value)) throw input_error("convert_magnetic: non-finite value");
    switch (unit) {
        case MagneticUnit::J_per_T: return value;
        case MagneticUnit::mu_B: return value * k.mu_B;
    }
    throw input_error("convert_magnetic: unknown unit tag");
}

double convert_frequency(double value, FrequencyUnit unit, const Constants& k) {
    if (!std::isfinite(value)) throw input_error("convert_frequency: non-finite value");
    switch (unit) {
        case FrequencyUnit::rad_per_s: return value;
        case FrequencyUnit::eV: return value * k.eV_to_radps;
    }
    throw input_error("convert_frequency: unknown unit tag");
}

DipoleUnit parse_dipole_unit(const std::string& tag) {
    if (tag == "e_a0") return DipoleUnit::e_a0;
    if (tag == "C_m") return DipoleUnit::C_m;
    throw input_error("unknown dipole unit '" + tag + "' (expected e_a0 or C_m)");
}

MagneticUnit parse_magnetic_unit(const std::string& tag) {
    if (tag == "mu_B") return MagneticUnit::mu_B;
    if (tag == "J_per_T") return MagneticUnit::J_per_T;
    throw input_error("unknown magnetic unit '" + tag + "' (expected mu_B or J_per_T)");
}

FrequencyUnit parse_frequency_unit(const std::string& tag) {
    if (tag == "eV") return FrequencyUnit::eV;
    if (tag == "rad_per_s") return FrequencyUnit::rad_per_s;
    throw input_error("unknown frequency unit '" + tag + "' (expected eV or rad_per_s)");
}

} // namespace cpcs
