#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "cpcs/errors.hpp"

namespace cpcs {

/// The eight reflection/transmission amplitudes of a planar mirror.
/// Angle- and frequency-independent: the thin-layer boundary problem yields
/// constants, so one set describes the mirror at every (q, xi).
struct CoefficientSet {
    double r_s = 0.0, r_p = 0.0;    // co-polarized reflection
    double r_sp = 0.0, r_ps = 0.0;  // cross-polarized reflection (s->p, p->s)
    double t_s = 0.0, t_p = 0.0;    // co-polarized transmission
    double t_sp = 0.0, t_ps = 0.0;  // cross-polarized transmission

    /// r_s^2 + r_sp^2 + t_s^2 + t_sp^2 - 1; identically zero for a lossless
    /// polarization-converting layer.
    double flux_defect_s() const;
    double flux_defect_p() const;

    bool reciprocal() const { return r_sp == 0.0 && r_ps == 0.0; }
};

/// Coefficients of a layer with coupling constant a:
///   r_s = -a^2/(1+a^2), r_p = +a^2/(1+a^2), r_sp = r_ps = a/(1+a^2),
///   t_s = t_p = 1/(1+a^2), t_sp = -a/(1+a^2), t_ps = +a/(1+a^2).
/// a may have either sign (reversed external field reverses a).
CoefficientSet scattering_coefficients(double a);

/// Swap the s and p labels on all eight amplitudes. An involution.
CoefficientSet duality_transform(const CoefficientSet& c);

enum class MirrorKind { ChernSimons, PerfectNonreciprocal, PerfectConductor };

/// Mirror preset. f_cross and f_sym are derived from the kind on demand:
///   ChernSimons(a):          f_cross = a/(1+a^2),  f_sym = a^2/(1+a^2)
///   PerfectNonreciprocal(s): f_cross = s (+-1),    f_sym = 0
///   PerfectConductor:        f_cross = 0,          f_sym = 1
struct MirrorSpec {
    MirrorKind kind = MirrorKind::PerfectConductor;
    double a = 0.0;  // ChernSimons only
    int sign = +1;   // PerfectNonreciprocal only

    static MirrorSpec chern_simons(double a);
    static MirrorSpec perfect_nonreciprocal(int sign);
    static MirrorSpec perfect_conductor();

    double f_cross() const;
    double f_sym() const;
    CoefficientSet coefficients() const;

    /// Mini-grammar: "cs:a=<float>" | "nrp:+1" | "nrp:-1" | "pc".
    static MirrorSpec parse(std::string_view text);
    std::string str() const;
};

CoefficientSet mirror_preset(const MirrorSpec& spec);

enum class Polarization { s, p };

/// Residuals of the three layer continuity conditions at z = 0, for a unit
/// incident plane wave with transverse wavenumber k_y and normal component
/// k_z > 0, fields built from the scattering coefficients:
///   (E_z jump + 2a H_z,  H_x jump - 2a E_x,  H_y jump - 2a E_y).
/// Convention: time factor exp(-i w t + i k_y y), incident wavevector
/// (0, k_y, -k_z) coming from z > 0; per plane wave H = khat x E and
/// E = -khat x H in natural units (E, H share units; incident amplitude 1).
std::array<std::complex<double>, 3> continuity_residual(double a, Polarization incident,
                                                        double k_y, double k_z);

} // namespace cpcs
