#include "cpcs/layer.hpp"

#include <charconv>
#include <cmath>

#include "cpcs/tensor.hpp"

namespace cpcs {

double CoefficientSet::flux_defect_s() const {
    return r_s * r_s + r_sp * r_sp + t_s * t_s + t_sp * t_sp - 1.0;
}

double CoefficientSet::flux_defect_p() const {
    return r_p * r_p + r_ps * r_ps + t_p * t_p + t_ps * t_ps - 1.0;
}

CoefficientSet scattering_coefficients(double a) {
    if (!std::isfinite(a)) throw input_error("scattering_coefficients: non-finite coupling");
    const double den = 1.0 + a * a;
    CoefficientSet c;
    c.r_s = -a * a / den;
    c.r_p = a * a / den;
    c.r_sp = a / den;
    c.r_ps = a / den;
    c.t_s = 1.0 / den;
    c.t_p = 1.0 / den;
    c.t_sp = -a / den;
    c.t_ps = a / den;
    return c;
}

CoefficientSet duality_transform(const CoefficientSet& c) {
    CoefficientSet d;
    d.r_s = c.r_p;
    d.r_p = c.r_s;
    d.r_sp = c.r_ps;
    d.r_ps = c.r_sp;
    d.t_s = c.t_p;
    d.t_p = c.t_s;
    d.t_sp = c.t_ps;
    d.t_ps = c.t_sp;
    return d;
}

MirrorSpec MirrorSpec::chern_simons(double a) {
    if (!std::isfinite(a)) throw input_error("mirror: non-finite Chern-Simons coupling");
    return {MirrorKind::ChernSimons, a, +1};
}

MirrorSpec MirrorSpec::perfect_nonreciprocal(int sign) {
    if (sign != 1 && sign != -1) throw input_error("mirror: nrp sign must be +1 or -1");
    return {MirrorKind::PerfectNonreciprocal, 0.0, sign};
}

MirrorSpec MirrorSpec::perfect_conductor() { return {MirrorKind::PerfectConductor, 0.0, +1}; }

double MirrorSpec::f_cross() const {
    switch (kind) {
        case MirrorKind::ChernSimons: return a / (1.0 + a * a);
        case MirrorKind::PerfectNonreciprocal: return static_cast<double>(sign);
        case MirrorKind::PerfectConductor: return 0.0;
    }
    throw input_error("mirror: bad kind");
}

double MirrorSpec::f_sym() const {
    switch (kind) {
        case MirrorKind::ChernSimons: return a * a / (1.0 + a * a);
        case MirrorKind::PerfectNonreciprocal: return 0.0;
        case MirrorKind::PerfectConductor: return 1.0;
    }
    throw input_error("mirror: bad kind");
}

CoefficientSet MirrorSpec::coefficients() const {
    CoefficientSet c;
    switch (kind) {
        case MirrorKind::ChernSimons: return scattering_coefficients(a);
        case MirrorKind::PerfectNonreciprocal:
            c.r_sp = c.r_ps = static_cast<double>(sign);
            return c;
        case MirrorKind::PerfectConductor:
            c.r_s = -1.0;
            c.r_p = 1.0;
            return c;
    }
    throw input_error("mirror: bad kind");
}

CoefficientSet mirror_preset(const MirrorSpec& spec) { return spec.coefficients(); }

MirrorSpec MirrorSpec::parse(std::string_view text) {
    if (text == "pc") return perfect_conductor();
    if (text == "nrp:+1") return perfect_nonreciprocal(+1);
    if (text == "nrp:-1") return perfect_nonreciprocal(-1);
    constexpr std::string_view prefix = "cs:a=";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string_view num = text.substr(prefix.size());
        double a = 0.0;
        const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), a);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw input_error("mirror: bad coupling value '" + std::string(num) + "'");
        return chern_simons(a);
    }
    throw input_error("mirror: bad spec '" + std::string(text) +
                      "' (expected cs:a=<float> | nrp:+1 | nrp:-1 | pc)");
}

std::string MirrorSpec::str() const {
    switch (kind) {
        case MirrorKind::ChernSimons: {
            char buf[48];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, a);
            (void)ec;
            return "cs:a=" + std::string(buf, ptr);
        }
        case MirrorKind::PerfectNonreciprocal: return sign > 0 ? "nrp:+1" : "nrp:-1";
        case MirrorKind::PerfectConductor: return "pc";
    }
    throw input_error("mirror: bad kind");
}

namespace {

struct PlaneWave {
    CVec3 E{}, H{};
};

// khat must be a unit vector. s wave: E along x. p wave: H along x.
PlaneWave s_wave(const Vec3& khat, double amp) {
    PlaneWave w;
    w.E = {amp, 0.0, 0.0};
    const Vec3 h = cross(khat, Vec3{amp, 0.0, 0.0});
    w.H = {h[0], h[1], h[2]};
    return w;
}

PlaneWave p_wave(const Vec3& khat, double amp) {
    PlaneWave w;
    w.H = {amp, 0.0, 0.0};
    const Vec3 e = cross(khat, Vec3{amp, 0.0, 0.0});
    w.E = {-e[0], -e[1], -e[2]};
    return w;
}

void accumulate(PlaneWave& acc, const PlaneWave& w) {
    for (int i = 0; i < 3; ++i) {
        acc.E[i] += w.E[i];
        acc.H[i] += w.H[i];
    }
}

} // namespace

std::array<std::complex<double>, 3> continuity_residual(double a, Polarization incident,
                                                        double k_y, double k_z) {
    if (!(k_z > 0.0) || !std::isfinite(k_z) || !std::isfinite(k_y))
        throw input_error("continuity_residual: require finite k_y and k_z > 0");
    const CoefficientSet c = scattering_coefficients(a);

    const double w = std::hypot(k_y, k_z); // omega/c of the propagating wave
    const Vec3 k_in = {0.0, k_y / w, -k_z / w};
    const Vec3 k_re = {0.0, k_y / w, k_z / w};

    // All five plane waves evaluated at z = 0; the common transverse/time
    // phase drops out of the linear conditions.
    PlaneWave up{}, down{};
    if (incident == Polarization::s) {
        accumulate(up, s_wave(k_in, 1.0));
        accumulate(up, s_wave(k_re, c.r_s));
        accumulate(up, p_wave(k_re, c.r_sp));
        accumulate(down, s_wave(k_in, c.t_s));
        accumulate(down, p_wave(k_in, c.t_sp));
    } else {
        accumulate(up, p_wave(k_in, 1.0));
        accumulate(up, p_wave(k_re, c.r_p));
        accumulate(up, s_wave(k_re, c.r_ps));
        accumulate(down, p_wave(k_in, c.t_p));
        accumulate(down, s_wave(k_in, c.t_ps));
    }

    // E_x, E_y and H_z are continuous; the jump conditions read off the
    // downside values for the continuous fields.
    return {
        (up.E[2] - down.E[2]) + 2.0 * a * down.H[2],
        (up.H[0] - down.H[0]) - 2.0 * a * down.E[0],
        (up.H[1] - down.H[1]) - 2.0 * a * down.E[1],
    };
}

} // namespace cpcs
