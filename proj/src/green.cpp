#include "cpcs/green.hpp"

#include <cmath>
#include <numbers>

namespace cpcs {

namespace {

constexpr double pi = std::numbers::pi;

struct RadialIntegrals {
    double i0, i1, i2; // int_{xi/c}^inf beta^n e^{-2 beta z} dbeta
    double j;          // int q^2 e^{-2 beta z} dbeta = i2 - (xi/c)^2 i0
};

RadialIntegrals radial_integrals(double z, double xi, double c) {
    const double x = xi * z / c;
    const double e = std::exp(-2.0 * x);
    RadialIntegrals r{};
    r.i0 = e / (2.0 * z);
    r.i1 = e * (1.0 + 2.0 * x) / (4.0 * z * z);
    r.i2 = e * (1.0 + 2.0 * x + 2.0 * x * x) / (4.0 * z * z * z);
    r.j = e * (1.0 + 2.0 * x) / (4.0 * z * z * z);
    return r;
}

void check_coincident_args(double z_A, double xi) {
    if (!(z_A > 0.0) || !std::isfinite(z_A))
        throw input_error("green: require z_A > 0");
    if (!(xi > 0.0) || !std::isfinite(xi)) throw input_error("green: require xi > 0");
}

} // namespace

ReducedGreen green_coincident_reduced(double z_A, double xi, const CoefficientSet& c,
                                      const Constants& k) {
    check_coincident_args(z_A, xi);
    const auto ri = radial_integrals(z_A, xi, k.c);
    const double c2x2 = k.c * k.c / (xi * xi);
    ReducedGreen g;
    g.t = (c.r_s * ri.i0 - c.r_p * c2x2 * ri.i2) / (8.0 * pi);
    g.zz = -c.r_p * c2x2 * ri.j / (4.0 * pi);
    g.a = (c.r_sp + c.r_ps) * (k.c / xi) * ri.i1 / (8.0 * pi);
    return g;
}

Tensor3 green_coincident(double z_A, double xi, const CoefficientSet& c, const Constants& k) {
    return green_coincident_reduced(z_A, xi, c, k).tensor();
}

ReducedGreen curl_green_coincident_reduced(CurlSide side, double z_A, double xi,
                                           const CoefficientSet& c, const Constants& k) {
    check_coincident_args(z_A, xi);
    const auto ri = radial_integrals(z_A, xi, k.c);
    ReducedGreen g;
    if (side == CurlSide::Left) {
        g.t = -(c.r_sp * (xi / k.c) * ri.i0 + c.r_ps * (k.c / xi) * ri.i2) / (8.0 * pi);
        g.zz = -c.r_ps * (k.c / xi) * ri.j / (4.0 * pi);
        g.a = (c.r_s - c.r_p) * ri.i1 / (8.0 * pi);
    } else {
        g.t = -(c.r_ps * (xi / k.c) * ri.i0 + c.r_sp * (k.c / xi) * ri.i2) / (8.0 * pi);
        g.zz = -c.r_sp * (k.c / xi) * ri.j / (4.0 * pi);
        g.a = (c.r_s - c.r_p) * ri.i1 / (8.0 * pi);
    }
    return g;
}

namespace green_detail {

DyadWeights green_weights(const CoefficientSet& c) { return {c.r_s, c.r_p, c.r_sp, c.r_ps}; }

DyadWeights curl_left_weights(const CoefficientSet& c) {
    // out s -> +p, out p -> -s (one factor xi/c applied by the caller):
    // (s,in) feeds (p,in), (p,in) feeds -(s,in).
    return {-c.r_sp, c.r_ps, c.r_s, -c.r_p};
}

DyadWeights curl_right_weights(const CoefficientSet& c) {
    // Raw primed curl: in s -> -p, in p -> +s; right-curl = minus that.
    return {-c.r_ps, c.r_sp, -c.r_p, c.r_s};
}

Tensor3 mode_dyadic_integral(const DyadWeights& w, double xi_over_c_power, const Vec3& r,
                             const Vec3& rp, double xi, const Constants& k,
                             const QuadOptions& opt) {
    if (!(r[2] > 0.0) || !(rp[2] > 0.0))
        throw input_error("green: both points must lie above the layer (z > 0)");
    if (!(xi > 0.0) || !std::isfinite(xi)) throw input_error("green: require xi > 0");
    const double c = k.c;
    const double b0 = xi / c;
    const double S = r[2] + rp[2];
    const double dx = r[0] - rp[0];
    const double dy = r[1] - rp[1];
    using cplx = std::complex<double>;

    Tensor3 out{};
    double err_scale = 0.0;
    for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) {
            auto f = [&](double beta, double phi) -> cplx {
                const double q = std::sqrt(std::max(beta * beta - b0 * b0, 0.0));
                const double cp = std::cos(phi), sp = std::sin(phi);
                const cplx phase = std::exp(cplx(0.0, q * (dx * cp + dy * sp)));
                // e_q, e_s, e_p+- components at this node.
                const cplx eq[3] = {cp, sp, 0.0};
                const cplx es[3] = {sp, -cp, 0.0};
                const cplx fac = -c / xi;
                const cplx epP[3] = {fac * beta * eq[0], fac * beta * eq[1],
                                     fac * cplx(0.0, q)};
                const cplx epM[3] = {-fac * beta * eq[0], -fac * beta * eq[1],
                                     fac * cplx(0.0, q)};
                const cplx dyad = w.ss * es[j] * es[l] + w.pp * epP[j] * epM[l] +
                                  w.ps * epP[j] * es[l] + w.sp * es[j] * epM[l];
                return dyad * phase;
            };
            const QuadResultC q2 = integrate_2d_polar(f, b0, S, opt);
            // Physical result is real; the azimuthal rule cancels the
            // imaginary parts to spectral accuracy.
            out(j, l) = q2.value.real() * xi_over_c_power / (8.0 * pi * pi);
            err_scale = std::max(err_scale, std::abs(q2.value.imag()));
        }
    }
    (void)err_scale;
    return out;
}

} // namespace green_detail

Tensor3 green_scattering(const Vec3& r, const Vec3& rp, double xi, const CoefficientSet& c,
                         const Constants& k, const QuadOptions& opt) {
    return green_detail::mode_dyadic_integral(green_detail::green_weights(c), 1.0, r, rp, xi, k,
                                              opt);
}

Tensor3 curl_green(CurlSide side, const Vec3& r, const Vec3& rp, double xi,
                   const CoefficientSet& c, const Constants& k, const QuadOptions& opt) {
    const auto w = side == CurlSide::Left ? green_detail::curl_left_weights(c)
                                          : green_detail::curl_right_weights(c);
    return green_detail::mode_dyadic_integral(w, xi / k.c, r, rp, xi, k, opt);
}

Tensor3 onsager_defect(const Vec3& r, const Vec3& rp, double xi, const CoefficientSet& c,
                       const Constants& k, const QuadOptions& opt) {
    const Tensor3 g = green_scattering(r, rp, xi, c, k, opt);
    const Tensor3 gswap = green_scattering(rp, r, xi, c, k, opt);
    return g - gswap.transposed();
}

} // namespace cpcs
