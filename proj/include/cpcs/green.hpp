#pragma once

#include "cpcs/layer.hpp"
#include "cpcs/quadrature.hpp"
#include "cpcs/tensor.hpp"
#include "cpcs/units.hpp"

namespace cpcs {

// Scattering dyadic Green tensor above a planar mirror at imaginary
// frequency xi, in the mode expansion
//   G(r,r',i xi) = (1/8 pi^2) int d^2q / beta  e^{i q.(rho-rho') - beta(z+z')}
//     [ e_s+ e_s- r_s + e_p+ e_p- r_p + e_p+ e_s- r_sp + e_s+ e_p- r_ps ],
// with beta = sqrt(xi^2/c^2 + q^2), e_s+- = e_q x e_z and
// e_p+- = -(c/xi)(i q e_z +- beta e_q).
//
// At coincident transverse points the azimuthal average collapses the
// tensor to diag(G_t, G_t, G_zz) + G_a (xy - yx), with radial integrals
// that are elementary after q dq = beta dbeta:
//   G_t  = (1/8pi) [ r_s I0 - r_p (c^2/xi^2) I2 ]
//   G_zz = -(r_p/4pi) (c^2/xi^2) (I2 - (xi/c)^2 I0)
//   G_a  = ((r_sp + r_ps)/8pi) (c/xi) I1,      I_n = int beta^n e^{-2 beta z}.
// G_a is the only part sensitive to polarization conversion.
//
// Scaling law: G(lambda z, xi/lambda) = G(z, xi)/lambda (kernel depends on
// beta z and xi z/c only; one power of length from the measure).

/// Coincident-point scattering Green tensor components [1/m].
struct ReducedGreen {
    double t = 0.0;  // xx and yy
    double zz = 0.0;
    double a = 0.0;  // coefficient of (xy - yx)

    Tensor3 tensor() const {
        Tensor3 g = Tensor3::diag(t, t, zz);
        g(0, 1) = a;
        g(1, 0) = -a;
        return g;
    }
};

/// Closed-form coincident evaluation (z_A > 0, xi > 0).
ReducedGreen green_coincident_reduced(double z_A, double xi, const CoefficientSet& c,
                                      const Constants& k = si_constants());
Tensor3 green_coincident(double z_A, double xi, const CoefficientSet& c,
                         const Constants& k = si_constants());

enum class CurlSide { Left, Right };

/// Coincident curls of the scattering Green tensor [1/m^2], computed by the
/// mode-swap rules: on the outgoing side, curl maps the s mode to
/// +(xi/c) e_p+ and the p mode to -(xi/c) e_s; on the incoming side the
/// raw primed curl gives s -> -(xi/c) e_p-, p -> +(xi/c) e_s-, and the
/// right-curl object (G x grad', derivative acting leftward) is its
/// negative. The sign convention was fixed against the closed-form
/// cross-polarisability potential; the finite-difference oracle in the test
/// suite pins both sides.
ReducedGreen curl_green_coincident_reduced(CurlSide side, double z_A, double xi,
                                           const CoefficientSet& c,
                                           const Constants& k = si_constants());

/// General-position scattering Green tensor via 2D quadrature
/// (adaptive radial x 64-point azimuthal trapezoid). Both z > 0, z' > 0.
Tensor3 green_scattering(const Vec3& r, const Vec3& rp, double xi, const CoefficientSet& c,
                         const Constants& k = si_constants(), const QuadOptions& opt = {});

/// General-position curls, same 2D machinery with mode-swapped weights.
Tensor3 curl_green(CurlSide side, const Vec3& r, const Vec3& rp, double xi,
                   const CoefficientSet& c, const Constants& k = si_constants(),
                   const QuadOptions& opt = {});

/// Onsager-violation diagnostic G(r,r') - G^T(r',r); zero for reciprocal
/// mirrors, odd in the Chern-Simons coupling.
Tensor3 onsager_defect(const Vec3& r, const Vec3& rp, double xi, const CoefficientSet& c,
                       const Constants& k = si_constants(), const QuadOptions& opt = {});

namespace green_detail {

/// Weights of the four mode dyads (out,in) in {ss, pp, ps, sp} order; the
/// shared core for G and its curls.
struct DyadWeights {
    double ss = 0.0, pp = 0.0, ps = 0.0, sp = 0.0;
};

DyadWeights green_weights(const CoefficientSet& c);
/// Unprimed-side curl applied to the weights, times one factor xi/c.
DyadWeights curl_left_weights(const CoefficientSet& c);
/// Right-curl (G x grad') weights, including the leftward-action sign.
DyadWeights curl_right_weights(const CoefficientSet& c);

Tensor3 mode_dyadic_integral(const DyadWeights& w, double xi_over_c, const Vec3& r,
                             const Vec3& rp, double xi, const Constants& k,
                             const QuadOptions& opt);

} // namespace green_detail

} // namespace cpcs
