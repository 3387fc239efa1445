#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace cpcs {

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<std::complex<double>, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Real 3x3 second-rank tensor (imaginary-frequency evaluations).
struct Tensor3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int j, int l) { return m[j][l]; }
    double operator()(int j, int l) const { return m[j][l]; }

    static Tensor3 zero() { return {}; }
    static Tensor3 identity() {
        Tensor3 t;
        t(0, 0) = t(1, 1) = t(2, 2) = 1.0;
        return t;
    }
    static Tensor3 diag(double a, double b, double c) {
        Tensor3 t;
        t(0, 0) = a; t(1, 1) = b; t(2, 2) = c;
        return t;
    }

    Tensor3 transposed() const {
        Tensor3 t;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) t(j, l) = m[l][j];
        return t;
    }

    /// Axial contraction eps_jlz T_jl = T_xy - T_yx. Recomputed, never stored.
    double axial() const { return m[0][1] - m[1][0]; }

    double frobenius() const {
        double s = 0.0;
        for (const auto& row : m)
            for (double v : row) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double s = 0.0;
        for (const auto& row : m)
            for (double v : row) s = std::max(s, std::abs(v));
        return s;
    }

    Tensor3& operator+=(const Tensor3& o) {
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) m[j][l] += o(j, l);
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) m[j][l] -= o(j, l);
        return *this;
    }
    Tensor3& operator*=(double s) {
        for (auto& row : m)
            for (double& v : row) v *= s;
        return *this;
    }
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
    friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
};

/// Complex 3x3 tensor (real-frequency evaluations).
struct Tensor3c {
    std::array<std::array<std::complex<double>, 3>, 3> m{};

    std::complex<double>& operator()(int j, int l) { return m[j][l]; }
    std::complex<double> operator()(int j, int l) const { return m[j][l]; }

    std::complex<double> axial() const { return m[0][1] - m[1][0]; }

    double frobenius() const {
        double s = 0.0;
        for (const auto& row : m)
            for (const auto& v : row) s += std::norm(v);
        return std::sqrt(s);
    }

    Tensor3 real() const {
        Tensor3 t;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) t(j, l) = m[j][l].real();
        return t;
    }
    double max_abs_imag() const {
        double s = 0.0;
        for (const auto& row : m)
            for (const auto& v : row) s = std::max(s, std::abs(v.imag()));
        return s;
    }

    Tensor3c transposed() const {
        Tensor3c t;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) t(j, l) = m[l][j];
        return t;
    }

    Tensor3c& operator+=(const Tensor3c& o) {
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) m[j][l] += o(j, l);
        return *this;
    }
    Tensor3c& operator-=(const Tensor3c& o) {
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) m[j][l] -= o(j, l);
        return *this;
    }
    Tensor3c& operator*=(std::complex<double> s) {
        for (auto& row : m)
            for (auto& v : row) v *= s;
        return *this;
    }
    friend Tensor3c operator+(Tensor3c a, const Tensor3c& b) { return a += b; }
    friend Tensor3c operator-(Tensor3c a, const Tensor3c& b) { return a -= b; }
    friend Tensor3c operator*(Tensor3c a, std::complex<double> s) { return a *= s; }
};

/// Outer product a_j b_l.
inline Tensor3c outer(const CVec3& a, const CVec3& b) {
    Tensor3c t;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) t(j, l) = a[j] * b[l];
    return t;
}

/// Trace contraction Tr[A.B] = sum_jl A_jl B_lj.
inline double trace_dot(const Tensor3& a, const Tensor3& b) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) s += a(j, l) * b(l, j);
    return s;
}

/// Symmetric/antisymmetric split: sym = (T+T^t)/2, antisym = (T-T^t)/2.
/// The recomposition sym + antisym equals T exactly.
inline std::pair<Tensor3, Tensor3> alpha_split(const Tensor3& t) {
    Tensor3 s, a;
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            s(j, l) = 0.5 * (t(j, l) + t(l, j));
            a(j, l) = 0.5 * (t(j, l) - t(l, j));
        }
    return {s, a};
}

} // namespace cpcs
