#include "cpcs/molecule.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cpcs {

using json = nlohmann::json;
using cplx = std::complex<double>;

namespace {

double vec_norm(const CVec3& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

} // namespace

void MoleculeSpectrum::validate() const {
    if (transitions.empty()) throw input_error("spectrum: no transitions");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto& t = transitions[i];
        if (!(t.omega_k > 0.0) || !std::isfinite(t.omega_k))
            throw input_error("spectrum: transition " + std::to_string(i) +
                              ": omega_k must be positive and finite");
        for (int j = 0; j < 3; ++j)
            if (!std::isfinite(t.d[j].real()) || !std::isfinite(t.d[j].imag()) ||
                !std::isfinite(t.m[j].real()) || !std::isfinite(t.m[j].imag()))
                throw input_error("spectrum: transition " + std::to_string(i) +
                                  ": non-finite dipole element");
        if (vec_norm(t.d) == 0.0 && vec_norm(t.m) == 0.0)
            throw input_error("spectrum: transition " + std::to_string(i) +
                              ": both d and m vanish");
    }
    if (symmetry_class == SymmetryClass::Generic) return;
    // Class invariants on the relative phase of every component pair.
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto& t = transitions[i];
        const double scale = vec_norm(t.d) * vec_norm(t.m);
        if (scale == 0.0) continue;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                const cplx p = std::conj(t.d[j]) * t.m[l];
                const double bad = symmetry_class == SymmetryClass::CPViolating
                                       ? std::abs(p.imag())
                                       : std::abs(p.real());
                if (bad > 1e-12 * scale)
                    throw classification_error(
                        "spectrum: transition " + std::to_string(i) + " violates " +
                        symmetry_class_name(symmetry_class) + " class (component " +
                        std::to_string(j) + "," + std::to_string(l) + ")");
            }
    }
}

SymmetryClass parse_symmetry_class(const std::string& tag) {
    if (tag == "generic") return SymmetryClass::Generic;
    if (tag == "cp") return SymmetryClass::CPViolating;
    if (tag == "chiral") return SymmetryClass::Chiral;
    throw input_error("unknown symmetry class '" + tag + "' (expected generic|cp|chiral)");
}

std::string symmetry_class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Generic: return "generic";
        case SymmetryClass::CPViolating: return "cp";
        case SymmetryClass::Chiral: return "chiral";
    }
    return "?";
}

void CPSystem::validate() const {
    const int n = levels();
    if (n < 2) throw input_error("cp_system: need at least two levels");
    if (energies[0] != 0.0) throw input_error("cp_system: energies[0] must be 0");
    for (int i = 1; i < n; ++i)
        if (!(energies[i] > energies[i - 1]) || !std::isfinite(energies[i]))
            throw input_error("cp_system: energies must be strictly increasing and finite");
    if (d0.size() != 3 || m0.size() != 3)
        throw input_error("cp_system: d0/m0 must hold 3 Cartesian component matrices");
    auto check_herm = [n](const Eigen::MatrixXcd& m, const std::string& what) {
        if (m.rows() != n || m.cols() != n)
            throw input_error("cp_system: " + what + " has wrong shape");
        const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
        if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
            throw input_error("cp_system: " + what + " is not Hermitian");
    };
    for (int i = 0; i < 3; ++i) {
        check_herm(d0[i], "d0[" + std::to_string(i) + "]");
        check_herm(m0[i], "m0[" + std::to_string(i) + "]");
    }
    check_herm(vcp, "vcp");
    const double vscale = std::max(vcp.cwiseAbs().maxCoeff(), 1e-300);
    for (int i = 0; i < n; ++i)
        if (std::abs(vcp(i, i)) > 1e-14 * vscale)
            throw input_error("cp_system: vcp diagonal must vanish");
}

Tensor3 alpha_tensor(const MoleculeSpectrum& spec, double xi, const Constants& k) {
    if (xi < 0.0 || !std::isfinite(xi)) throw input_error("alpha_tensor: require xi >= 0");
    Tensor3 a{};
    for (const auto& t : spec.transitions) {
        const double den = t.omega_k * t.omega_k + xi * xi;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                const cplx p = t.d[j] * std::conj(t.d[l]);
                a(j, l) += 2.0 / k.hbar * (t.omega_k * p.real() - xi * p.imag()) / den;
            }
    }
    return a;
}

ChiPair chi_tensors(const MoleculeSpectrum& spec, double xi, const Constants& k) {
    if (xi < 0.0 || !std::isfinite(xi)) throw input_error("chi_tensors: require xi >= 0");
    spec.validate(); // includes the declared-class check
    ChiPair c{};
    for (const auto& t : spec.transitions) {
        const double den = t.omega_k * t.omega_k + xi * xi;
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                const cplx pem = std::conj(t.d[j]) * t.m[l]; // d_{k0,j} m_{0k,l}
                const cplx pme = std::conj(t.m[j]) * t.d[l]; // m_{k0,j} d_{0k,l}
                c.em(j, l) += 2.0 / k.hbar * (t.omega_k * pem.real() + xi * pem.imag()) / den;
                c.me(j, l) += 2.0 / k.hbar * (t.omega_k * pme.real() + xi * pme.imag()) / den;
            }
    }
    return c;
}

Eigen::MatrixXcd first_order_states(const CPSystem& sys, const Constants& k) {
    sys.validate();
    const int n = sys.levels();
    // Degeneracy guard relative to the overall spectral span.
    const double span = sys.energies.back() - sys.energies.front();
    for (int i = 1; i < n; ++i)
        if (sys.energies[i] - sys.energies[i - 1] < 1e-12 * span)
            throw degeneracy_error("first_order_states: levels " + std::to_string(i - 1) +
                                   " and " + std::to_string(i) + " are degenerate");
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            if (l == m) continue;
            c(l, m) = sys.vcp(l, m) / (k.hbar * (sys.energies[m] - sys.energies[l]));
        }
    return c;
}

namespace {

// chi built from Eq.-(9)-type sums with the given (possibly perturbed)
// per-transition products P_k = A_{k0} (x) B_{0k} and Q_k = A_{0k} (x) B_{k0}:
//   chi(w) = (1/hbar) sum_k [ P_k/(w + w_k) - Q_k/(w - w_k) ].
Tensor3c chi_from_products(const std::vector<double>& omegas, const std::vector<Tensor3c>& P,
                           const std::vector<Tensor3c>& Q, cplx omega, const Constants& k) {
    Tensor3c chi{};
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const cplx dplus = omega + omegas[i];
        const cplx dminus = omega - omegas[i];
        if (std::abs(dplus) < 1e-12 * omegas[i] || std::abs(dminus) < 1e-12 * omegas[i])
            throw singularity_error("cross-polarisability: resonant denominator at omega");
        chi += P[i] * (1.0 / dplus / k.hbar) - Q[i] * (1.0 / dminus / k.hbar);
    }
    return chi;
}

// Shared assembly for chi_em (A = d, B = m) and chi_me (A = m, B = d).
// include_zeroth: add the bare-product part; include_linear: add the
// first-order state-mixing correction delta(O) = C^dag O + O C.
Tensor3c perturbed_chi(const CPSystem& sys, cplx omega, const Constants& k, bool em,
                       bool include_zeroth, bool include_linear) {
    sys.validate();
    const int n = sys.levels();
    const auto& A = em ? sys.d0 : sys.m0;
    const auto& B = em ? sys.m0 : sys.d0;

    std::vector<Eigen::MatrixXcd> dA(3), dB(3);
    if (include_linear) {
        const Eigen::MatrixXcd C = first_order_states(sys, k);
        for (int i = 0; i < 3; ++i) {
            dA[i] = C.adjoint() * A[i] + A[i] * C;
            dB[i] = C.adjoint() * B[i] + B[i] * C;
        }
    }

    std::vector<double> omegas;
    std::vector<Tensor3c> P, Q;
    for (int kk = 1; kk < n; ++kk) {
        omegas.push_back(sys.energies[kk]);
        CVec3 Ak0{}, A0k{}, Bk0{}, B0k{}, dAk0{}, dA0k{}, dBk0{}, dB0k{};
        for (int i = 0; i < 3; ++i) {
            Ak0[i] = A[i](kk, 0);
            A0k[i] = A[i](0, kk);
            Bk0[i] = B[i](kk, 0);
            B0k[i] = B[i](0, kk);
            if (include_linear) {
                dAk0[i] = dA[i](kk, 0);
                dA0k[i] = dA[i](0, kk);
                dBk0[i] = dB[i](kk, 0);
                dB0k[i] = dB[i](0, kk);
            }
        }
        Tensor3c Pk{}, Qk{};
        if (include_zeroth) {
            Pk += outer(Ak0, B0k);
            Qk += outer(A0k, Bk0);
        }
        if (include_linear) {
            Pk += outer(dAk0, B0k) + outer(Ak0, dB0k);
            Qk += outer(dA0k, Bk0) + outer(A0k, dBk0);
        }
        P.push_back(Pk);
        Q.push_back(Qk);
    }
    return chi_from_products(omegas, P, Q, omega, k);
}

} // namespace

Tensor3c build_cp_cross_polarizability(const CPSystem& sys, cplx omega, const Constants& k) {
    return perturbed_chi(sys, omega, k, /*em=*/true, true, true);
}

Tensor3c cp_cross_polarizability_correction(const CPSystem& sys, cplx omega,
                                            const Constants& k) {
    return perturbed_chi(sys, omega, k, /*em=*/true, false, true);
}

Tensor3c build_cp_cross_polarizability_me(const CPSystem& sys, cplx omega, const Constants& k) {
    return perturbed_chi(sys, omega, k, /*em=*/false, true, true);
}

std::complex<double> partial_fraction_check(double wk, double wl, std::complex<double> omega,
                                            int sign) {
    if (wk == wl) throw input_error("partial_fraction_check: wl must differ from wk");
    if (sign != 1 && sign != -1) throw input_error("partial_fraction_check: sign must be +-1");
    const cplx s = static_cast<double>(sign) * omega;
    const cplx a = wk + s;
    const cplx b = wl + s;
    if (a == 0.0 || b == 0.0) throw input_error("partial_fraction_check: vanishing denominator");
    return 1.0 / ((wl - wk) * a) - 1.0 / ((wl - wk) * b) - 1.0 / (a * b);
}

// ---------------------------------------------------------------------------
// JSON ingestion

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& why) {
    throw schema_error(path + ": " + why);
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected object");
    auto it = j.find(key);
    if (it == j.end()) schema_fail(path + "." + key, "missing");
    return *it;
}

double need_num(const json& j, const std::string& path) {
    if (!j.is_number()) schema_fail(path, "expected number");
    return j.get<double>();
}

std::string need_str(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected string");
    return j.get<std::string>();
}

Vec3 need_vec3(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) schema_fail(path, "expected array of 3 numbers");
    Vec3 v{};
    for (int i = 0; i < 3; ++i) v[i] = need_num(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

cplx need_re_im(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) schema_fail(path, "expected [re, im] pair");
    return {need_num(j[0], path + "[0]"), need_num(j[1], path + "[1]")};
}

struct Units {
    DipoleUnit dipole;
    MagneticUnit magnetic;
    FrequencyUnit frequency;
};

Units read_units(const json& j, const std::string& path) {
    Units u{};
    try {
        u.dipole = parse_dipole_unit(need_str(need(j, "dipole", path), path + ".dipole"));
        u.magnetic = parse_magnetic_unit(need_str(need(j, "magnetic", path), path + ".magnetic"));
        u.frequency =
            parse_frequency_unit(need_str(need(j, "frequency", path), path + ".frequency"));
    } catch (const input_error& e) {
        schema_fail(path, e.what());
    }
    return u;
}

MoleculeSpectrum read_spectrum(const json& j, const Units& u, const Constants& k) {
    MoleculeSpectrum spec;
    if (auto it = j.find("name"); it != j.end()) spec.name = need_str(*it, "name");
    try {
        spec.symmetry_class = parse_symmetry_class(need_str(need(j, "class", ""), "class"));
    } catch (const input_error& e) {
        schema_fail("class", e.what());
    }
    const json& trs = need(j, "transitions", "");
    if (!trs.is_array() || trs.empty()) schema_fail("transitions", "expected non-empty array");
    const double dscale = convert_dipole(1.0, u.dipole, k);
    const double mscale = convert_magnetic(1.0, u.magnetic, k);
    const double wscale = convert_frequency(1.0, u.frequency, k);
    for (std::size_t i = 0; i < trs.size(); ++i) {
        const std::string p = "transitions[" + std::to_string(i) + "]";
        const json& tj = trs[i];
        Transition t;
        t.omega_k = need_num(need(tj, "omega", p), p + ".omega") * wscale;
        const Vec3 dre = need_vec3(need(tj, "d_re", p), p + ".d_re");
        const Vec3 dim = need_vec3(need(tj, "d_im", p), p + ".d_im");
        const Vec3 mre = need_vec3(need(tj, "m_re", p), p + ".m_re");
        const Vec3 mim = need_vec3(need(tj, "m_im", p), p + ".m_im");
        for (int c = 0; c < 3; ++c) {
            t.d[c] = cplx(dre[c], dim[c]) * dscale;
            t.m[c] = cplx(mre[c], mim[c]) * mscale;
        }
        spec.transitions.push_back(t);
    }
    try {
        spec.validate();
    } catch (const classification_error&) {
        throw;
    } catch (const input_error& e) {
        schema_fail("transitions", e.what());
    }
    return spec;
}

Eigen::MatrixXcd read_cplx_matrix(const json& j, const std::string& path, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        schema_fail(path, "expected " + std::to_string(n) + " rows");
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row = j[r];
        const std::string rp = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            schema_fail(rp, "expected " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
            m(r, c) = need_re_im(row[c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

// Vector-valued matrix: entry [n][m] is [[rex,imx],[rey,imy],[rez,imz]].
std::vector<Eigen::MatrixXcd> read_vec_matrix(const json& j, const std::string& path, int n) {
    std::vector<Eigen::MatrixXcd> out(3, Eigen::MatrixXcd::Zero(n, n));
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        schema_fail(path, "expected " + std::to_string(n) + " rows");
    for (int r = 0; r < n; ++r) {
        const json& row = j[r];
        const std::string rp = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            schema_fail(rp, "expected " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c) {
            const json& cell = row[c];
            const std::string cp = rp + "[" + std::to_string(c) + "]";
            if (!cell.is_array() || cell.size() != 3)
                schema_fail(cp, "expected 3 [re,im] component pairs");
            for (int i = 0; i < 3; ++i)
                out[i](r, c) = need_re_im(cell[i], cp + "[" + std::to_string(i) + "]");
        }
    }
    return out;
}

CPSystem read_cp_system(const json& j, const Units& u, const Constants& k) {
    CPSystem sys;
    if (auto it = j.find("name"); it != j.end()) sys.name = need_str(*it, "name");
    const json& en = need(j, "energies", "");
    if (!en.is_array() || en.size() < 2) schema_fail("energies", "expected >= 2 levels");
    const double wscale = convert_frequency(1.0, u.frequency, k);
    for (std::size_t i = 0; i < en.size(); ++i)
        sys.energies.push_back(need_num(en[i], "energies[" + std::to_string(i) + "]") * wscale);
    const int n = static_cast<int>(sys.energies.size());
    sys.d0 = read_vec_matrix(need(j, "d0", ""), "d0", n);
    sys.m0 = read_vec_matrix(need(j, "m0", ""), "m0", n);
    for (int i = 0; i < 3; ++i) {
        sys.d0[i] *= convert_dipole(1.0, u.dipole, k);
        sys.m0[i] *= convert_magnetic(1.0, u.magnetic, k);
    }
    sys.vcp = read_cplx_matrix(need(j, "vcp", ""), "vcp", n);
    // vcp is entered in the frequency unit (as V/hbar) for symmetry with the
    // level energies, then stored in Joules.
    sys.vcp *= wscale * k.hbar;
    try {
        sys.validate();
    } catch (const input_error& e) {
        schema_fail("cp_system", e.what());
    }
    return sys;
}

} // namespace

MoleculeFile parse_molecule_json(const std::string& text, const Constants& k) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("json: ") + e.what());
    }
    const Units u = read_units(need(j, "units", ""), "units");
    MoleculeFile f;
    if (j.contains("transitions")) {
        f.is_cp_system = false;
        f.spectrum = read_spectrum(j, u, k);
    } else if (j.contains("energies")) {
        f.is_cp_system = true;
        f.system = read_cp_system(j, u, k);
    } else {
        schema_fail("", "expected either 'transitions' (spectrum) or 'energies' (cp system)");
    }
    return f;
}

MoleculeFile load_molecule_json(const std::string& path, const Constants& k) {
    std::ifstream in(path);
    if (!in) throw schema_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_molecule_json(ss.str(), k);
}

} // namespace cpcs
