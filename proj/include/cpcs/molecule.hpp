#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cpcs/errors.hpp"
#include "cpcs/tensor.hpp"
#include "cpcs/units.hpp"

namespace cpcs {

/// One ground -> excited transition. d and m are the 0->k matrix elements
/// d_{0k}, m_{0k}; the reverse elements are their conjugates.
struct Transition {
    double omega_k = 0.0; // (E_k - E_0)/hbar [rad/s], > 0
    CVec3 d{};            // electric dipole element [C m]
    CVec3 m{};            // magnetic dipole element [J/T]
};

enum class SymmetryClass { Generic, CPViolating, Chiral };

/// A sum-over-states molecular response model with a declared (and
/// verified, never inferred) symmetry class:
///   CPViolating: all products conj(d_j) m_l real  (chi_me = chi_em^T)
///   Chiral:      all products conj(d_j) m_l imaginary (chi_me = -chi_em^T)
struct MoleculeSpectrum {
    std::vector<Transition> transitions;
    SymmetryClass symmetry_class = SymmetryClass::Generic;
    std::string name;

    /// Throws input_error / classification_error on invariant violations.
    void validate() const;
};

SymmetryClass parse_symmetry_class(const std::string& tag);
std::string symmetry_class_name(SymmetryClass c);

/// Unperturbed level energies plus operator matrices for the perturbative
/// construction of CP-violating cross-polarisabilities. Index 0 is the
/// ground state; energies are (E_n - E_0)/hbar, strictly increasing from 0.
struct CPSystem {
    std::vector<double> energies;               // [rad/s], energies[0] == 0
    std::vector<Eigen::MatrixXcd> d0;           // 3 matrices (x,y,z) [C m], Hermitian
    std::vector<Eigen::MatrixXcd> m0;           // 3 matrices (x,y,z) [J/T], Hermitian
    Eigen::MatrixXcd vcp;                       // [J], Hermitian, zero diagonal
    std::string name;

    int levels() const { return static_cast<int>(energies.size()); }
    void validate() const;
};

/// Electric polarisability tensor at imaginary frequency,
///   alpha_jl(i xi) = (2/hbar) sum_k [w_k Re(d_j d*_l) - xi Im(d_j d*_l)]
///                    / (w_k^2 + xi^2),        d = d_{0k}.
/// Exactly real for xi >= 0 (no poles on the imaginary axis).
Tensor3 alpha_tensor(const MoleculeSpectrum& spec, double xi,
                     const Constants& k = si_constants());

struct ChiPair {
    Tensor3 em; // chi_em
    Tensor3 me; // chi_me
};

/// Electric-magnetic cross-polarisabilities at imaginary frequency:
///   chi_em,jl(i xi) = (2/hbar) sum_k [w_k Re(conj(d_j) m_l)
///                     + xi Im(conj(d_j) m_l)] / (w_k^2 + xi^2)
/// and the d<->m transposed analogue for chi_me. Verifies the declared
/// symmetry class (classification_error on violation).
ChiPair chi_tensors(const MoleculeSpectrum& spec, double xi,
                    const Constants& k = si_constants());

/// First-order mixing coefficients c_{ln} = V_{ln} / (hbar (w_n - w_l)),
/// l != n; zero diagonal. Throws degeneracy_error on (near-)degenerate
/// level pairs.
Eigen::MatrixXcd first_order_states(const CPSystem& sys, const Constants& k = si_constants());

/// Cross-polarisability of the perturbed molecule to linear order in the
/// CP-violating coupling: the bare chi_em built from d0, m0 plus the
/// V-linear correction, evaluated at complex frequency omega. On the real
/// axis, omega within 1e-12 relative of any +-w_k raises singularity_error.
Tensor3c build_cp_cross_polarizability(const CPSystem& sys, std::complex<double> omega,
                                       const Constants& k = si_constants());

/// The V-linear correction alone (zeroth-order part subtracted).
Tensor3c cp_cross_polarizability_correction(const CPSystem& sys, std::complex<double> omega,
                                            const Constants& k = si_constants());

/// chi_me analogue of build_cp_cross_polarizability (d and m exchanged).
Tensor3c build_cp_cross_polarizability_me(const CPSystem& sys, std::complex<double> omega,
                                          const Constants& k = si_constants());

/// Residual of the verified partial-fraction identity
///   1/((wl-wk)(wk+s*w)) - 1/((wl-wk)(wl+s*w)) - 1/((wk+s*w)(wl+s*w))
/// (the printed form carries a '+' between the first two terms, which does
/// not close; the relative '-' below is verified on exact rationals in the
/// test suite). sign is +1 or -1.
std::complex<double> partial_fraction_check(double wk, double wl, std::complex<double> omega,
                                            int sign);

/// Molecule or CP-system input file (schemas documented in the README).
/// Throws schema_error naming the failing field path.
struct MoleculeFile {
    bool is_cp_system = false;
    MoleculeSpectrum spectrum; // valid when !is_cp_system
    CPSystem system;           // valid when is_cp_system
};

MoleculeFile load_molecule_json(const std::string& path, const Constants& k = si_constants());
MoleculeFile parse_molecule_json(const std::string& text, const Constants& k = si_constants());

} // namespace cpcs
