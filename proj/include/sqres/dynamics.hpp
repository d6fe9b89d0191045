#pragma once

#include <optional>

#include <Eigen/Core>

#include "sqres/mecoeff.hpp"

namespace sqres {

// Dipole quadrature expectations in the squeezing-phase-rotated frame
// (sigma_x = e^{i phi} sigma_+ + h.c., sigma_y = -i e^{i phi} sigma_+ + h.c.)
// plus the inversion.
struct BlochVector {
    double sx = 0, sy = 0, sz = -1;
    double norm2() const { return sx * sx + sy * sy + sz * sz; }
};

struct DephasingRates {
    double gamma_x = 0;   // gamma (N - |M| + 1/2), slow quadrature
    double gamma_y = 0;   // gamma (N + |M| + 1/2)
};

enum class SpectrumKind { Fluorescence, ResonanceFluorescence };

struct DriveInfo {
    double Omega = 0;     // Rabi frequency
    double theta = 0;     // drive phase
    double phi_rel = 0;   // 2 (theta - phi)
    bool strong_drive_ok = true;
};

struct SpectrumCurve {
    SpectrumKind kind = SpectrumKind::Fluorescence;
    Eigen::ArrayXd omega;    // offset from omega_a, units gamma_c
    Eigen::ArrayXd values;
    double width_narrow = 0;   // gamma_x or gamma_phi
    double width_broad = 0;    // gamma_y or Gamma_phi
    std::optional<DriveInfo> drive;
};

DephasingRates dephasing_rates(const MECoefficients& c);

// Closed-form evolution of the long-time ME:
//   sx(t) = sx0 e^{-gamma_x t},  sy(t) = sy0 e^{-gamma_y t},
//   sz(t) = (sz0 + 1/(2N+1)) e^{-gamma(2N+1) t} - 1/(2N+1).
// A nonzero hamiltonian_shift adds the energy-correction precession between
// the two quadratures (off by default; the shift is informational).
BlochVector evolve_bloch(const BlochVector& s0, const MECoefficients& c, double t,
                         double hamiltonian_shift = 0.0);

// (0, 0, -1/(2N+1)); excited population N/(2N+1).
BlochVector steady_state(const MECoefficients& c);
double steady_excited_population(const MECoefficients& c);

// C(t) = (1/2) N/(2N+1) [e^{-gamma_x |t|} + e^{-gamma_y |t|}].
double dipole_correlation(const MECoefficients& c, double t);

// S(w) = (1/pi) N/(2N+1) [gamma_x/(gamma_x^2+w^2) + gamma_y/(gamma_y^2+w^2)],
// w measured from omega_a.
SpectrumCurve fluorescence_spectrum(const MECoefficients& c,
                                    const Eigen::ArrayXd& omega_grid);

// Strongly driven three-peak spectrum with squeezing-modified widths
//   gamma_phi = gamma (N + |M| cos(phi) + 1/2)        (central peak)
//   Gamma_phi = (3/2) gamma (N - |M| cos(phi)/3 + 1/2) (sidebands at +-Omega)
// phi = 2 (theta - squeeze phase). Unit prefactor on the Lorentzian bracket.
SpectrumCurve resonance_fluorescence(const MECoefficients& c, double Omega,
                                     double phi_rel,
                                     const Eigen::ArrayXd& omega_grid);

double gamma_phi(const MECoefficients& c, double phi_rel);
double Gamma_phi_sideband(const MECoefficients& c, double phi_rel);

}  // namespace sqres
