#include "sqres/dynamics.hpp"

#include <cmath>
#include <string>

#include "sqres/errors.hpp"

namespace sqres {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_decaying(const MECoefficients& c, const char* who) {
    if (!(c.gamma() > 0)) throw DomainError(std::string(who) + ": gamma <= 0");
}
}  // namespace

DephasingRates dephasing_rates(const MECoefficients& c) {
    require_decaying(c, "dephasing_rates");
    return {c.gamma_x(), c.gamma_y()};
}

BlochVector evolve_bloch(const BlochVector& s0, const MECoefficients& c, double t,
                         double hamiltonian_shift) {
    if (t < 0) throw DomainError("evolve_bloch: t >= 0 required");
    if (s0.norm2() > 1.0 + 1e-9) throw DomainError("evolve_bloch: |s| > 1");
    require_decaying(c, "evolve_bloch");

    const double g = c.gamma();
    const double N = c.big_N();
    const double gx = c.gamma_x(), gy = c.gamma_y();
    const double sz_ss = -1.0 / (2.0 * N + 1.0);

    BlochVector s;
    s.sz = (s0.sz - sz_ss) * std::exp(-g * (2.0 * N + 1.0) * t) + sz_ss;
    if (hamiltonian_shift == 0.0) {
        s.sx = s0.sx * std::exp(-gx * t);
        s.sy = s0.sy * std::exp(-gy * t);
    } else {
        // quadratures couple through the energy-correction precession:
        // d/dt (sx, sy) = [[-gx, -D], [D, -gy]] (sx, sy); exponentiated in
        // closed form via A = mu*I + B, B^2 = (d^2 - D^2) I
        const double D = hamiltonian_shift;
        const double mu = -0.5 * (gx + gy);
        const double d = 0.5 * (gy - gx);
        const double s2 = d * d - D * D;
        double ch, shf;   // cosh(st), sinh(st)/s continued through s^2 <= 0
        if (s2 > 1e-300) {
            const double sr = std::sqrt(s2);
            ch = std::cosh(sr * t);
            shf = std::sinh(sr * t) / sr;
        } else if (s2 < -1e-300) {
            const double wr = std::sqrt(-s2);
            ch = std::cos(wr * t);
            shf = std::sin(wr * t) / wr;
        } else {
            ch = 1.0;
            shf = t;
        }
        const double e = std::exp(mu * t);
        s.sx = e * ((ch + shf * d) * s0.sx - shf * D * s0.sy);
        s.sy = e * (shf * D * s0.sx + (ch - shf * d) * s0.sy);
    }
    return s;
}

BlochVector steady_state(const MECoefficients& c) {
    require_decaying(c, "steady_state");
    return {0.0, 0.0, -1.0 / (2.0 * c.big_N() + 1.0)};
}

double steady_excited_population(const MECoefficients& c) {
    require_decaying(c, "steady_excited_population");
    const double N = c.big_N();
    return N / (2.0 * N + 1.0);
}

double dipole_correlation(const MECoefficients& c, double t) {
    require_decaying(c, "dipole_correlation");
    const double N = c.big_N();
    const double at = std::abs(t);
    return 0.5 * N / (2.0 * N + 1.0) *
           (std::exp(-c.gamma_x() * at) + std::exp(-c.gamma_y() * at));
}

SpectrumCurve fluorescence_spectrum(const MECoefficients& c,
                                    const Eigen::ArrayXd& omega_grid) {
    require_decaying(c, "fluorescence_spectrum");
    for (int i = 1; i < omega_grid.size(); ++i)
        if (!(omega_grid[i] > omega_grid[i - 1]))
            throw DomainError("fluorescence_spectrum: grid must strictly increase");

    const double N = c.big_N();
    const double gx = c.gamma_x(), gy = c.gamma_y();
    SpectrumCurve s;
    s.kind = SpectrumKind::Fluorescence;
    s.omega = omega_grid;
    s.values = (1.0 / kPi) * (N / (2.0 * N + 1.0)) *
               (gx / (gx * gx + omega_grid.square()) +
                gy / (gy * gy + omega_grid.square()));
    s.width_narrow = gx;
    s.width_broad = gy;
    return s;
}

double gamma_phi(const MECoefficients& c, double phi_rel) {
    return c.gamma_N + std::abs(c.gamma_M) * std::cos(phi_rel) + 0.5 * c.gamma();
}

double Gamma_phi_sideband(const MECoefficients& c, double phi_rel) {
    return 1.5 * (c.gamma_N - std::abs(c.gamma_M) * std::cos(phi_rel) / 3.0 +
                  0.5 * c.gamma());
}

SpectrumCurve resonance_fluorescence(const MECoefficients& c, double Omega,
                                     double phi_rel,
                                     const Eigen::ArrayXd& omega_grid) {
    require_decaying(c, "resonance_fluorescence");
    if (!(Omega > 0)) throw DomainError("resonance_fluorescence: Omega > 0 required");
    for (int i = 1; i < omega_grid.size(); ++i)
        if (!(omega_grid[i] > omega_grid[i - 1]))
            throw DomainError("resonance_fluorescence: grid must strictly increase");

    const double gp = gamma_phi(c, phi_rel);
    const double Gp = Gamma_phi_sideband(c, phi_rel);
    SpectrumCurve s;
    s.kind = SpectrumKind::ResonanceFluorescence;
    s.omega = omega_grid;
    s.values = gp / (omega_grid.square() + gp * gp) +
               Gp / ((omega_grid + Omega).square() + Gp * Gp) +
               Gp / ((omega_grid - Omega).square() + Gp * Gp);
    s.width_narrow = gp;
    s.width_broad = Gp;
    DriveInfo d;
    d.Omega = Omega;
    d.phi_rel = phi_rel;
    d.theta = c.squeeze_phase() + 0.5 * phi_rel;
    d.strong_drive_ok = Omega > 3.0 * c.gamma_y();
    s.drive = d;
    return s;
}

}  // namespace sqres
