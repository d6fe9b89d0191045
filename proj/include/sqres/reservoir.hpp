#pragma once

#include <functional>
#include <string>
#include <variant>

#include <Eigen/Core>

namespace sqres {

// Internal units: frequencies in kappa, rates in gamma_c. The response of a
// reservoir at temperature T is the pair
//   gamma_T(w) = 2 pi G_T(w),
//   Delta_T(w) = PV integral dw' G_T(w') / (w' - w),
// with G_T(w) = G_0(w)[1 + n(w)] + G_0(-w) n(-w).

// Damped cavity mode in the bad-cavity limit: coupling spectrum a Lorentzian
// of width kappa centered at omega_a, thermal occupation n_a at omega_a.
// gamma_c = 2 pi 4 g^2 / kappa is the unmodulated decay rate (the rate unit).
struct LorentzianReservoir {
    double omega_a = 10.0;   // in units of kappa; validity assumes >= 5
    double kappa = 1.0;      // the frequency unit
    double n_a = 0.0;
    double gamma_c = 1.0;    // the rate unit

    bool bad_cavity_ok() const { return omega_a >= 5.0 * kappa; }
};

struct PlanckOccupation {
    double temperature = 0;   // energy units (hbar = 1)
};
struct FixedOccupation {
    double n = 0;
};
using Occupation = std::variant<PlanckOccupation, FixedOccupation>;

// Tabulated coupling spectrum G_0(w) >= 0 on a strictly increasing grid
// (zero outside), with a thermal or fixed occupation. n(-w) is evaluated
// as n(|w|).
struct GenericReservoir {
    Eigen::ArrayXd omega;
    Eigen::ArrayXd g0;
    Occupation occupation = FixedOccupation{0.0};

    double g0_at(double w) const;    // linear interpolation, 0 outside grid
    double occupation_at(double w) const;
    double g_T(double w) const;
};

// Response pair as callables; what mecoeff consumes.
struct ReservoirResponse {
    std::function<double(double)> gamma_T;
    std::function<double(double)> delta_T;
};

struct PvQuadConfig {
    // Minimum half-width (in grid cells) of the symmetric pole window; the
    // pairing is extended over the whole span symmetric around the pole,
    // which subsumes this window.
    int pole_window_cells = 8;
    double error_gate = 1e-5;   // relative to max|Delta_T| scale
};

struct GenericResponseResult {
    double gamma_T = 0;
    double delta_T = 0;
    double delta_err = 0;   // |full - half-resolution| estimate
};

// Planck distribution 1/(e^{omega/T} - 1); 0 at T = 0. omega > 0 required.
double planck_occupation(double omega, double temperature);

// Closed-form Lorentzian response.
double lorentzian_gamma_T(double omega, const LorentzianReservoir& res);
// Exact Hilbert transform of the Lorentzian G_T:
//   gamma_c [ (n_a+1) (k/4)(wa-w)/((wa-w)^2+(k/2)^2)
//           -  n_a    (k/4)(wa+w)/((wa+w)^2+(k/2)^2) ].
double lorentzian_delta_T(double omega, const LorentzianReservoir& res);

// Numeric response of a tabulated reservoir. The principal value integral
// pairs samples symmetric around the pole, (G(w+u)-G(w-u))/u, removing the
// singularity for smooth G_T, and uses the trapezoid rule on the unpaired
// remainder. Throws DomainError for omega within one cell of the grid edge
// and NonConvergenceError when the error estimate exceeds the gate.
GenericResponseResult generic_response(double omega, const GenericReservoir& res,
                                       const PvQuadConfig& cfg = {});

ReservoirResponse make_response(const LorentzianReservoir& res);
ReservoirResponse make_response(const GenericReservoir& res,
                                const PvQuadConfig& cfg = {});

// Tabulate the Lorentzian coupling spectrum G_0 on [wmin, wmax] with a fixed
// occupation n_a, for cross-checking the closed forms against the PV route.
GenericReservoir tabulate_lorentzian(const LorentzianReservoir& res,
                                     double wmin, double wmax, int points);

// Two-column CSV (omega_over_kappa, G0), strictly increasing first column.
GenericReservoir load_spectrum_csv(const std::string& path, Occupation occ);

}  // namespace sqres
