#pragma once

namespace sqres {

// Hydrogenic circular-state transition |n, n-1, n-1> -> |n, n-2, n-2>.
// Radial integral in units a0, angular factor dimensionless, dipole in e*a0.
struct RydbergTransition {
    int n = 0;
    double radial_R = 0;
    double angular_A = 0;
    double dipole_d = 0;   // = radial_R * angular_A
};

struct ValidityGate {
    double g = 0;               // cavity coupling, s^-1
    bool omega_a_gg_kappa = false;
    bool kappa_gg_g = false;
    bool kappa_gg_gamma0 = false;
    bool gammaT_ll_kappa = false;
    bool all() const {
        return omega_a_gg_kappa && kappa_gg_g && kappa_gg_gamma0 && gammaT_ll_kappa;
    }
};

// SI-unit rate estimates for one experimental configuration.
struct ExperimentEstimate {
    double omega_a = 0;       // rad/s
    double kappa = 0;         // s^-1
    double temperature = 0;   // K
    double dipole_d = 0;      // e*a0
    double gamma_0 = 0;       // s^-1, free-space spontaneous rate
    double gamma_T = 0;       // s^-1, thermal rate at T
    double gamma_c = 0;       // s^-1, cavity-coupling rate (0 if not computed)
    double gamma_x_inverse = 0;  // s, slow-quadrature time in the quantum regime
    ValidityGate gate;
};

// R = sqrt(1/((2n-1)!(2n-2)!)) * (1/2) [ (n-1)Gamma(2n+1) - Gamma(2n+2)/2 ],
// evaluated in log space with sign tracking; R < 0 for all n >= 2.
double radial_integral(int n);

// A = sqrt((2n-3)/(2(2n-1))) * C_{n-1,0;n-2,1,0,0} *
//     [ C_{n-1,n-1;n-2,1,n-2,-1} - C_{n-1,n-1;n-2,1,n-2,1} ],
// built from Clebsch-Gordan coefficients; returned with the positive sign
// convention (the overall dipole sign is carried by the radial part).
// Approaches 1/2 for large n.
double angular_factor(int n);

RydbergTransition dipole_moment(int n);

// gamma_0 = d^2 omega_a^3 / (3 pi eps0 hbar c^3), d in e*a0, omega_a in rad/s.
double spontaneous_rate(double d_ea0, double omega_a);

// Thermal rate estimate gamma_T = gamma_0 * kB T / (hbar kappa): grows as the
// temperature divided by the cavity linewidth.
double thermal_rate_estimate(double gamma_0, double temperature_K, double kappa);

// Full cavity-thermal estimate (gamma_0, gamma_T, validity gate).
ExperimentEstimate thermal_estimate(double d_ea0, double omega_a, double kappa,
                                    double temperature_K);

// Circuit-QED-style estimate: gamma_c = 2 pi 4 g^2 / kappa with
// g = d sqrt(omega_a / (2 eps0 hbar V)), V = lambda_a^3, plus the
// quantum-squeezing slow-quadrature time 1/gamma_x for the n_a = 0,
// z = 1, m = 2, omega_a = 10 kappa working point.
ExperimentEstimate circuit_qed_estimate(double omega_a, double kappa, double d_ea0);

}  // namespace sqres
