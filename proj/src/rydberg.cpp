#include "sqres/rydberg.hpp"

#include <cmath>
#include <numbers>

#include "sqres/constants.hpp"
#include "sqres/errors.hpp"
#include "sqres/mecoeff.hpp"
#include "sqres/specfun.hpp"

namespace sqres {

namespace {
constexpr double kPi = std::numbers::pi;
// "much greater" threshold for the validity gate
constexpr double kGateFactor = 10.0;
}  // namespace

double radial_integral(int n) {
    if (n < 2) throw DomainError("radial_integral: n >= 2 required");
    // bracket (n-1)Gamma(2n+1) - Gamma(2n+2)/2 < 0 always; log-space with the
    // larger term factored out
    const double ln_t1 = std::log(n - 1.0) + log_gamma(2.0 * n + 1.0);
    const double ln_t2 = std::log(0.5) + log_gamma(2.0 * n + 2.0);
    const double ln_bracket = ln_t2 + std::log1p(-std::exp(ln_t1 - ln_t2));
    const double ln_norm = 0.5 * (log_gamma(2.0 * n) + log_gamma(2.0 * n - 1.0));
    return -std::exp(std::log(0.5) + ln_bracket - ln_norm);
}

double angular_factor(int n) {
    if (n < 2) throw DomainError("angular_factor: n >= 2 required");
    const double j_lo = n - 2.0;   // lower-state angular momentum
    const double j_hi = n - 1.0;

    const double c_parallel =
        clebsch_gordan({j_lo, 1.0, j_hi, 0.0, 0.0, 0.0});
    const double c_minus =
        clebsch_gordan({j_lo, 1.0, j_hi, j_lo, -1.0, j_hi});   // vanishes (m-selection)
    const double c_plus =
        clebsch_gordan({j_lo, 1.0, j_hi, j_lo, 1.0, j_hi});    // stretched, = 1

    const double a = std::sqrt((2.0 * n - 3.0) / (2.0 * (2.0 * n - 1.0))) *
                     c_parallel * (c_minus - c_plus);
    // positive sign convention; the dipole sign is carried by the radial part
    return std::abs(a);
}

RydbergTransition dipole_moment(int n) {
    RydbergTransition t;
    t.n = n;
    t.radial_R = radial_integral(n);
    t.angular_A = angular_factor(n);
    t.dipole_d = t.radial_R * t.angular_A;
    return t;
}

double spontaneous_rate(double d_ea0, double omega_a) {
    if (!(d_ea0 > 0) || !(omega_a > 0))
        throw DomainError("spontaneous_rate: d, omega_a > 0 required");
    using namespace constants;
    const double d = d_ea0 * e_a0;
    return d * d * omega_a * omega_a * omega_a /
           (3.0 * kPi * eps0 * hbar * c_light * c_light * c_light);
}

double thermal_rate_estimate(double gamma_0, double temperature_K, double kappa) {
    if (!(gamma_0 > 0) || !(temperature_K > 0) || !(kappa > 0))
        throw DomainError("thermal_rate_estimate: positive inputs required");
    using namespace constants;
    return gamma_0 * k_boltzmann * temperature_K / (hbar * kappa);
}

namespace {

double cavity_coupling(double d_ea0, double omega_a) {
    using namespace constants;
    const double lambda = 2.0 * kPi * c_light / omega_a;
    const double V = lambda * lambda * lambda;
    const double d = d_ea0 * e_a0;
    return d * std::sqrt(omega_a / (2.0 * eps0 * hbar * V));
}

ValidityGate make_gate(double omega_a, double kappa, double g, double gamma_0,
                       double gamma_T) {
    ValidityGate gate;
    gate.g = g;
    gate.omega_a_gg_kappa = omega_a >= kGateFactor * kappa;
    gate.kappa_gg_g = kappa >= kGateFactor * g;
    gate.kappa_gg_gamma0 = kappa >= kGateFactor * gamma_0;
    gate.gammaT_ll_kappa = gamma_T <= kappa / kGateFactor;
    return gate;
}

}  // namespace

ExperimentEstimate thermal_estimate(double d_ea0, double omega_a, double kappa,
                                    double temperature_K) {
    ExperimentEstimate e;
    e.omega_a = omega_a;
    e.kappa = kappa;
    e.temperature = temperature_K;
    e.dipole_d = d_ea0;
    e.gamma_0 = spontaneous_rate(d_ea0, omega_a);
    e.gamma_T = thermal_rate_estimate(e.gamma_0, temperature_K, kappa);
    e.gate = make_gate(omega_a, kappa, cavity_coupling(d_ea0, omega_a), e.gamma_0,
                       e.gamma_T);
    return e;
}

ExperimentEstimate circuit_qed_estimate(double omega_a, double kappa, double d_ea0) {
    if (!(omega_a > 0) || !(kappa > 0) || !(d_ea0 > 0))
        throw DomainError("circuit_qed_estimate: positive inputs required");
    ExperimentEstimate e;
    e.omega_a = omega_a;
    e.kappa = kappa;
    e.temperature = 0.0;
    e.dipole_d = d_ea0;
    e.gamma_0 = spontaneous_rate(d_ea0, omega_a);

    const double g = cavity_coupling(d_ea0, omega_a);
    e.gamma_c = 2.0 * kPi * 4.0 * g * g / kappa;

    // slow-quadrature time at the quantum-squeezing working point
    // (n_a = 0, z = 1, m = 2, omega_a = 10 kappa)
    const LorentzianReservoir quantum_point{10.0, 1.0, 0.0, 1.0};
    const double gx_over_gc = sinusoidal_coefficients(1.0, 2.0, quantum_point).gamma_x();
    e.gamma_x_inverse = 1.0 / (gx_over_gc * e.gamma_c);

    e.gate = make_gate(omega_a, kappa, g, e.gamma_0, 0.0);
    return e;
}

}  // namespace sqres
