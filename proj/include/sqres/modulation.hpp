#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace sqres {

// Level-spacing modulation delta(t).
//
// Sinusoidal: delta(t) = z*m*omega_a*[1 - sin(m*omega_a*t)]; the constant
// part is kept inside the sideband frequencies, nu_q = (z+q)*m*omega_a.
struct SinusoidalModulation {
    double z = 0;   // dimensionless strength, >= 0
    double m = 1;   // frequency in units of omega_a, > 0
};

// Arbitrary periodic delta(t) tabulated on a uniform grid over one period.
struct GenericPeriodicModulation {
    double period = 0;
    Eigen::ArrayXd time;    // uniform, starts at 0, covers one period
    Eigen::ArrayXd delta;
};

struct NoModulation {};

using ModulationSpec =
    std::variant<NoModulation, SinusoidalModulation, GenericPeriodicModulation>;

// One sideband of the accumulated modulation phase:
// eps(t) = exp(i * integral_0^t delta) = sum_q eps_q exp(i nu_q t).
struct Sideband {
    int q = 0;
    std::complex<double> eps;
    double nu = 0;
};

struct FourierModulation {
    std::vector<Sideband> terms;   // ascending in q
    int qmax = 0;

    // sum_q |eps_q|^2; equals 1 for a unimodular eps(t) (Parseval).
    double parseval_sum() const;
};

struct SqueezingConstraint {
    bool valid = false;
    long pairing_offset = 0;   // q' = q + offset pairs resonantly
};

// Sidebands of the sinusoidal modulation: eps_q = e^{-iz} i^q J_q(z),
// nu_q = (z+q) m omega_a, for q in [-qmax, qmax].
FourierModulation sinusoidal_fourier(double z, double m, double omega_a, int qmax);

// Sidebands of an arbitrary periodic delta(t): the mean of delta becomes a
// uniform frequency offset, the detrended phase is Fourier-analyzed on a
// uniform grid (trapezoid rule; the phase integral uses cumulative Simpson).
// Throws NonConvergenceError if the Parseval deficit exceeds 1e-4.
FourierModulation numeric_fourier(const GenericPeriodicModulation& spec,
                                  int qmax, int quad_points = 4096);

// Dispatch over the modulation variants: NoModulation yields the single
// eps_0 = 1 term, sinusoidal the Bessel sidebands, generic the numeric path.
FourierModulation fourier_modulation(const ModulationSpec& spec, double omega_a,
                                     int qmax, int quad_points = 4096);

// The squeezing term survives at long times iff 2z and 2/m are integers;
// then nu_q + nu_{q'} + 2 omega_a = 0 has integer solutions
// q' = -q - (2z + 2/m), i.e. offset = -(2z + 2/m).
SqueezingConstraint validate_squeezing_constraint(double z, double m);

// eps(t) = sum_q eps_q exp(i nu_q t).
std::complex<double> eval_eps(double t, const FourierModulation& fm);

// Two-column CSV (t, delta), uniform spacing, exactly one period.
GenericPeriodicModulation load_modulation_csv(const std::string& path);

// Sample a callable delta(t) on n uniform points over one period.
template <typename F>
GenericPeriodicModulation sample_periodic(F&& delta_of_t, double period, int n) {
    GenericPeriodicModulation g;
    g.period = period;
    g.time = Eigen::ArrayXd::LinSpaced(n, 0.0, period * (n - 1.0) / n);
    g.delta.resize(n);
    for (int k = 0; k < n; ++k) g.delta[k] = delta_of_t(g.time[k]);
    return g;
}

}  // namespace sqres
