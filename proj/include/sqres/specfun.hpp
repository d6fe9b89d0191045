#pragma once

#include <Eigen/Core>

namespace sqres {

// Inclusive order window for Bessel evaluations (symmetric around 0 when
// used for Parseval checks).
struct BesselOrderRange {
    int qmin = 0;
    int qmax = 0;
    bool valid() const { return qmin <= qmax; }
};

// Half-integer angular momentum labels for <j1 m1; j2 m2 | J M>.
struct AngularMomentumLabels {
    double j1 = 0, j2 = 0, J = 0;
    double m1 = 0, m2 = 0, M = 0;
};

// Integer-order Bessel function of the first kind, J_q(z), by backward
// (Miller) recurrence with normalization. Stable for |q| >> z; relative
// accuracy ~1e-14 for |z| <= 50. Negative q and z handled by parity.
double bessel_j(int q, double z);

// J_0(z) .. J_qmax(z) in one backward pass.
Eigen::ArrayXd bessel_j_array(int qmax, double z);

// J_q(z) for q in [range.qmin, range.qmax], one value per order.
Eigen::ArrayXd bessel_j_window(const BesselOrderRange& range, double z);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> via the Racah sum,
// factorials in log space with sign tracking (Condon-Shortley phases).
// Returns 0 when M != m1+m2 or the triangle rule fails.
double clebsch_gordan(const AngularMomentumLabels& labels);

// Finite-time kernel t*sinc(omega*t); tends to pi*delta(omega) for large t
// (its integral over all omega is pi). Even in omega; value t at omega = 0.
double sinc_kernel(double omega, double t);

}  // namespace sqres
