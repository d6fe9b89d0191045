#pragma once

// Independent numerical oracles used to freeze expected values. Everything
// here deliberately avoids the library's own evaluation paths.

#include <functional>

#include "sqres/reservoir.hpp"

namespace oracles {

// J_q(z) from the ascending power series in long double (q >= 0).
double bessel_series(int q, double z);

// ln(n!) as a compensated sum of logs.
double ln_factorial(int n);

// Composite Simpson with n (odd) points.
double simpson(const std::function<double(double)>& f, double a, double b, int n);

// PV integral of G_T(w')/(w' - w) for the analytic Lorentzian response,
// via symmetric pairing on [0, U] with adaptive refinement plus analytic
// wings; independent of the tabulated PV path in the library.
double pv_lorentzian(double w, const sqres::LorentzianReservoir& res);

}  // namespace oracles
