#pragma once

#include <complex>

#include "sqres/modulation.hpp"
#include "sqres/reservoir.hpp"

namespace sqres {

// Master-equation parameter set. gamma_N, gamma_Np1 and the complex gamma_M
// are the primary coefficients (rates, units gamma_c); everything else is
// derived. delta_shift is the Hamiltonian energy correction, computed for
// completeness and excluded from the dynamics by default.
struct MECoefficients {
    double delta_shift = 0;
    double gamma_N = 0;
    double gamma_Np1 = 0;
    std::complex<double> gamma_M{0, 0};
    bool squeezing_pair_found = false;

    double gamma() const { return gamma_Np1 - gamma_N; }
    double big_N() const { return gamma_N / gamma(); }
    std::complex<double> big_M() const { return gamma_M / gamma(); }
    double abs_M() const { return std::abs(big_M()); }
    // M = |M| e^{2 i phi}; phi fixes the slow quadrature.
    double squeeze_phase() const { return 0.5 * std::arg(gamma_M); }
    double gamma_x() const { return gamma_N - std::abs(gamma_M) + 0.5 * gamma(); }
    double gamma_y() const { return gamma_N + std::abs(gamma_M) + 0.5 * gamma(); }
};

enum class SqueezingKind { None, Classical, Quantum, Unphysical };

struct SqueezingClass {
    SqueezingKind kind = SqueezingKind::None;
    double ratio_to_bound = 0;   // |M| / sqrt(N(N+1))
};

const char* to_string(SqueezingKind k);

// Long-time (Markovian) coefficients for an arbitrary sideband decomposition:
//   gamma N     = sum_q |eps_q|^2 gamma_T(-omega_a - nu_q)
//   gamma (N+1) = sum_q |eps_q|^2 gamma_T(+omega_a + nu_q)
//   gamma M     = sum over pairs with |nu_q + nu_q' + 2 omega_a| < pair_tol of
//                 eps_q eps_q' [ gamma_T(omega_a+nu_q)/2 + gamma_T(-omega_a-nu_q)/2
//                                + i Delta_T(omega_a+nu_q) - i Delta_T(-omega_a-nu_q) ]
// If no pair satisfies the resonance constraint, gamma_M = 0 and
// squeezing_pair_found = false (callers may warn).
// pair_tol < 0 selects the default 1e-9 * omega_a.
MECoefficients longtime_coefficients(const FourierModulation& fm,
                                     const ReservoirResponse& resp,
                                     double omega_a, double pair_tol = -1.0);

// Bessel-sum specialization for the sinusoidal modulation and a Lorentzian
// reservoir. The gamma_M phase follows the printed closed form
// e^{-i2z} (-1)^{z+1/m} (principal branch), which for odd 2z+2/m differs by
// an overall sign from the raw eps_q eps_q' product; the sign is a
// time-origin gauge of M.
MECoefficients sinusoidal_coefficients(double z, double m,
                                       const LorentzianReservoir& res,
                                       int qmax = 20);

struct KernelQuadConfig {
    double omega_window = 0;   // half-width; 0 = auto
    int points = 0;            // 0 = auto from window and t
};

// Finite-time coefficients with the kernel delta_t(omega) = t sinc(omega t)
// (normalized by 1/pi inside the integrals so that delta_t -> pi delta).
// Retains the oscillatory cross terms e^{i(nu_q - nu_q')t} and
// e^{i(nu_q + nu_q' + 2 omega_a)t}. Throws NonConvergenceError if halving
// the quadrature resolution moves any coefficient by more than 1e-4 relative.
MECoefficients nonmarkov_coefficients(double t, const FourierModulation& fm,
                                      const ReservoirResponse& resp,
                                      double omega_a,
                                      const KernelQuadConfig& quad = {});

// Flat-spectrum closed form with only the q = 0 and q = -2 sidebands:
// N = |eps0|^2 n + |eps-2|^2 (n+1), M = eps0 eps-2 (2n+1), in units d^2/gamma.
struct FlatCaseResult {
    double N_over_unit = 0;
    std::complex<double> M_over_unit{0, 0};
};
FlatCaseResult flat_case_oracle(double n, std::complex<double> eps0,
                                std::complex<double> epsm2);

// None (|M| ~ 0), Classical (|M| <= N), Quantum (N < |M| <= sqrt(N(N+1))),
// Unphysical (beyond the quantum bound); boundaries resolve toward the lower
// class within 1e-9.
SqueezingClass classify_squeezing(const MECoefficients& c);

// Largest relative change of {gamma_N, gamma_Np1, |gamma_M|} when qmax is
// doubled; values above 1e-6 mean the truncation is not converged.
double sinusoidal_qmax_convergence(double z, double m,
                                   const LorentzianReservoir& res, int qmax);

}  // namespace sqres
