#include "sqres/mecoeff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "sqres/errors.hpp"
#include "sqres/specfun.hpp"

namespace sqres {

using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> i_pow(long q) {
    switch (((q % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// gamma_T/Delta_T combination entering the squeezing sum at sideband
// frequency nu (the partner frequency is -2 omega_a - nu).
std::complex<double> squeeze_bracket(const ReservoirResponse& r, double omega_a,
                                     double nu) {
    const double up = omega_a + nu;
    return 0.5 * r.gamma_T(up) + 0.5 * r.gamma_T(-up) +
           1i * (r.delta_T(up) - r.delta_T(-up));
}

}  // namespace

const char* to_string(SqueezingKind k) {
    switch (k) {
        case SqueezingKind::None: return "none";
        case SqueezingKind::Classical: return "classical";
        case SqueezingKind::Quantum: return "quantum";
        default: return "unphysical";
    }
}

MECoefficients longtime_coefficients(const FourierModulation& fm,
                                     const ReservoirResponse& resp,
                                     double omega_a, double pair_tol) {
    if (!(omega_a > 0)) throw DomainError("longtime_coefficients: omega_a > 0 required");
    if (fm.terms.empty()) throw DomainError("longtime_coefficients: empty modulation");
    const double tol = pair_tol < 0 ? 1e-9 * omega_a : pair_tol;

    MECoefficients c;
    for (const auto& term : fm.terms) {
        const double w2 = std::norm(term.eps);
        const double up = omega_a + term.nu;
        c.gamma_N += w2 * resp.gamma_T(-up);
        c.gamma_Np1 += w2 * resp.gamma_T(up);
        c.delta_shift += w2 * (resp.delta_T(up) - resp.delta_T(-up));
    }

    // resonant pairs nu_q + nu_q' + 2 omega_a = 0 (ordered; both orderings
    // contribute, which cancels the Delta_T parts pairwise)
    for (const auto& a : fm.terms) {
        for (const auto& b : fm.terms) {
            if (std::abs(a.nu + b.nu + 2.0 * omega_a) >= tol) continue;
            c.gamma_M += a.eps * b.eps * squeeze_bracket(resp, omega_a, a.nu);
            c.squeezing_pair_found = true;
        }
    }
    return c;
}

MECoefficients sinusoidal_coefficients(double z, double m,
                                       const LorentzianReservoir& res, int qmax) {
    if (qmax < 1) throw DomainError("sinusoidal_coefficients: qmax >= 1 required");
    if (!(m > 0) || z < 0) throw DomainError("sinusoidal_coefficients: need z >= 0, m > 0");
    if (!(res.omega_a > 0) || !(res.kappa > 0) || !(res.gamma_c > 0) || res.n_a < 0)
        throw DomainError("sinusoidal_coefficients: invalid reservoir");

    const Eigen::ArrayXd jarr = bessel_j_window({-qmax, qmax}, z);
    const auto J = [&](long q) { return jarr[q + qmax]; };
    const auto resp = make_response(res);
    const double wa = res.omega_a;

    MECoefficients c;
    for (int q = -qmax; q <= qmax; ++q) {
        const double j2 = J(q) * J(q);
        const double arg = wa * (1.0 + m * z + m * q);
        c.gamma_N += j2 * resp.gamma_T(-arg);
        c.gamma_Np1 += j2 * resp.gamma_T(arg);
        c.delta_shift += j2 * (resp.delta_T(arg) - resp.delta_T(-arg));
    }

    const SqueezingConstraint con = validate_squeezing_constraint(z, m);
    if (con.valid) {
        // printed closed-form phase e^{-i2z} (-1)^{z+1/m}, principal branch
        const long k = -con.pairing_offset;   // 2z + 2/m as an integer
        const std::complex<double> phase = std::exp(-2i * z) * i_pow(k);
        for (int q = -qmax; q <= qmax; ++q) {
            const long qp = -q - k;
            if (std::labs(qp) > qmax) continue;
            const double nu = (z + q) * m * wa;
            c.gamma_M += phase * J(q) * J(qp) * squeeze_bracket(resp, wa, nu);
            c.squeezing_pair_found = true;
        }
    }
    return c;
}

FlatCaseResult flat_case_oracle(double n, std::complex<double> eps0,
                                std::complex<double> epsm2) {
    FlatCaseResult r;
    r.N_over_unit = std::norm(eps0) * n + std::norm(epsm2) * (n + 1.0);
    r.M_over_unit = eps0 * epsm2 * (2.0 * n + 1.0);
    return r;
}

SqueezingClass classify_squeezing(const MECoefficients& c) {
    if (!(c.gamma() > 0)) throw DomainError("classify_squeezing: gamma <= 0");
    const double N = c.big_N();
    if (N < 0) throw DomainError("classify_squeezing: N < 0");
    const double absM = c.abs_M();
    const double bound = std::sqrt(N * (N + 1.0));
    const double atol = 1e-9 * std::max(1.0, N);

    SqueezingClass out;
    out.ratio_to_bound = bound > 0
                             ? absM / bound
                             : (absM <= atol ? 0.0 : std::numeric_limits<double>::infinity());
    if (absM < atol)
        out.kind = SqueezingKind::None;
    else if (absM <= N + atol)
        out.kind = SqueezingKind::Classical;
    else if (absM <= bound + atol)
        out.kind = SqueezingKind::Quantum;
    else
        out.kind = SqueezingKind::Unphysical;
    return out;
}

double sinusoidal_qmax_convergence(double z, double m, const LorentzianReservoir& res,
                                   int qmax) {
    const MECoefficients a = sinusoidal_coefficients(z, m, res, qmax);
    const MECoefficients b = sinusoidal_coefficients(z, m, res, 2 * qmax);
    const double scale = std::max({std::abs(b.gamma_N), std::abs(b.gamma_Np1), 1e-300});
    double worst = 0.0;
    const auto rel = [&](double x, double y) {
        return std::abs(x - y) / std::max(std::abs(y), 1e-9 * scale);
    };
    worst = std::max(worst, rel(a.gamma_N, b.gamma_N));
    worst = std::max(worst, rel(a.gamma_Np1, b.gamma_Np1));
    worst = std::max(worst, rel(std::abs(a.gamma_M), std::abs(b.gamma_M)));
    return worst;
}

namespace {

struct KernelIntegrals {
    // (1/pi) integral dw delta_t(w) * {gamma_T(w -+ A)/2, Delta_T(w -+ A)}
    double half_gamma_minus = 0, half_gamma_plus = 0;
    double delta_minus = 0, delta_plus = 0;
};

MECoefficients nonmarkov_eval(double t, const FourierModulation& fm,
                              const ReservoirResponse& resp, double omega_a,
                              double W, int npts) {
    // Simpson nodes and kernel weights over [-W, W]
    const double h = 2.0 * W / (npts - 1);
    Eigen::ArrayXd wk(npts);
    for (int i = 0; i < npts; ++i) {
        const double w = -W + i * h;
        double simpson = (i == 0 || i == npts - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        wk[i] = simpson * (h / 3.0) * sinc_kernel(w, t) / kPi;
    }

    const int nterm = static_cast<int>(fm.terms.size());
    std::vector<KernelIntegrals> I(nterm);
    for (int k = 0; k < nterm; ++k) {
        const double A = omega_a + fm.terms[k].nu;
        KernelIntegrals acc;
        for (int i = 0; i < npts; ++i) {
            const double w = -W + i * h;
            acc.half_gamma_minus += wk[i] * 0.5 * resp.gamma_T(w - A);
            acc.half_gamma_plus += wk[i] * 0.5 * resp.gamma_T(w + A);
            acc.delta_minus += wk[i] * resp.delta_T(w - A);
            acc.delta_plus += wk[i] * resp.delta_T(w + A);
        }
        I[k] = acc;
    }

    std::complex<double> E = 0.0;
    for (const auto& term : fm.terms) E += term.eps * std::exp(1i * term.nu * t);

    MECoefficients c;
    std::complex<double> m_sum = 0.0;
    for (int k = 0; k < nterm; ++k) {
        const auto& term = fm.terms[k];
        const std::complex<double> e_t = term.eps * std::exp(1i * term.nu * t);
        const std::complex<double> X = e_t * std::conj(E);
        c.gamma_N += 2.0 * X.real() * I[k].half_gamma_minus +
                     2.0 * X.imag() * I[k].delta_minus;
        c.gamma_Np1 += 2.0 * X.real() * I[k].half_gamma_plus -
                       2.0 * X.imag() * I[k].delta_plus;
        c.delta_shift += X.real() * (I[k].delta_plus - I[k].delta_minus) +
                         X.imag() * (I[k].half_gamma_plus + I[k].half_gamma_minus);
        m_sum += e_t * (I[k].half_gamma_plus + I[k].half_gamma_minus +
                        1i * (I[k].delta_plus - I[k].delta_minus));
    }
    c.gamma_M = std::exp(2i * omega_a * t) * E * m_sum;
    c.squeezing_pair_found = true;   // all pairs retained at finite time
    return c;
}

}  // namespace

MECoefficients nonmarkov_coefficients(double t, const FourierModulation& fm,
                                      const ReservoirResponse& resp, double omega_a,
                                      const KernelQuadConfig& quad) {
    if (!(t > 0)) throw DomainError("nonmarkov_coefficients: t > 0 required");
    if (!(omega_a > 0)) throw DomainError("nonmarkov_coefficients: omega_a > 0 required");

    const double W = quad.omega_window > 0 ? quad.omega_window
                                           : std::max(6.0 * omega_a, 40.0);
    int npts = quad.points;
    if (npts <= 0) {
        // >= ~16 nodes per oscillation of sin(w t) across the window
        npts = std::max(8193, static_cast<int>(16.0 * W * t / kPi));
    }
    if (npts % 2 == 0) ++npts;

    const MECoefficients fine = nonmarkov_eval(t, fm, resp, omega_a, W, npts);
    const int ncoarse = (npts - 1) / 2 + 1;
    const MECoefficients coarse =
        nonmarkov_eval(t, fm, resp, omega_a, W, ncoarse % 2 ? ncoarse : ncoarse + 1);

    const double scale =
        std::max({std::abs(fine.gamma_N), std::abs(fine.gamma_Np1),
                  std::abs(fine.gamma_M), std::abs(fine.delta_shift), 1e-300});
    const auto rel = [&](double a, double b) {
        return std::abs(a - b) / std::max(std::abs(a), 1e-6 * scale);
    };
    const double worst =
        std::max({rel(fine.gamma_N, coarse.gamma_N), rel(fine.gamma_Np1, coarse.gamma_Np1),
                  rel(std::abs(fine.gamma_M), std::abs(coarse.gamma_M)),
                  rel(fine.delta_shift, coarse.delta_shift)});
    if (worst > 1e-4)
        throw NonConvergenceError(
            "nonmarkov_coefficients: quadrature not converged (rel change " +
            std::to_string(worst) + "); raise points/window");
    return fine;
}

}  // namespace sqres
