#include "sqres/modulation.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>

#include "sqres/errors.hpp"
#include "sqres/specfun.hpp"

namespace sqres {

using namespace std::complex_literals;

namespace {

// i^q for integer q, exact.
std::complex<double> i_pow(long q) {
    switch (((q % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// Phase integral of uniform periodic samples by cumulative Simpson
// (wrap-around parabola on the odd half-steps).
Eigen::ArrayXd cumulative_simpson(const Eigen::ArrayXd& f, double h) {
    const int n = static_cast<int>(f.size());
    Eigen::ArrayXd F(n);
    F[0] = 0.0;
    for (int k = 1; k < n; ++k) {
        if (k % 2 == 0) {
            F[k] = F[k - 2] + h / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
        } else {
            const double fnext = (k + 1 < n) ? f[k + 1] : f[0];
            F[k] = F[k - 1] + h / 12.0 * (5.0 * f[k - 1] + 8.0 * f[k] - fnext);
        }
    }
    return F;
}

}  // namespace

double FourierModulation::parseval_sum() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::norm(t.eps);
    return s;
}

FourierModulation sinusoidal_fourier(double z, double m, double omega_a, int qmax) {
    if (qmax < 1) throw DomainError("sinusoidal_fourier: qmax >= 1 required");
    if (!(m > 0) || !(omega_a > 0) || !std::isfinite(z) || !std::isfinite(m) ||
        !std::isfinite(omega_a))
        throw DomainError("sinusoidal_fourier: invalid parameters");

    const Eigen::ArrayXd j = bessel_j_window({-qmax, qmax}, z);
    const std::complex<double> pre = std::exp(-1i * z);
    FourierModulation fm;
    fm.qmax = qmax;
    fm.terms.reserve(2 * qmax + 1);
    for (int q = -qmax; q <= qmax; ++q)
        fm.terms.push_back({q, pre * i_pow(q) * j[q + qmax], (z + q) * m * omega_a});
    return fm;
}

FourierModulation fourier_modulation(const ModulationSpec& spec, double omega_a,
                                     int qmax, int quad_points) {
    if (std::holds_alternative<NoModulation>(spec)) {
        FourierModulation fm;
        fm.qmax = 0;
        fm.terms = {{0, 1.0, 0.0}};
        return fm;
    }
    if (std::holds_alternative<SinusoidalModulation>(spec)) {
        const auto& s = std::get<SinusoidalModulation>(spec);
        return sinusoidal_fourier(s.z, s.m, omega_a, qmax);
    }
    return numeric_fourier(std::get<GenericPeriodicModulation>(spec), qmax, quad_points);
}

FourierModulation numeric_fourier(const GenericPeriodicModulation& spec,
                                  int qmax, int quad_points) {
    if (!(spec.period > 0)) throw DomainError("numeric_fourier: period > 0 required");
    if (quad_points < 64) throw DomainError("numeric_fourier: quad_points >= 64 required");
    if (qmax < 1) throw DomainError("numeric_fourier: qmax >= 1 required");
    if (spec.time.size() != spec.delta.size() || spec.time.size() < 2)
        throw DomainError("numeric_fourier: bad tabulation");

    const double T = spec.period;
    const int n = quad_points;
    const double h = T / n;

    // resample delta onto n uniform points t_k = k h (linear interpolation,
    // periodic extension)
    Eigen::ArrayXd d(n);
    const int ntab = static_cast<int>(spec.time.size());
    const double t0 = spec.time[0];
    const double dt_tab = (spec.time[ntab - 1] - t0) / (ntab - 1);
    for (int i = 1; i < ntab; ++i)
        if (std::abs(spec.time[i] - spec.time[i - 1] - dt_tab) > 1e-9 * T)
            throw DomainError("numeric_fourier: tabulation must be uniform");
    for (int k = 0; k < n; ++k) {
        double t = std::fmod(k * h - t0, T);
        if (t < 0) t += T;
        const double x = t / dt_tab;
        const int i = std::min(static_cast<int>(x), ntab - 1);
        const double frac = x - i;
        const double next = (i + 1 < ntab) ? spec.delta[i + 1] : spec.delta[0];
        d[k] = spec.delta[i] * (1.0 - frac) + next * frac;
    }

    const double mean = d.mean();
    const Eigen::ArrayXd phase = cumulative_simpson(d - mean, h);

    Eigen::ArrayXcd eps_t(n);
    for (int k = 0; k < n; ++k) eps_t[k] = std::exp(1i * phase[k]);

    // rectangle rule on the periodic samples (spectrally accurate)
    const double w0 = 2.0 * std::numbers::pi / T;
    FourierModulation fm;
    fm.qmax = qmax;
    fm.terms.reserve(2 * qmax + 1);
    for (int q = -qmax; q <= qmax; ++q) {
        std::complex<double> c = 0.0;
        for (int k = 0; k < n; ++k)
            c += eps_t[k] * std::exp(-1i * (w0 * q) * (k * h));
        fm.terms.push_back({q, c / static_cast<double>(n), q * w0 + mean});
    }

    const double deficit = 1.0 - fm.parseval_sum();
    if (deficit > 1e-4)
        throw NonConvergenceError("numeric_fourier: Parseval deficit " +
                                  std::to_string(deficit) + " exceeds 1e-4; raise qmax");
    return fm;
}

SqueezingConstraint validate_squeezing_constraint(double z, double m) {
    if (!(m > 0)) throw DomainError("validate_squeezing_constraint: m > 0 required");
    SqueezingConstraint c;
    const double two_z = 2.0 * z;
    const double two_over_m = 2.0 / m;
    const bool z_ok = std::abs(two_z - std::lround(two_z)) < 1e-9;
    const bool m_ok = std::abs(two_over_m - std::lround(two_over_m)) < 1e-9;
    c.valid = z_ok && m_ok;
    if (c.valid) c.pairing_offset = -(std::lround(two_z) + std::lround(two_over_m));
    return c;
}

std::complex<double> eval_eps(double t, const FourierModulation& fm) {
    std::complex<double> s = 0.0;
    for (const auto& term : fm.terms) s += term.eps * std::exp(1i * term.nu * t);
    return s;
}

GenericPeriodicModulation load_modulation_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("load_modulation_csv: cannot open " + path);
    std::vector<double> ts, ds;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double t, d;
        if (!(ss >> t >> d)) {
            if (ts.empty()) continue;   // header row
            throw DomainError("load_modulation_csv: malformed line '" + line + "'");
        }
        ts.push_back(t);
        ds.push_back(d);
    }
    if (ts.size() < 4) throw DomainError("load_modulation_csv: need at least 4 samples");

    GenericPeriodicModulation g;
    const int n = static_cast<int>(ts.size());
    const double dt = (ts[n - 1] - ts[0]) / (n - 1);
    if (!(dt > 0)) throw DomainError("load_modulation_csv: time column must increase");
    for (int i = 1; i < n; ++i)
        if (std::abs(ts[i] - ts[i - 1] - dt) > 1e-9 * std::abs(dt) * n)
            throw DomainError("load_modulation_csv: uniform spacing required");
    // samples cover [t0, t0 + T) with T = n * dt
    g.period = n * dt;
    g.time = Eigen::Map<Eigen::ArrayXd>(ts.data(), n);
    g.delta = Eigen::Map<Eigen::ArrayXd>(ds.data(), n);
    return g;
}

}  // namespace sqres
