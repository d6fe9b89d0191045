#include "sqres/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <vector>

#include "sqres/errors.hpp"

namespace sqres {

namespace {
constexpr double kPi = std::numbers::pi;
}

double planck_occupation(double omega, double temperature) {
    if (!(omega > 0)) throw DomainError("planck_occupation: omega > 0 required");
    if (temperature < 0) throw DomainError("planck_occupation: temperature >= 0 required");
    if (temperature == 0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

double GenericReservoir::g0_at(double w) const {
    const int n = static_cast<int>(omega.size());
    if (n == 0 || w < omega[0] || w > omega[n - 1]) return 0.0;
    const auto* begin = omega.data();
    const auto* it = std::upper_bound(begin, begin + n, w);
    int i = static_cast<int>(it - begin) - 1;
    i = std::clamp(i, 0, n - 2);
    const double frac = (w - omega[i]) / (omega[i + 1] - omega[i]);
    return g0[i] * (1.0 - frac) + g0[i + 1] * frac;
}

double GenericReservoir::occupation_at(double w) const {
    if (std::holds_alternative<FixedOccupation>(occupation))
        return std::get<FixedOccupation>(occupation).n;
    const double aw = std::abs(w);
    if (aw == 0.0)
        throw DomainError("Planck occupation diverges at zero frequency");
    return planck_occupation(aw, std::get<PlanckOccupation>(occupation).temperature);
}

double GenericReservoir::g_T(double w) const {
    const double a = g0_at(w);
    const double b = g0_at(-w);
    if (a == 0.0 && b == 0.0) return 0.0;
    const double nbar = occupation_at(w);   // n(-w) evaluated as n(|w|)
    return a * (1.0 + nbar) + b * nbar;
}

double lorentzian_gamma_T(double omega, const LorentzianReservoir& res) {
    const double k = res.kappa;
    const double xm = (omega - res.omega_a) / k;
    const double xp = (omega + res.omega_a) / k;
    return res.gamma_c * ((res.n_a + 1.0) / (1.0 + 4.0 * xm * xm) +
                          res.n_a / (1.0 + 4.0 * xp * xp));
}

double lorentzian_delta_T(double omega, const LorentzianReservoir& res) {
    const double k = res.kappa;
    const double dm = res.omega_a - omega;
    const double dp = res.omega_a + omega;
    const double hw = 0.25 * k * k;   // (kappa/2)^2
    return res.gamma_c * ((res.n_a + 1.0) * 0.25 * k * dm / (dm * dm + hw) -
                          res.n_a * 0.25 * k * dp / (dp * dp + hw));
}

namespace {

// Uniform tabulation of G_T plus cubic interpolation; the PV transform runs
// on this table at full and halved resolution for the error estimate.
struct PvContext {
    double x0 = 0, h = 0;
    Eigen::ArrayXd y;   // G_T at the nodes
    double gate = 1e-5;
    double scale = 0;   // normalization for the convergence gate
    int window_cells = 8;   // minimum room around the pole, in cells

    int size() const { return static_cast<int>(y.size()); }
    double x_end() const { return x0 + h * (size() - 1); }

    // 4-point Lagrange interpolation with a stride (stride 2 = halved grid).
    double eval(double x, int stride) const {
        const int n = (size() - 1) / stride + 1;
        const double hh = h * stride;
        double p = (x - x0) / hh;
        int i1 = static_cast<int>(std::floor(p));
        i1 = std::clamp(i1, 1, n - 3);
        const double s = p - i1;
        const double w_m1 = -s * (s - 1.0) * (s - 2.0) / 6.0;
        const double w_0 = (s * s - 1.0) * (s - 2.0) / 2.0;
        const double w_1 = -s * (s + 1.0) * (s - 2.0) / 2.0;
        const double w_2 = s * (s * s - 1.0) / 6.0;
        const auto node = [&](int i) { return y[i * stride]; };
        return w_m1 * node(i1 - 1) + w_0 * node(i1) + w_1 * node(i1 + 1) +
               w_2 * node(i1 + 2);
    }

    // PV integral dw' G_T(w') / (w' - w): symmetric pairs around the pole
    // plus a one-sided trapezoid remainder. For poles within two cells of an
    // edge the pairing falls back to a single extrapolated cell.
    double pv(double w, int stride) const {
        const double hh = h * stride;
        const double left = w - x0;
        const double right = x_end() - w;

        const int K = std::max(
            1, static_cast<int>(std::floor(std::min(left, right) / hh)) - 1);
        const auto G = [&](double x) { return eval(x, stride); };

        // f(u) = (G(w+u) - G(w-u)) / u, f(0) = 2 G'(w) (5-point stencil)
        const double d1 = G(w + hh) - G(w - hh);
        const double d2 = G(w + 2 * hh) - G(w - 2 * hh);
        const double f0 = (8.0 * d1 - d2) / (6.0 * hh);

        double paired = 0.5 * f0;
        for (int i = 1; i <= K; ++i) {
            const double u = i * hh;
            const double f = (G(w + u) - G(w - u)) / u;
            paired += (i == K) ? 0.5 * f : f;
        }
        paired *= hh;

        // unpaired remainder on the far side of the pole
        double tail = 0.0;
        const double U = K * hh;
        if (left > right) {
            // integrate [x0, w - U]
            const double span = left - U;
            const int J = static_cast<int>(std::floor(span / hh));
            double prev = G(w - U) / (-U);
            for (int j = 1; j <= J; ++j) {
                const double x = w - U - j * hh;
                const double cur = G(x) / (x - w);
                tail += 0.5 * (prev + cur) * hh;
                prev = cur;
            }
            const double rem = span - J * hh;
            if (rem > 1e-12 * hh) {
                const double cur = y[0] / (x0 - w);
                tail += 0.5 * (prev + cur) * rem;
            }
        } else {
            const double span = right - U;
            const int J = static_cast<int>(std::floor(span / hh));
            double prev = G(w + U) / U;
            for (int j = 1; j <= J; ++j) {
                const double x = w + U + j * hh;
                const double cur = G(x) / (x - w);
                tail += 0.5 * (prev + cur) * hh;
                prev = cur;
            }
            const double rem = span - J * hh;
            if (rem > 1e-12 * hh) {
                const double cur = y[size() - 1] / (x_end() - w);
                tail += 0.5 * (prev + cur) * rem;
            }
        }
        return paired + tail;
    }

    GenericResponseResult response(double w) const {
        // the pole needs the symmetric pairing window on both sides, at both
        // resolutions of the error estimate
        const double margin = window_cells * h;
        if (w < x0 + margin || w > x_end() - margin)
            throw DomainError("generic_response: omega too close to the grid edge");
        GenericResponseResult r;
        r.gamma_T = 2.0 * kPi * eval(w, 1);
        r.delta_T = pv(w, 1);
        r.delta_err = std::abs(r.delta_T - pv(w, 2));
        const double norm = std::max(std::abs(r.delta_T), scale);
        if (r.delta_err > gate * norm)
            throw NonConvergenceError("generic_response: PV error estimate " +
                                      std::to_string(r.delta_err) +
                                      " exceeds gate at omega = " + std::to_string(w));
        return r;
    }

    // G_T has compact support on the table; outside it gamma_T vanishes and
    // the PV integral loses its pole, so a plain trapezoid of G/(w'-w) gives
    // the tail of Delta_T. Arguments inside the edge band still throw.
    bool outside(double w) const { return w <= x0 - 0.5 * h || w >= x_end() + 0.5 * h; }

    double gamma_extended(double w) const {
        if (outside(w)) return 0.0;
        return 2.0 * kPi * eval(w, 1);
    }

    // best-effort variant for coefficient integrals: no error estimate or
    // convergence gate, and edge-band poles fall back to the clamped pairing
    double delta_extended(double w) const {
        if (!outside(w)) return pv(w, 1);
        double s = 0.0;
        const int n = size();
        for (int i = 0; i + 1 < n; ++i) {
            const double xa = x0 + i * h, xb = xa + h;
            s += 0.5 * (y[i] / (xa - w) + y[i + 1] / (xb - w)) * h;
        }
        return s;
    }
};

std::shared_ptr<PvContext> build_context(const GenericReservoir& res,
                                         const PvQuadConfig& cfg) {
    const int n = static_cast<int>(res.omega.size());
    if (n < 32) throw DomainError("generic_response: grid too small");
    for (int i = 1; i < n; ++i)
        if (!(res.omega[i] > res.omega[i - 1]))
            throw DomainError("generic_response: grid must be strictly increasing");

    auto ctx = std::make_shared<PvContext>();
    ctx->gate = cfg.error_gate;
    ctx->window_cells = std::max(2, cfg.pole_window_cells);
    const double span = res.omega[n - 1] - res.omega[0];
    ctx->x0 = res.omega[0];
    ctx->h = span / (n - 1);
    ctx->y.resize(n);
    for (int i = 0; i < n; ++i) ctx->y[i] = res.g_T(ctx->x0 + i * ctx->h);
    // Hilbert-transform magnitude scale of a peaked G_T is about a quarter of
    // the gamma_T maximum; used to normalize the convergence gate.
    ctx->scale = 0.25 * 2.0 * kPi * ctx->y.abs().maxCoeff();
    return ctx;
}

}  // namespace

GenericResponseResult generic_response(double omega, const GenericReservoir& res,
                                       const PvQuadConfig& cfg) {
    return build_context(res, cfg)->response(omega);
}

ReservoirResponse make_response(const LorentzianReservoir& res) {
    return {[res](double w) { return lorentzian_gamma_T(w, res); },
            [res](double w) { return lorentzian_delta_T(w, res); }};
}

ReservoirResponse make_response(const GenericReservoir& res, const PvQuadConfig& cfg) {
    auto ctx = build_context(res, cfg);
    return {[ctx](double w) { return ctx->gamma_extended(w); },
            [ctx](double w) { return ctx->delta_extended(w); }};
}

GenericReservoir tabulate_lorentzian(const LorentzianReservoir& res, double wmin,
                                     double wmax, int points) {
    if (!(wmax > wmin) || points < 2) throw DomainError("tabulate_lorentzian: bad window");
    GenericReservoir g;
    g.omega = Eigen::ArrayXd::LinSpaced(points, wmin, wmax);
    g.g0.resize(points);
    for (int i = 0; i < points; ++i) {
        const double x = (g.omega[i] - res.omega_a) / res.kappa;
        g.g0[i] = res.gamma_c / (2.0 * kPi) / (1.0 + 4.0 * x * x);
    }
    g.occupation = FixedOccupation{res.n_a};
    return g;
}

GenericReservoir load_spectrum_csv(const std::string& path, Occupation occ) {
    std::ifstream in(path);
    if (!in) throw DomainError("load_spectrum_csv: cannot open " + path);
    std::vector<double> ws, gs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double w, g;
        if (!(ss >> w >> g)) {
            if (ws.empty()) continue;   // header row
            throw DomainError("load_spectrum_csv: malformed line '" + line + "'");
        }
        ws.push_back(w);
        gs.push_back(g);
    }
    const int n = static_cast<int>(ws.size());
    if (n < 2) throw DomainError("load_spectrum_csv: need at least 2 samples");
    for (int i = 1; i < n; ++i)
        if (!(ws[i] > ws[i - 1]))
            throw DomainError("load_spectrum_csv: first column must strictly increase");
    for (double g : gs)
        if (g < 0) throw DomainError("load_spectrum_csv: G0 must be non-negative");

    GenericReservoir res;
    res.omega = Eigen::Map<Eigen::ArrayXd>(ws.data(), n);
    res.g0 = Eigen::Map<Eigen::ArrayXd>(gs.data(), n);
    res.occupation = occ;
    return res;
}

}  // namespace sqres
