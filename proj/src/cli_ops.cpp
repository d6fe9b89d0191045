#include "sqres/cli_ops.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <thread>

#include "sqres/dynamics.hpp"
#include "sqres/errors.hpp"

namespace sqres {

namespace {
constexpr double kPi = std::numbers::pi;

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}
}  // namespace

ScanVariable parse_scan_variable(const std::string& name) {
    if (name == "z") return ScanVariable::Z;
    if (name == "m") return ScanVariable::M;
    if (name == "n_a" || name == "na") return ScanVariable::NA;
    if (name == "omega_a") return ScanVariable::OmegaA;
    if (name == "phi") return ScanVariable::Phi;
    throw DomainError("unknown scan variable '" + name +
                      "' (expected z, m, n_a, omega_a, phi)");
}

ScanResult run_scan(const ScanConfig& cfg) {
    if (cfg.values.empty()) throw DomainError("run_scan: empty grid");
    const int n = static_cast<int>(cfg.values.size());
    ScanResult res;
    res.rows.resize(n);

    const auto eval_point = [&](int i) {
        const double v = cfg.values[i];
        double z = cfg.z, m = cfg.m, omega_a = cfg.omega_a, n_a = cfg.n_a,
               phi = cfg.phi;
        switch (cfg.var) {
            case ScanVariable::Z: z = v; break;
            case ScanVariable::M: m = v; break;
            case ScanVariable::NA: n_a = v; break;
            case ScanVariable::OmegaA: omega_a = v; break;
            case ScanVariable::Phi: phi = v; break;
        }
        try {
            res.rows[i] = make_report(z, m, {omega_a, 1.0, n_a, 1.0}, cfg.qmax, phi);
        } catch (const DomainError& e) {
            CoefficientReport bad;
            bad.z = z;
            bad.m = m;
            bad.omega_a = omega_a;
            bad.n_a = n_a;
            bad.qmax = cfg.qmax;
            bad.phi = phi;
            bad.status = std::string("domain_error: ") + e.what();
            res.rows[i] = bad;
        }
    };

    const int nthreads = std::clamp(cfg.threads, 1, 64);
    if (nthreads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) eval_point(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (int i = t; i < n; i += nthreads) eval_point(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& r : res.rows)
        if (r.status != "ok") res.any_domain_error = true;
    return res;
}

void write_scan_csv(std::ostream& os, const ScanConfig& cfg, const ScanResult& res) {
    const char* varname = "z";
    switch (cfg.var) {
        case ScanVariable::Z: varname = "z"; break;
        case ScanVariable::M: varname = "m"; break;
        case ScanVariable::NA: varname = "n_a"; break;
        case ScanVariable::OmegaA: varname = "omega_a"; break;
        case ScanVariable::Phi: varname = "phi"; break;
    }
    write_file_header(os, "scan",
                      {{"var", varname},
                       {"points", std::to_string(cfg.values.size())},
                       {"z", fmt_g9(cfg.z)},
                       {"m", fmt_g9(cfg.m)},
                       {"omega_a", fmt_g9(cfg.omega_a)},
                       {"n_a", fmt_g9(cfg.n_a)},
                       {"phi", fmt_g9(cfg.phi)},
                       {"qmax", std::to_string(cfg.qmax)}});
    write_csv_row(os, CoefficientReport::csv_columns());
    for (const auto& r : res.rows) write_csv_row(os, r.csv_values());
}

namespace {

const LorentzianReservoir kFigureReservoir{10.0, 1.0, 1000.0, 1.0};

std::vector<double> z_grid() {
    std::vector<double> v;
    for (double z = 0.5; z < 9.75; z += 0.5) v.push_back(z);
    return v;
}

void emit_scan_figure(std::ostream& os, ScanVariable var, std::vector<double> values,
                      double z_fixed, double m_fixed) {
    ScanConfig cfg;
    cfg.var = var;
    cfg.values = std::move(values);
    cfg.z = z_fixed;
    cfg.m = m_fixed;
    cfg.omega_a = kFigureReservoir.omega_a;
    cfg.n_a = kFigureReservoir.n_a;
    write_scan_csv(os, cfg, run_scan(cfg));
}

void emit_fig1(std::ostream& os) {
    const auto& res = kFigureReservoir;
    write_file_header(os, "fig1",
                      {{"omega_a", fmt_g9(res.omega_a)}, {"n_a", fmt_g9(res.n_a)}});
    os << "omega_over_kappa,gamma_T,delta_T\n";
    const int npts = 4001;
    for (int i = 0; i < npts; ++i) {
        const double w = -2.0 * res.omega_a +
                         4.0 * res.omega_a * i / static_cast<double>(npts - 1);
        write_csv_row(os, {fmt_g9(w), fmt_g9(lorentzian_gamma_T(w, res)),
                           fmt_g9(lorentzian_delta_T(w, res))});
    }
}

void emit_fig3(std::ostream& os, bool against_single_lorentzian) {
    const auto c = sinusoidal_coefficients(3.0, 2.0, kFigureReservoir);
    const auto c_rwa = MECoefficients{0.0, kFigureReservoir.n_a,
                                      kFigureReservoir.n_a + 1.0, 0.0, false};
    write_file_header(os, against_single_lorentzian ? "fig3b" : "fig3a",
                      {{"z", "3"},
                       {"m", "2"},
                       {"omega_a", fmt_g9(kFigureReservoir.omega_a)},
                       {"n_a", fmt_g9(kFigureReservoir.n_a)}});
    const int npts = 4001;
    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(npts, -2000.0, 2000.0);
    const auto s_mod = fluorescence_spectrum(c, grid);
    const double N = c.big_N();
    const double w_ref = c.gamma_N + 0.5 * c.gamma();   // gamma (N + 1/2)
    if (against_single_lorentzian) {
        os << "omega_minus_omega_a_over_gamma_c,S_modulated,S_lorentzian_ref\n";
        for (int i = 0; i < npts; ++i) {
            const double ref = (2.0 * N / (2.0 * N + 1.0)) / kPi * w_ref /
                               (w_ref * w_ref + grid[i] * grid[i]);
            write_csv_row(os, {fmt_g9(grid[i]), fmt_g9(s_mod.values[i]), fmt_g9(ref)});
        }
    } else {
        const auto s_rwa = fluorescence_spectrum(c_rwa, grid);
        os << "omega_minus_omega_a_over_gamma_c,S_modulated,S_unmodulated_x5\n";
        for (int i = 0; i < npts; ++i)
            write_csv_row(os, {fmt_g9(grid[i]), fmt_g9(s_mod.values[i]),
                               fmt_g9(5.0 * s_rwa.values[i])});
    }
}

void emit_fig4(std::ostream& os, double z) {
    const auto c = sinusoidal_coefficients(z, 2.0, kFigureReservoir);
    write_file_header(os, z == 1.0 ? "fig4a" : "fig4b",
                      {{"z", fmt_g9(z)},
                       {"m", "2"},
                       {"omega_a", fmt_g9(kFigureReservoir.omega_a)},
                       {"n_a", fmt_g9(kFigureReservoir.n_a)}});
    os << "omega_minus_omega_a_over_gamma_c,S_phi_pi,S_phi_half_pi,S_phi_zero\n";
    const int npts = 4001;
    const double gp_pi = gamma_phi(c, kPi);
    const double gp_half = gamma_phi(c, 0.5 * kPi);
    const double gp_zero = gamma_phi(c, 0.0);
    for (int i = 0; i < npts; ++i) {
        const double w = -800.0 + 1600.0 * i / static_cast<double>(npts - 1);
        const auto peak = [&](double gp) { return gp / (w * w + gp * gp); };
        write_csv_row(os, {fmt_g9(w), fmt_g9(peak(gp_pi)), fmt_g9(peak(gp_half)),
                           fmt_g9(peak(gp_zero))});
    }
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig1",  "fig2a", "fig2b",
                                                 "fig2c", "fig2d", "fig3a",
                                                 "fig3b", "fig4a", "fig4b"};
    return ids;
}

std::string emit_figure_data(const std::string& which, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / (which + ".csv");
    std::ofstream os(path);
    if (!os) throw DomainError("emit_figure_data: cannot write " + path.string());

    if (which == "fig1") {
        emit_fig1(os);
    } else if (which == "fig2a" || which == "fig2d") {
        emit_scan_figure(os, ScanVariable::Z, z_grid(), 1.0, 2.0);
    } else if (which == "fig2b") {
        emit_scan_figure(os, ScanVariable::Z, z_grid(), 1.0, 1.0);
    } else if (which == "fig2c") {
        emit_scan_figure(os, ScanVariable::M,
                         {2.0, 1.0, 2.0 / 3.0, 0.5, 0.4, 1.0 / 3.0}, 1.0, 2.0);
    } else if (which == "fig3a") {
        emit_fig3(os, false);
    } else if (which == "fig3b") {
        emit_fig3(os, true);
    } else if (which == "fig4a") {
        emit_fig4(os, 1.0);
    } else if (which == "fig4b") {
        emit_fig4(os, 3.0);
    } else {
        throw DomainError("emit_figure_data: unknown figure id '" + which + "'");
    }
    return path.string();
}

}  // namespace sqres
