// sqres command-line front end: master-equation coefficients, reservoir
// response curves, dynamics and spectra (kappa / gamma_c units), and the
// SI-unit rate estimates.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sqres/cli_ops.hpp"
#include "sqres/dynamics.hpp"
#include "sqres/errors.hpp"
#include "sqres/mecoeff.hpp"
#include "sqres/report.hpp"
#include "sqres/rydberg.hpp"

namespace {

using namespace sqres;
constexpr double kPi = std::numbers::pi;

struct OutputTarget {
    std::string path = "-";
    std::unique_ptr<std::ofstream> file;

    std::ostream& stream() {
        if (path == "-") return std::cout;
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw DomainError("cannot open output file " + path);
        }
        return *file;
    }
};

struct CoeffParams {
    double z = 1.0, m = 2.0, omega_a = 10.0, n_a = 1000.0, phi = 0.0;
    int qmax = 20;

    LorentzianReservoir reservoir() const { return {omega_a, 1.0, n_a, 1.0}; }

    void add_options(CLI::App* cmd, bool with_phi = false) {
        cmd->add_option("--z", z, "modulation strength z");
        cmd->add_option("--m", m, "modulation frequency in units of omega_a")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--omega-a", omega_a, "level spacing in units of kappa")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--n-a", n_a, "thermal occupation at omega_a")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--qmax", qmax, "sideband truncation")->check(CLI::Range(1, 500));
        if (with_phi) cmd->add_option("--phi", phi, "drive phase phi = 2(theta - varphi)");
    }
};

void warn_if_not_bad_cavity(const LorentzianReservoir& res) {
    if (!res.bad_cavity_ok())
        std::cerr << "warning: omega_a < 5 kappa, outside the bad-cavity regime\n";
}

std::vector<double> build_grid(double from, double to, double step) {
    if (!(step > 0) || to < from) throw DomainError("invalid scan range");
    std::vector<double> v;
    for (double x = from; x <= to + 0.5 * step; x += step) v.push_back(x);
    return v;
}

int cmd_coeffs_generic_modulation(const CoeffParams& p, OutputTarget& out,
                                  const std::string& csv_path) {
    const auto spec = load_modulation_csv(csv_path);
    const auto fm = numeric_fourier(spec, p.qmax);
    const auto resp = make_response(p.reservoir());
    const auto c = longtime_coefficients(fm, resp, p.omega_a);
    if (!c.squeezing_pair_found)
        std::cerr << "warning: no resonant sideband pair in the tabulated "
                     "modulation; gammaM = 0\n";
    CoefficientReport r;
    r.z = std::nan("");
    r.m = std::nan("");
    r.omega_a = p.omega_a;
    r.n_a = p.n_a;
    r.qmax = p.qmax;
    r.phi = p.phi;
    r.c = c;
    r.cls = classify_squeezing(c);
    r.gamma_phi_val = gamma_phi(c, p.phi);
    r.Gamma_phi_val = Gamma_phi_sideband(c, p.phi);
    auto& os = out.stream();
    os << "# modulation tabulated from " << csv_path << "\n";
    r.write_keyvalue(os);
    return 0;
}

int cmd_coeffs(const CoeffParams& p, OutputTarget& out, const std::string& format,
               double time, const std::string& modulation_csv) {
    warn_if_not_bad_cavity(p.reservoir());
    if (!modulation_csv.empty())
        return cmd_coeffs_generic_modulation(p, out, modulation_csv);
    if (time > 0) {
        // finite-time coefficients with the sinc kernel
        const auto fm = sinusoidal_fourier(p.z, p.m, p.omega_a, p.qmax);
        const auto resp = make_response(p.reservoir());
        const auto c = nonmarkov_coefficients(time, fm, resp, p.omega_a);
        auto& os = out.stream();
        os << "# " << version_string() << " coeffs (finite time)\n";
        os << "inputs.z = " << fmt_g9(p.z) << "\n";
        os << "inputs.m = " << fmt_g9(p.m) << "\n";
        os << "inputs.omega_a = " << fmt_g9(p.omega_a) << "\n";
        os << "inputs.n_a = " << fmt_g9(p.n_a) << "\n";
        os << "inputs.qmax = " << p.qmax << "\n";
        os << "inputs.t_kappa = " << fmt_g9(time) << "\n";
        os << "gammaN = " << fmt_g9(c.gamma_N) << "\n";
        os << "gammaNp1 = " << fmt_g9(c.gamma_Np1) << "\n";
        os << "gammaM_re = " << fmt_g9(c.gamma_M.real()) << "\n";
        os << "gammaM_im = " << fmt_g9(c.gamma_M.imag()) << "\n";
        os << "gammaM_abs = " << fmt_g9(std::abs(c.gamma_M)) << "\n";
        os << "delta_shift = " << fmt_g9(c.delta_shift) << "\n";
        return 0;
    }

    const auto report = make_report(p.z, p.m, p.reservoir(), p.qmax, p.phi);
    if (!report.c.squeezing_pair_found)
        std::cerr << "warning: no resonant sideband pair (2z or 2/m not integer); "
                     "gammaM = 0\n";
    auto& os = out.stream();
    if (format == "csv") {
        write_file_header(os, "coeffs", {{"z", fmt_g9(p.z)}, {"m", fmt_g9(p.m)}});
        auto cols = CoefficientReport::csv_columns();
        for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        os << "\n";
        auto vals = report.csv_values();
        for (size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
        os << "\n";
    } else {
        report.write_keyvalue(os);
    }
    return 0;
}

int cmd_scan(ScanConfig cfg, double from, double to, double step,
             const std::string& values, OutputTarget& out) {
    if (!values.empty()) {
        std::istringstream ss(values);
        std::string tok;
        while (std::getline(ss, tok, ',')) cfg.values.push_back(std::stod(tok));
    } else {
        cfg.values = build_grid(from, to, step);
    }
    const auto result = run_scan(cfg);
    write_scan_csv(out.stream(), cfg, result);
    if (result.any_domain_error) {
        std::cerr << "warning: domain errors on some grid points (rows marked)\n";
        return 2;
    }
    return 0;
}

int cmd_response(double omega_a, double n_a, double wmin, double wmax, int points,
                 const std::string& spectrum_csv, double fixed_n, double temperature,
                 OutputTarget& out) {
    auto& os = out.stream();
    if (spectrum_csv.empty()) {
        const LorentzianReservoir res{omega_a, 1.0, n_a, 1.0};
        warn_if_not_bad_cavity(res);
        write_file_header(os, "response",
                          {{"model", "lorentzian"},
                           {"omega_a", fmt_g9(omega_a)},
                           {"n_a", fmt_g9(n_a)}});
        os << "omega_over_kappa,gamma_T,delta_T\n";
        for (int i = 0; i < points; ++i) {
            const double w = wmin + (wmax - wmin) * i / static_cast<double>(points - 1);
            os << fmt_g9(w) << ',' << fmt_g9(lorentzian_gamma_T(w, res)) << ','
               << fmt_g9(lorentzian_delta_T(w, res)) << "\n";
        }
        return 0;
    }

    Occupation occ = FixedOccupation{fixed_n};
    if (temperature > 0) occ = PlanckOccupation{temperature};
    const auto res = load_spectrum_csv(spectrum_csv, occ);
    write_file_header(os, "response",
                      {{"model", "generic"},
                       {"spectrum", spectrum_csv},
                       {"occupation", temperature > 0 ? "planck" : "fixed"}});
    os << "omega_over_kappa,gamma_T,delta_T,delta_err\n";
    for (int i = 0; i < points; ++i) {
        const double w = wmin + (wmax - wmin) * i / static_cast<double>(points - 1);
        const auto r = generic_response(w, res);
        os << fmt_g9(w) << ',' << fmt_g9(r.gamma_T) << ',' << fmt_g9(r.delta_T) << ','
           << fmt_g9(r.delta_err) << "\n";
    }
    return 0;
}

int cmd_dynamics(const CoeffParams& p, double sx0, double sy0, double sz0,
                 double tmax, int points, OutputTarget& out) {
    warn_if_not_bad_cavity(p.reservoir());
    const auto c = sinusoidal_coefficients(p.z, p.m, p.reservoir(), p.qmax);
    if (tmax <= 0) tmax = 5.0 / c.gamma_x();
    const BlochVector s0{sx0, sy0, sz0};
    auto& os = out.stream();
    write_file_header(os, "dynamics",
                      {{"z", fmt_g9(p.z)},
                       {"m", fmt_g9(p.m)},
                       {"omega_a", fmt_g9(p.omega_a)},
                       {"n_a", fmt_g9(p.n_a)},
                       {"sx0", fmt_g9(sx0)},
                       {"sy0", fmt_g9(sy0)},
                       {"sz0", fmt_g9(sz0)}});
    os << "t_gamma_c,sx,sy,sz\n";
    for (int i = 0; i < points; ++i) {
        const double t = tmax * i / static_cast<double>(points - 1);
        const auto s = evolve_bloch(s0, c, t);
        os << fmt_g9(t) << ',' << fmt_g9(s.sx) << ',' << fmt_g9(s.sy) << ','
           << fmt_g9(s.sz) << "\n";
    }
    return 0;
}

int cmd_spectrum(const CoeffParams& p, double wmin, double wmax, int points,
                 OutputTarget& out) {
    warn_if_not_bad_cavity(p.reservoir());
    const auto c = sinusoidal_coefficients(p.z, p.m, p.reservoir(), p.qmax);
    if (wmax <= wmin) {
        wmax = 5.0 * c.gamma_y();
        wmin = -wmax;
    }
    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(points, wmin, wmax);
    const auto s = fluorescence_spectrum(c, grid);
    auto& os = out.stream();
    write_file_header(os, "spectrum",
                      {{"z", fmt_g9(p.z)},
                       {"m", fmt_g9(p.m)},
                       {"omega_a", fmt_g9(p.omega_a)},
                       {"n_a", fmt_g9(p.n_a)},
                       {"gamma_x", fmt_g9(s.width_narrow)},
                       {"gamma_y", fmt_g9(s.width_broad)}});
    os << "omega_minus_omega_a_over_gamma_c,S\n";
    for (int i = 0; i < points; ++i)
        os << fmt_g9(grid[i]) << ',' << fmt_g9(s.values[i]) << "\n";
    return 0;
}

int cmd_resfluor(const CoeffParams& p, double rabi, double wmin, double wmax,
                 int points, OutputTarget& out) {
    warn_if_not_bad_cavity(p.reservoir());
    const auto c = sinusoidal_coefficients(p.z, p.m, p.reservoir(), p.qmax);
    if (wmax <= wmin) {
        wmax = rabi + 5.0 * c.gamma_y();
        wmin = -wmax;
    }
    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(points, wmin, wmax);
    const auto s = resonance_fluorescence(c, rabi, p.phi, grid);
    if (s.drive && !s.drive->strong_drive_ok)
        std::cerr << "warning: Rabi frequency is not large compared to the "
                     "dephasing rates; three-peak form assumes a strong drive\n";
    auto& os = out.stream();
    write_file_header(os, "resfluor",
                      {{"z", fmt_g9(p.z)},
                       {"m", fmt_g9(p.m)},
                       {"omega_a", fmt_g9(p.omega_a)},
                       {"n_a", fmt_g9(p.n_a)},
                       {"Omega", fmt_g9(rabi)},
                       {"phi", fmt_g9(p.phi)},
                       {"gamma_phi", fmt_g9(s.width_narrow)},
                       {"Gamma_phi", fmt_g9(s.width_broad)}});
    os << "omega_minus_omega_a_over_gamma_c,S\n";
    for (int i = 0; i < points; ++i)
        os << fmt_g9(grid[i]) << ',' << fmt_g9(s.values[i]) << "\n";
    return 0;
}

int cmd_rydberg(int n, OutputTarget& out) {
    const auto t = dipole_moment(n);
    auto& os = out.stream();
    os << "# " << version_string() << " rydberg\n";
    os << "n = " << n << "\n";
    os << "radial_R_a0 = " << fmt_g9(t.radial_R) << "\n";
    os << "angular_A = " << fmt_g9(t.angular_A) << "\n";
    os << "dipole_d_ea0 = " << fmt_g9(t.dipole_d) << "\n";
    return 0;
}

void write_estimate(std::ostream& os, const ExperimentEstimate& e, bool circuit) {
    os << "# " << version_string() << (circuit ? " estimate (circuit)" : " estimate")
       << "\n";
    os << "inputs.omega_a_rad_s = " << fmt_g9(e.omega_a) << "\n";
    os << "inputs.kappa_s = " << fmt_g9(e.kappa) << "\n";
    os << "inputs.dipole_ea0 = " << fmt_g9(e.dipole_d) << "\n";
    if (!circuit) os << "inputs.temperature_K = " << fmt_g9(e.temperature) << "\n";
    os << "gamma_0_s = " << fmt_g9(e.gamma_0) << "\n";
    if (!circuit) os << "gamma_T_s = " << fmt_g9(e.gamma_T) << "\n";
    if (circuit) {
        os << "gamma_c_s = " << fmt_g9(e.gamma_c) << "\n";
        os << "gamma_x_inverse_s = " << fmt_g9(e.gamma_x_inverse) << "\n";
    }
    os << "coupling_g_s = " << fmt_g9(e.gate.g) << "\n";
    const bool all_ok = circuit ? (e.gate.omega_a_gg_kappa && e.gate.kappa_gg_g &&
                                   e.gate.kappa_gg_gamma0)
                                : e.gate.all();
    const auto flag = [&](bool ok) { return ok ? "pass" : "fail"; };
    os << "valid.omega_a_gg_kappa = " << flag(e.gate.omega_a_gg_kappa) << "\n";
    os << "valid.kappa_gg_g = " << flag(e.gate.kappa_gg_g) << "\n";
    os << "valid.kappa_gg_gamma0 = " << flag(e.gate.kappa_gg_gamma0) << "\n";
    if (!circuit) os << "valid.gammaT_ll_kappa = " << flag(e.gate.gammaT_ll_kappa) << "\n";
    os << "valid.all = " << flag(all_ok) << "\n";
    if (!all_ok) std::cerr << "warning: estimate outside its validity regime\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squeezed-reservoir engineering toolkit for a modulated "
                 "two-level system in a thermal reservoir"};
    app.require_subcommand(1);
    app.set_config("--config", "", "configuration file (INI/TOML keys per subcommand)");
    app.allow_config_extras(false);
    app.set_version_flag("--version", version_string());

    OutputTarget out;
    app.add_option("--out", out.path, "output path ('-' for stdout)")
        ->capture_default_str();

    // coeffs
    auto* coeffs = app.add_subcommand(
        "coeffs", "master-equation coefficients for sinusoidal modulation");
    CoeffParams cp;
    cp.add_options(coeffs, true);
    std::string format = "kv";
    coeffs->add_option("--format", format, "kv or csv")
        ->check(CLI::IsMember({"kv", "csv"}));
    double coeff_time = 0.0;
    coeffs->add_option("--time", coeff_time,
                       "finite evolution time (units 1/kappa) for the "
                       "non-Markovian coefficients");
    std::string modulation_csv;
    coeffs->add_option("--modulation-csv", modulation_csv,
                       "tabulated periodic delta(t), two columns t,delta over "
                       "one period (replaces the sinusoidal drive)");

    // scan
    auto* scan = app.add_subcommand("scan", "coefficient scan over one parameter");
    ScanConfig sc;
    std::string scan_var = "z", scan_values;
    double scan_from = 0.5, scan_to = 9.5, scan_step = 0.5;
    scan->add_option("--var", scan_var, "z, m, n_a, omega_a or phi");
    scan->add_option("--from", scan_from, "grid start");
    scan->add_option("--to", scan_to, "grid end");
    scan->add_option("--step", scan_step, "grid step");
    scan->add_option("--values", scan_values, "explicit comma-separated grid");
    scan->add_option("--z", sc.z, "fixed z");
    scan->add_option("--m", sc.m, "fixed m")->check(CLI::PositiveNumber);
    scan->add_option("--omega-a", sc.omega_a, "fixed omega_a")->check(CLI::PositiveNumber);
    scan->add_option("--n-a", sc.n_a, "fixed n_a")->check(CLI::NonNegativeNumber);
    scan->add_option("--phi", sc.phi, "fixed drive phase");
    scan->add_option("--qmax", sc.qmax, "sideband truncation")->check(CLI::Range(1, 500));
    scan->add_option("--threads", sc.threads, "worker threads")
        ->envname("SQRES_THREADS")
        ->check(CLI::Range(1, 64));

    // response
    auto* response = app.add_subcommand("response", "reservoir response curve");
    double r_omega_a = 10.0, r_n_a = 1000.0, r_wmin = 0.0, r_wmax = 0.0;
    double r_fixed_n = 0.0, r_temperature = 0.0;
    int r_points = 2001;
    std::string r_csv;
    response->add_option("--omega-a", r_omega_a)->check(CLI::PositiveNumber);
    response->add_option("--n-a", r_n_a)->check(CLI::NonNegativeNumber);
    response->add_option("--wmin", r_wmin, "grid start (default -2 omega_a)");
    response->add_option("--wmax", r_wmax, "grid end (default 2 omega_a)");
    response->add_option("--points", r_points)->check(CLI::Range(2, 2000000));
    response->add_option("--spectrum-csv", r_csv,
                         "tabulated coupling spectrum (omega, G0)");
    response->add_option("--occupation-n", r_fixed_n, "fixed occupation for the CSV");
    response->add_option("--temperature", r_temperature,
                         "Planck occupation temperature (energy units of kappa)");

    // dynamics
    auto* dynamics = app.add_subcommand("dynamics", "Bloch-vector trajectory");
    CoeffParams dp;
    dp.add_options(dynamics);
    double sx0 = 1.0 / std::sqrt(2.0), sy0 = 1.0 / std::sqrt(2.0), sz0 = 0.0;
    double tmax = 0.0;
    int d_points = 501;
    dynamics->add_option("--sx0", sx0);
    dynamics->add_option("--sy0", sy0);
    dynamics->add_option("--sz0", sz0);
    dynamics->add_option("--tmax", tmax, "end time in 1/gamma_c (default 5/gamma_x)");
    dynamics->add_option("--points", d_points)->check(CLI::Range(2, 2000000));

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "fluorescence spectrum");
    CoeffParams sp;
    sp.add_options(spectrum);
    double s_wmin = 0.0, s_wmax = 0.0;
    int s_points = 2001;
    spectrum->add_option("--wmin", s_wmin, "detuning start (default -5 gamma_y)");
    spectrum->add_option("--wmax", s_wmax, "detuning end (default 5 gamma_y)");
    spectrum->add_option("--points", s_points)->check(CLI::Range(2, 2000000));

    // resfluor
    auto* resfluor =
        app.add_subcommand("resfluor", "driven resonance-fluorescence spectrum");
    CoeffParams rp;
    rp.add_options(resfluor, true);
    double rabi = 1000.0, rf_wmin = 0.0, rf_wmax = 0.0;
    int rf_points = 2001;
    resfluor->add_option("--rabi", rabi, "Rabi frequency (gamma_c units)")
        ->check(CLI::PositiveNumber);
    resfluor->add_option("--wmin", rf_wmin);
    resfluor->add_option("--wmax", rf_wmax);
    resfluor->add_option("--points", rf_points)->check(CLI::Range(2, 2000000));

    // rydberg
    auto* rydberg = app.add_subcommand(
        "rydberg", "circular-state dipole matrix element (units e a0)");
    int ry_n = 51;
    rydberg->add_option("--n", ry_n, "principal quantum number")->check(CLI::Range(2, 10000));

    // estimate
    auto* estimate =
        app.add_subcommand("estimate", "SI-unit rate estimates with validity gate");
    int es_n = 51;
    double es_dipole = 0.0, es_freq_ghz = 1.0, es_kappa = 2e5, es_temperature = 300.0;
    bool es_circuit = false;
    estimate->add_option("--n", es_n, "principal quantum number for the dipole");
    estimate->add_option("--dipole", es_dipole, "dipole override (e a0)");
    estimate->add_option("--freq-ghz", es_freq_ghz, "transition frequency in GHz")
        ->check(CLI::PositiveNumber);
    estimate->add_option("--kappa", es_kappa, "cavity linewidth (s^-1)")
        ->check(CLI::PositiveNumber);
    estimate->add_option("--temperature", es_temperature, "temperature (K)")
        ->check(CLI::PositiveNumber);
    estimate->add_flag("--circuit", es_circuit,
                       "cavity-coupling estimate (gamma_c, gamma_x^-1)");

    // figures
    auto* figures = app.add_subcommand("figures", "plot-ready CSV data files");
    std::string fig_which = "all", fig_outdir = "figures";
    figures->add_option("--which", fig_which, "figure id or 'all'");
    figures->add_option("--outdir", fig_outdir, "output directory");

    try {
        app.parse(argc, argv);

        if (*coeffs) return cmd_coeffs(cp, out, format, coeff_time, modulation_csv);
        if (*scan) {
            sc.var = parse_scan_variable(scan_var);
            return cmd_scan(sc, scan_from, scan_to, scan_step, scan_values, out);
        }
        if (*response) {
            if (r_wmax <= r_wmin) {
                r_wmin = -2.0 * r_omega_a;
                r_wmax = 2.0 * r_omega_a;
            }
            return cmd_response(r_omega_a, r_n_a, r_wmin, r_wmax, r_points, r_csv,
                                r_fixed_n, r_temperature, out);
        }
        if (*dynamics) return cmd_dynamics(dp, sx0, sy0, sz0, tmax, d_points, out);
        if (*spectrum) return cmd_spectrum(sp, s_wmin, s_wmax, s_points, out);
        if (*resfluor) return cmd_resfluor(rp, rabi, rf_wmin, rf_wmax, rf_points, out);
        if (*rydberg) return cmd_rydberg(ry_n, out);
        if (*estimate) {
            const double omega_a = 2.0 * kPi * es_freq_ghz * 1e9;
            const double d =
                es_dipole > 0 ? es_dipole : std::abs(dipole_moment(es_n).dipole_d);
            if (es_circuit) {
                const auto e = circuit_qed_estimate(omega_a, es_kappa, d);
                write_estimate(out.stream(), e, true);
            } else {
                const auto e = thermal_estimate(d, omega_a, es_kappa, es_temperature);
                write_estimate(out.stream(), e, false);
            }
            return 0;
        }
        if (*figures) {
            if (fig_which == "all") {
                for (const auto& id : figure_ids())
                    std::cerr << "wrote " << emit_figure_data(id, fig_outdir) << "\n";
            } else {
                std::cerr << "wrote " << emit_figure_data(fig_which, fig_outdir) << "\n";
            }
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    }
}
