#include "sqres/report.hpp"

#include <cmath>
#include <cstdio>

#include "sqres/dynamics.hpp"
#include "sqres/errors.hpp"

namespace sqres {

std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string version_string() { return "sqres 0.1.0"; }

std::vector<std::string> CoefficientReport::csv_columns() {
    return {"z",
            "m",
            "omega_a",
            "n_a",
            "qmax",
            "phi",
            "gammaN",
            "gammaNp1",
            "gammaM_re",
            "gammaM_im",
            "gammaM_abs",
            "gamma",
            "N",
            "M_abs",
            "M_arg",
            "gamma_x",
            "gamma_y",
            "gammaN_minus_gammaAbsM",
            "gammaAbsM_over_gammaNplusHalf",
            "gamma_phi",
            "Gamma_phi",
            "delta_shift",
            "squeezing_class",
            "ratio_to_bound",
            "qmax_used",
            "convergence_estimate",
            "status"};
}

std::vector<std::string> CoefficientReport::csv_values() const {
    const bool ok = status == "ok";
    const auto num = [&](double v) { return ok ? fmt_g9(v) : std::string("nan"); };
    const double absM = std::abs(c.gamma_M);
    return {fmt_g9(z),
            fmt_g9(m),
            fmt_g9(omega_a),
            fmt_g9(n_a),
            std::to_string(qmax),
            fmt_g9(phi),
            num(c.gamma_N),
            num(c.gamma_Np1),
            num(c.gamma_M.real()),
            num(c.gamma_M.imag()),
            num(absM),
            num(c.gamma()),
            num(c.big_N()),
            num(c.abs_M()),
            num(std::arg(c.big_M())),
            num(c.gamma_x()),
            num(c.gamma_y()),
            num(c.gamma_N - absM),
            num(absM / (c.gamma_N + 0.5 * c.gamma())),
            num(gamma_phi_val),
            num(Gamma_phi_val),
            num(c.delta_shift),
            ok ? to_string(cls.kind) : "n/a",
            num(cls.ratio_to_bound),
            std::to_string(qmax),
            num(convergence_estimate),
            status};
}

void CoefficientReport::write_keyvalue(std::ostream& os) const {
    os << "# " << version_string() << " coefficient report\n";
    os << "inputs.z = " << fmt_g9(z) << "\n";
    os << "inputs.m = " << fmt_g9(m) << "\n";
    os << "inputs.omega_a = " << fmt_g9(omega_a) << "\n";
    os << "inputs.n_a = " << fmt_g9(n_a) << "\n";
    os << "inputs.qmax = " << qmax << "\n";
    os << "inputs.phi = " << fmt_g9(phi) << "\n";
    os << "status = " << status << "\n";
    if (status != "ok") return;
    const double absM = std::abs(c.gamma_M);
    os << "gammaN = " << fmt_g9(c.gamma_N) << "\n";
    os << "gammaNp1 = " << fmt_g9(c.gamma_Np1) << "\n";
    os << "gammaM_re = " << fmt_g9(c.gamma_M.real()) << "\n";
    os << "gammaM_im = " << fmt_g9(c.gamma_M.imag()) << "\n";
    os << "gammaM_abs = " << fmt_g9(absM) << "\n";
    os << "gamma = " << fmt_g9(c.gamma()) << "\n";
    os << "N = " << fmt_g9(c.big_N()) << "\n";
    os << "M_abs = " << fmt_g9(c.abs_M()) << "\n";
    os << "M_arg = " << fmt_g9(std::arg(c.big_M())) << "\n";
    os << "gamma_x = " << fmt_g9(c.gamma_x()) << "\n";
    os << "gamma_y = " << fmt_g9(c.gamma_y()) << "\n";
    os << "gammaN_minus_gammaAbsM = " << fmt_g9(c.gamma_N - absM) << "\n";
    os << "gammaAbsM_over_gammaNplusHalf = "
       << fmt_g9(absM / (c.gamma_N + 0.5 * c.gamma())) << "\n";
    os << "gamma_phi = " << fmt_g9(gamma_phi_val) << "\n";
    os << "Gamma_phi = " << fmt_g9(Gamma_phi_val) << "\n";
    os << "delta_shift = " << fmt_g9(c.delta_shift) << "\n";
    os << "squeezing_class = " << to_string(cls.kind) << "\n";
    os << "ratio_to_bound = " << fmt_g9(cls.ratio_to_bound) << "\n";
    os << "qmax_used = " << qmax << "\n";
    os << "convergence_estimate = " << fmt_g9(convergence_estimate) << "\n";
    os << "squeezing_pair_found = " << (c.squeezing_pair_found ? "true" : "false")
       << "\n";
}

CoefficientReport make_report(double z, double m, const LorentzianReservoir& res,
                              int qmax, double phi) {
    CoefficientReport r;
    r.z = z;
    r.m = m;
    r.omega_a = res.omega_a;
    r.n_a = res.n_a;
    r.qmax = qmax;
    r.phi = phi;
    r.c = sinusoidal_coefficients(z, m, res, qmax);
    r.cls = classify_squeezing(r.c);
    r.gamma_phi_val = gamma_phi(r.c, phi);
    r.Gamma_phi_val = Gamma_phi_sideband(r.c, phi);
    r.convergence_estimate = sinusoidal_qmax_convergence(z, m, res, qmax);
    return r;
}

void write_file_header(std::ostream& os, const std::string& command,
                       const std::vector<std::pair<std::string, std::string>>& params) {
    os << "# " << version_string() << " " << command << "\n";
    for (const auto& [k, v] : params) os << "# " << k << " = " << v << "\n";
}

}  // namespace sqres
