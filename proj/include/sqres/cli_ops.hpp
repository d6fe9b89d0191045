#pragma once

#include <string>
#include <vector>

#include "sqres/report.hpp"

namespace sqres {

// Parameter scans and figure-data emission live in the library so they can
// be exercised directly by tests; the CLI is a thin shell over them.

enum class ScanVariable { Z, M, NA, OmegaA, Phi };

ScanVariable parse_scan_variable(const std::string& name);

struct ScanConfig {
    ScanVariable var = ScanVariable::Z;
    std::vector<double> values;
    // fixed parameters (the scanned one is ignored)
    double z = 1.0, m = 2.0, omega_a = 10.0, n_a = 1000.0, phi = 0.0;
    int qmax = 20;
    int threads = 1;
};

struct ScanResult {
    std::vector<CoefficientReport> rows;   // input order
    bool any_domain_error = false;
};

// Grid points are evaluated independently (up to cfg.threads workers);
// output order is the input order. Domain errors mark the row and the scan
// continues.
ScanResult run_scan(const ScanConfig& cfg);

void write_scan_csv(std::ostream& os, const ScanConfig& cfg, const ScanResult& res);

// Plot-ready CSV data for the standard figures (fixed parameter sets
// omega_a = 10 kappa, n_a = 1000):
//   fig1          response curve gamma_T, Delta_T on [-2 omega_a, 2 omega_a]
//   fig2a/b       gammaN - gamma|M| vs z for m = 2 / m = 1
//   fig2c         gammaN - gamma|M| vs m at z = 1
//   fig2d         gamma|M| / gamma(N+1/2) vs z for m = 2
//   fig3a         fluorescence spectrum z = 3 vs unmodulated (x5)
//   fig3b         same spectrum vs single Lorentzian of width gamma(N+1/2)
//   fig4a/b       driven central peak for phi in {pi, pi/2, 0}, z = 1 / z = 3
// Returns the path of the file written. Throws DomainError for unknown ids.
std::string emit_figure_data(const std::string& which, const std::string& out_dir);

const std::vector<std::string>& figure_ids();

}  // namespace sqres
