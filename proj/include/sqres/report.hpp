#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sqres/mecoeff.hpp"

namespace sqres {

// Fixed 9-significant-digit formatting; all emitted files use it so that
// identical configurations produce byte-identical output.
std::string fmt_g9(double v);
std::string version_string();

// One computed coefficient set with its inputs, serializable as a key-value
// document or one CSV row.
struct CoefficientReport {
    // inputs
    double z = 0, m = 0;
    double omega_a = 10.0;
    double n_a = 1000.0;
    int qmax = 20;
    double phi = 0;   // drive phase used for the gamma_phi columns

    MECoefficients c;
    SqueezingClass cls;
    double gamma_phi_val = 0;
    double Gamma_phi_val = 0;
    double convergence_estimate = 0;
    std::string status = "ok";

    static std::vector<std::string> csv_columns();
    std::vector<std::string> csv_values() const;
    void write_keyvalue(std::ostream& os) const;
};

CoefficientReport make_report(double z, double m, const LorentzianReservoir& res,
                              int qmax, double phi = 0.0);

// '# key = value' comment header lines common to every emitted file.
void write_file_header(std::ostream& os, const std::string& command,
                       const std::vector<std::pair<std::string, std::string>>& params);

}  // namespace sqres
