#pragma once

// CODATA 2018 SI constants. Only the rydberg/estimate layer works in SI;
// everything else uses kappa/gamma_c units and never touches these.

namespace sqres::constants {

inline constexpr double c_light = 2.99792458e8;        // m/s (exact)
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double eps0 = 8.8541878128e-12;       // F/m
inline constexpr double k_boltzmann = 1.380649e-23;    // J/K (exact)
inline constexpr double e_charge = 1.602176634e-19;    // C (exact)
inline constexpr double bohr_radius = 5.29177210903e-11;  // m
inline constexpr double e_a0 = e_charge * bohr_radius;    // C m, dipole unit

}  // namespace sqres::constants
