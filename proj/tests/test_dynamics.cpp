#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "sqres/dynamics.hpp"
#include "sqres/errors.hpp"

using namespace sqres;

namespace {
constexpr double kPi = std::numbers::pi;
const LorentzianReservoir kHot{10.0, 1.0, 1000.0, 1.0};

MECoefficients hot_coeffs(double z) {
    return sinusoidal_coefficients(z, 2.0, kHot, 20);
}
}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("dephasing rates at the published points") {
    const auto r1 = dephasing_rates(hot_coeffs(1.0));
    CHECK(r1.gamma_x == doctest::Approx(106.0).epsilon(0.01));
    CHECK(r1.gamma_y == doctest::Approx(309.0).epsilon(0.01));
    const auto r3 = dephasing_rates(hot_coeffs(3.0));
    CHECK(r3.gamma_x == doctest::Approx(31.580147509960).epsilon(1e-9));
    CHECK(r3.gamma_y == doctest::Approx(195.059667369148).epsilon(1e-9));

    // degenerate rates when M = 0
    MECoefficients c;
    c.gamma_N = 3.0;
    c.gamma_Np1 = 4.5;
    const auto r = dephasing_rates(c);
    CHECK(r.gamma_x == r.gamma_y);
    CHECK(r.gamma_x == doctest::Approx(3.75).epsilon(1e-14));
}

TEST_CASE("rate sum identity") {
    for (double z : {0.5, 1.0, 3.0, 9.5}) {
        const auto c = hot_coeffs(z);
        CHECK(c.gamma_x() + c.gamma_y() ==
              doctest::Approx(2.0 * (c.gamma_N + 0.5 * c.gamma())).epsilon(1e-14));
    }
}

TEST_CASE("bloch evolution closed form") {
    const auto c = hot_coeffs(1.0);
    const BlochVector s0{1.0, 0.0, 0.0};
    const auto s1 = evolve_bloch(s0, c, 1.0 / c.gamma_x());
    CHECK(s1.sx == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(s1.sy == 0.0);

    // long-time fixed point
    const auto sinf = evolve_bloch({0.3, -0.2, 0.9}, c, 1e3);
    const double N = c.big_N();
    CHECK(sinf.sx == doctest::Approx(0.0));
    CHECK(sinf.sz == doctest::Approx(-1.0 / (2.0 * N + 1.0)).epsilon(1e-12));

    // norm never exceeds the Bloch ball
    for (double t : {0.0, 1e-4, 1e-3, 0.1})
        CHECK(evolve_bloch({0.6, 0.48, 0.64}, c, t).norm2() <= 1.0 + 1e-9);

    CHECK_THROWS_AS(evolve_bloch({1.2, 0.0, 0.9}, c, 1.0), DomainError);
    CHECK_THROWS_AS(evolve_bloch(s0, c, -1.0), DomainError);
}

TEST_CASE("bloch evolution with the energy-correction flag") {
    const auto c = hot_coeffs(1.0);
    // zero shift reproduces the default path
    const auto a = evolve_bloch({0.5, 0.2, 0.0}, c, 0.01);
    const auto b = evolve_bloch({0.5, 0.2, 0.0}, c, 0.01, 0.0);
    CHECK(a.sx == b.sx);
    // strong precession mixes the quadratures
    const auto p = evolve_bloch({1.0, 0.0, 0.0}, c, 1e-3, 500.0);
    CHECK(std::abs(p.sy) > 1e-3);
    CHECK(p.norm2() <= 1.0 + 1e-9);
}

TEST_CASE("bloch closed forms against an RK4 integrator") {
    // independent oracle: integrate the equations of motion directly
    const auto c = hot_coeffs(1.0);
    for (double shift : {0.0, 40.0}) {
        const double gx = c.gamma_x(), gy = c.gamma_y();
        const double g = c.gamma(), N = c.big_N();
        const auto deriv = [&](const BlochVector& s) {
            return BlochVector{-gx * s.sx - shift * s.sy,
                               -gy * s.sy + shift * s.sx,
                               -g * (2.0 * N + 1.0) * s.sz - g};
        };
        BlochVector s{0.5, -0.3, 0.6};
        const double T = 0.01, dt = T / 20000.0;
        for (int i = 0; i < 20000; ++i) {
            const auto k1 = deriv(s);
            const auto at = [&](const BlochVector& k, double f) {
                return BlochVector{s.sx + f * dt * k.sx, s.sy + f * dt * k.sy,
                                   s.sz + f * dt * k.sz};
            };
            const auto k2 = deriv(at(k1, 0.5));
            const auto k3 = deriv(at(k2, 0.5));
            const auto k4 = deriv(at(k3, 1.0));
            s.sx += dt / 6.0 * (k1.sx + 2 * k2.sx + 2 * k3.sx + k4.sx);
            s.sy += dt / 6.0 * (k1.sy + 2 * k2.sy + 2 * k3.sy + k4.sy);
            s.sz += dt / 6.0 * (k1.sz + 2 * k2.sz + 2 * k3.sz + k4.sz);
        }
        const auto closed = evolve_bloch({0.5, -0.3, 0.6}, c, T, shift);
        CAPTURE(shift);
        CHECK(closed.sx == doctest::Approx(s.sx).epsilon(1e-9));
        CHECK(closed.sy == doctest::Approx(s.sy).epsilon(1e-9));
        CHECK(closed.sz == doctest::Approx(s.sz).epsilon(1e-9));
    }
}

TEST_CASE("steady state") {
    MECoefficients c;
    c.gamma_N = 0.0;
    c.gamma_Np1 = 1.0;
    CHECK(steady_state(c).sz == doctest::Approx(-1.0).epsilon(1e-14));

    const auto hot = hot_coeffs(1.0);
    const double N = hot.big_N();
    CHECK(steady_excited_population(hot) ==
          doctest::Approx(N / (2.0 * N + 1.0)).epsilon(1e-14));
    // N = 1000 reference point
    MECoefficients ref;
    ref.gamma_N = 1000.0;
    ref.gamma_Np1 = 1001.0;
    CHECK(steady_excited_population(ref) == doctest::Approx(0.49975).epsilon(1e-7));
}

TEST_CASE("correlation function ties to the steady state") {
    const auto c = hot_coeffs(1.0);
    CHECK(dipole_correlation(c, 0.0) == steady_excited_population(c));
    CHECK(dipole_correlation(c, 0.5) == dipole_correlation(c, -0.5));

    // slow-quadrature tail at t = 1/gamma_x with gamma_y >> gamma_x
    const auto c3 = hot_coeffs(3.0);
    const double t = 1.0 / c3.gamma_x();
    const double N = c3.big_N();
    const double tail = 0.5 * N / (2.0 * N + 1.0) * std::exp(-1.0);
    CHECK(dipole_correlation(c3, t) == doctest::Approx(tail).epsilon(0.01));
}

TEST_CASE("fluorescence spectrum shape and sum rule") {
    const auto c = hot_coeffs(3.0);
    const double gy = c.gamma_y();
    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(40001, -50.0 * gy, 50.0 * gy);
    const auto s = fluorescence_spectrum(c, grid);
    CHECK((s.values >= 0.0).all());

    // trapezoid integral against 2N/(2N+1)
    double integral = 0.0;
    for (int i = 0; i + 1 < grid.size(); ++i)
        integral += 0.5 * (s.values[i] + s.values[i + 1]) * (grid[i + 1] - grid[i]);
    const double N = c.big_N();
    CHECK(integral == doctest::Approx(2.0 * N / (2.0 * N + 1.0)).epsilon(0.02));

    // two-width signature: single-Lorentzian normalization fails visibly
    const double s0 = s.values[20000];
    CHECK(s0 * kPi * c.gamma_x() / (N / (2.0 * N + 1.0)) != doctest::Approx(2.0).epsilon(0.2));

    // M = 0 gives a single Lorentzian of width gamma (N + 1/2)
    MECoefficients rwa;
    rwa.gamma_N = 1000.0;
    rwa.gamma_Np1 = 1001.0;
    const Eigen::ArrayXd g2 = Eigen::ArrayXd::LinSpaced(3, -1000.5, 1000.5);
    const auto srwa = fluorescence_spectrum(rwa, g2);
    // at omega = width, height is half the peak
    CHECK(srwa.values[0] == doctest::Approx(0.5 * srwa.values[1]).epsilon(1e-12));
}

TEST_CASE("fluorescence spectrum agrees with the transform of C(t)") {
    const auto c = hot_coeffs(3.0);
    const double gx = c.gamma_x(), gy = c.gamma_y();
    Eigen::ArrayXd wpts(3);
    wpts << 0.0, gx, gy;
    const auto s = fluorescence_spectrum(c, wpts);
    for (int k = 0; k < 3; ++k) {
        const double w = s.omega[k];
        // S(w) = (1/pi) Int dt cos(w t) C(t) over (-inf, inf) = (2/pi) Int_0^inf
        const double val =
            (2.0 / kPi) * oracles::simpson(
                              [&](double t) {
                                  return std::cos(w * t) * dipole_correlation(c, t);
                              },
                              0.0, 30.0 / gx, 200001);
        CHECK(s.values[k] == doctest::Approx(val).epsilon(0.01));
    }
}

TEST_CASE("resonance fluorescence widths and phase dependence") {
    const auto c = hot_coeffs(1.0);
    CHECK(gamma_phi(c, kPi / 2.0) ==
          doctest::Approx(c.gamma_N + 0.5 * c.gamma()).epsilon(1e-12));
    CHECK(gamma_phi(c, 0.0) == doctest::Approx(c.gamma_y()).epsilon(1e-12));
    CHECK(gamma_phi(c, kPi) == doctest::Approx(c.gamma_x()).epsilon(1e-12));
    // published two-decimal values
    CHECK(gamma_phi(c, kPi / 2.0) == doctest::Approx(208.0).epsilon(0.005));
    CHECK(gamma_phi(c, 0.0) == doctest::Approx(309.0).epsilon(0.005));
    CHECK(gamma_phi(c, kPi) == doctest::Approx(106.0).epsilon(0.005));

    // gamma_phi(0) - gamma_phi(pi) = 2 gamma |M|
    CHECK(gamma_phi(c, 0.0) - gamma_phi(c, kPi) ==
          doctest::Approx(2.0 * std::abs(c.gamma_M)).epsilon(1e-10));

    // M = 0: phase-independent, Gamma_phi = 1.5 gamma_phi
    MECoefficients rwa;
    rwa.gamma_N = 1000.0;
    rwa.gamma_Np1 = 1001.0;
    CHECK(gamma_phi(rwa, 0.7) == doctest::Approx(1000.5).epsilon(1e-14));
    CHECK(Gamma_phi_sideband(rwa, 0.7) == doctest::Approx(1.5 * 1000.5).epsilon(1e-14));

    const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(2001, -3000.0, 3000.0);
    const auto s = resonance_fluorescence(c, 1000.0, kPi, grid);
    CHECK((s.values >= 0.0).all());
    CHECK(s.drive.has_value());
    CHECK(s.drive->Omega == 1000.0);
    CHECK_THROWS_AS(resonance_fluorescence(c, 0.0, 0.0, grid), DomainError);
}

}  // TEST_SUITE
