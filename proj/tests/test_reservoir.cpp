#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "sqres/errors.hpp"
#include "sqres/reservoir.hpp"

using namespace sqres;
namespace {
constexpr double kPi = std::numbers::pi;

// flat plateau with smooth cosine ramps, supported on [lo, hi]
GenericReservoir smooth_flat_reservoir(double level, double n_fixed, double lo,
                                       double hi, double ramp, double span,
                                       int points) {
    GenericReservoir g;
    g.omega = Eigen::ArrayXd::LinSpaced(points, -span, span);
    g.g0.resize(points);
    for (int i = 0; i < points; ++i) {
        const double w = g.omega[i];
        double v = 0.0;
        if (w >= lo && w <= hi) {
            v = 1.0;
            if (w < lo + ramp) v = 0.5 - 0.5 * std::cos(kPi * (w - lo) / ramp);
            if (w > hi - ramp) v = 0.5 - 0.5 * std::cos(kPi * (hi - w) / ramp);
        }
        g.g0[i] = level * v;
    }
    g.occupation = FixedOccupation{n_fixed};
    return g;
}
}  // namespace

TEST_SUITE("reservoir") {

TEST_CASE("planck occupation") {
    CHECK(planck_occupation(1.0, 0.0) == 0.0);
    CHECK(planck_occupation(std::log(2.0), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(planck_occupation(1.0, 10.0) == doctest::Approx(9.50833).epsilon(1e-5));
    CHECK_THROWS_AS(planck_occupation(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(planck_occupation(-1.0, 1.0), DomainError);
}

TEST_CASE("lorentzian gamma_T closed form") {
    const LorentzianReservoir cold{10.0, 1.0, 0.0, 1.0};
    CHECK(lorentzian_gamma_T(10.0, cold) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lorentzian_gamma_T(10.5, cold) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lorentzian_gamma_T(9.5, cold) == doctest::Approx(0.5).epsilon(1e-12));

    const LorentzianReservoir hot{10.0, 1.0, 1000.0, 1.0};
    CHECK(lorentzian_gamma_T(10.0, hot) ==
          doctest::Approx(1001.0 + 1000.0 / 1601.0).epsilon(1e-12));
}

TEST_CASE("lorentzian delta_T closed form") {
    const LorentzianReservoir hot{10.0, 1.0, 1000.0, 1.0};
    // at omega_a only the mirror term contributes
    CHECK(lorentzian_delta_T(10.0, hot) ==
          doctest::Approx(-1000.0 * 0.25 * 20.0 / (400.0 + 0.25)).epsilon(1e-12));
    // dispersive peak of the cold response sits half a linewidth below
    const LorentzianReservoir cold{10.0, 1.0, 0.0, 1.0};
    CHECK(lorentzian_delta_T(9.5, cold) == doctest::Approx(0.25).epsilon(1e-12));
    // decay at large |omega|
    CHECK(std::abs(lorentzian_delta_T(4000.0, hot)) < 2.0);
    CHECK(std::abs(lorentzian_delta_T(-4000.0, hot)) < 2.0);
}

TEST_CASE("closed-form delta_T against the PV oracle") {
    // validates the dispersive closed form before any gamma_M is trusted
    const LorentzianReservoir hot{10.0, 1.0, 1000.0, 1.0};
    const LorentzianReservoir cold{10.0, 1.0, 0.0, 1.0};
    for (double w : {0.0, 9.5, 10.0, 11.0, -10.0, 25.0}) {
        CHECK(lorentzian_delta_T(w, hot) ==
              doctest::Approx(oracles::pv_lorentzian(w, hot)).epsilon(2e-7));
        CHECK(lorentzian_delta_T(w, cold) ==
              doctest::Approx(oracles::pv_lorentzian(w, cold)).epsilon(2e-7));
    }
}

TEST_CASE("generic response reproduces the Lorentzian closed forms") {
    const LorentzianReservoir res{10.0, 1.0, 1000.0, 1.0};

    double max_abs = 0.0;
    for (double w = -25.0; w <= 25.0; w += 0.5)
        max_abs = std::max(max_abs, std::abs(lorentzian_delta_T(w, res)));

    // tabulated wide enough that the support truncation sits below the gate
    const auto tab = tabulate_lorentzian(res, -500.0, 500.0, 300001);
    for (double w : {0.0, 10.0, 9.0, 11.0, -10.0, 5.25}) {
        const auto r = generic_response(w, tab);
        CHECK(r.gamma_T ==
              doctest::Approx(lorentzian_gamma_T(w, res)).epsilon(1e-8));
        CHECK(std::abs(r.delta_T - lorentzian_delta_T(w, res)) <= 1e-6 * max_abs);
        CHECK(r.delta_err <= 1e-5 * max_abs);
    }

    // the default [-3 omega_a, 3 omega_a] window leaves the Lorentzian tails
    // outside the tabulation; agreement is then tail-limited (~1e-4 of max)
    const auto tab3 = tabulate_lorentzian(res, -30.0, 30.0, 60001);
    for (double w : {0.0, 10.0, 9.0, 11.0}) {
        const auto r = generic_response(w, tab3);
        CHECK(std::abs(r.delta_T - lorentzian_delta_T(w, res)) <= 5e-4 * max_abs);
    }
}

TEST_CASE("generic response edge and symmetry behavior") {
    const auto flat = smooth_flat_reservoir(0.7, 0.0, -40.0, 40.0, 5.0, 50.0, 4001);
    // G_T even about 0: Delta_T(0) = 0 exactly by pairing
    const auto r0 = generic_response(0.0, flat);
    CHECK(std::abs(r0.delta_T) < 1e-12);
    CHECK(r0.gamma_T == doctest::Approx(2.0 * kPi * 0.7).epsilon(1e-9));
    CHECK_THROWS_AS(generic_response(-50.0, flat), DomainError);
    CHECK_THROWS_AS(generic_response(49.9999, flat), DomainError);
}

TEST_CASE("gamma_T stays non-negative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uw(-60.0, 60.0);
    for (double n_a : {0.0, 0.5, 1.0, 1000.0}) {
        const LorentzianReservoir res{10.0, 1.0, n_a, 1.0};
        for (int i = 0; i < 200; ++i) CHECK(lorentzian_gamma_T(uw(rng), res) >= 0.0);
    }
}

TEST_CASE("detailed balance structure") {
    for (double n_a : {0.0, 1.0, 10.0, 1000.0}) {
        for (double omega_a : {5.0, 10.0, 20.0}) {
            const LorentzianReservoir res{omega_a, 1.0, n_a, 1.0};
            CHECK(lorentzian_gamma_T(omega_a, res) >
                  lorentzian_gamma_T(-omega_a, res));
        }
    }
}

TEST_CASE("generic reservoir with Planck occupation") {
    // coupling spectrum supported away from zero frequency
    GenericReservoir g;
    const int n = 201;
    g.omega = Eigen::ArrayXd::LinSpaced(n, 5.0, 15.0);
    g.g0.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = g.omega[i] - 10.0;
        g.g0[i] = 1.0 / (1.0 + 4.0 * x * x);
    }
    g.occupation = PlanckOccupation{20.0};
    const double nbar = planck_occupation(10.0, 20.0);
    CHECK(g.g_T(10.0) == doctest::Approx(1.0 * (1.0 + nbar)).epsilon(1e-12));
    // mirror side carries only the occupation term, with n(|w|)
    CHECK(g.g_T(-10.0) == doctest::Approx(1.0 * nbar).epsilon(1e-12));
    // outside the support both terms vanish
    CHECK(g.g_T(30.0) == 0.0);

    // Planck occupation diverges if the tabulation reaches zero frequency
    GenericReservoir bad;
    bad.omega = Eigen::ArrayXd::LinSpaced(11, -1.0, 1.0);
    bad.g0 = Eigen::ArrayXd::Constant(11, 0.5);
    bad.occupation = PlanckOccupation{1.0};
    CHECK_THROWS_AS(bad.g_T(0.0), DomainError);
}

TEST_CASE("spectrum CSV loader validates input") {
    const std::string path = "test_spectrum_tmp.csv";
    {
        std::ofstream os(path);
        os << "omega_over_kappa,G0\n";
        os << std::setprecision(17);
        for (int i = 0; i < 2001; ++i) {
            const double w = -20.0 + 40.0 * i / 2000.0;
            os << w << "," << 1.0 / (1.0 + w * w) << "\n";
        }
    }
    const auto g = load_spectrum_csv(path, FixedOccupation{2.0});
    CHECK(g.omega.size() == 2001);
    CHECK(g.g_T(0.0) == doctest::Approx((1.0 + 2.0) * 1.0 + 2.0 * 1.0).epsilon(1e-6));
    std::remove(path.c_str());

    {
        std::ofstream os(path);
        os << "0,1\n0,2\n1,1\n";
    }
    CHECK_THROWS_AS(load_spectrum_csv(path, FixedOccupation{0.0}), DomainError);
    std::remove(path.c_str());
}

}  // TEST_SUITE
