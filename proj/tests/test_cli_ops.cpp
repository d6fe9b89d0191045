#include <cmath>
#include <numbers>

#include <doctest.h>

#include "sqres/cli_ops.hpp"
#include "sqres/errors.hpp"

using namespace sqres;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("cli_ops") {

TEST_CASE("z scan locates the smallest squeezing gap") {
    ScanConfig cfg;
    cfg.var = ScanVariable::Z;
    for (double z = 0.5; z < 9.75; z += 0.5) cfg.values.push_back(z);
    cfg.threads = 4;
    const auto res = run_scan(cfg);
    REQUIRE(res.rows.size() == cfg.values.size());
    CHECK_FALSE(res.any_domain_error);
    double best = 1e300, best_z = 0;
    for (size_t i = 0; i < res.rows.size(); ++i) {
        const double d = res.rows[i].c.gamma_N - std::abs(res.rows[i].c.gamma_M);
        if (d < best) {
            best = d;
            best_z = cfg.values[i];
        }
    }
    CHECK(best_z == 9.5);
    CHECK(best == doctest::Approx(0.128).epsilon(0.02));
}

TEST_CASE("m scan at z = 1 prefers m = 2") {
    ScanConfig cfg;
    cfg.var = ScanVariable::M;
    cfg.values = {2.0, 1.0, 2.0 / 3.0, 0.5, 0.4};
    cfg.z = 1.0;
    const auto res = run_scan(cfg);
    double best = 1e300, best_m = 0;
    for (size_t i = 0; i < res.rows.size(); ++i) {
        const double d = res.rows[i].c.gamma_N - std::abs(res.rows[i].c.gamma_M);
        if (d < best) {
            best = d;
            best_m = cfg.values[i];
        }
    }
    CHECK(best_m == 2.0);
}

TEST_CASE("phi scan varies only the driven widths") {
    ScanConfig cfg;
    cfg.var = ScanVariable::Phi;
    cfg.values = {0.0, kPi / 2.0, kPi};
    const auto res = run_scan(cfg);
    REQUIRE(res.rows.size() == 3);
    // coefficients identical across rows, gamma_phi ordered 0 > pi/2 > pi
    CHECK(res.rows[0].c.gamma_N == res.rows[2].c.gamma_N);
    CHECK(res.rows[0].gamma_phi_val > res.rows[1].gamma_phi_val);
    CHECK(res.rows[1].gamma_phi_val > res.rows[2].gamma_phi_val);
    CHECK(res.rows[1].gamma_phi_val ==
          doctest::Approx(res.rows[0].c.gamma_N + 0.5 * res.rows[0].c.gamma())
              .epsilon(1e-12));
}

TEST_CASE("n_a and omega_a scans behave physically") {
    ScanConfig cfg;
    cfg.var = ScanVariable::NA;
    cfg.values = {0.0, 1.0, 10.0, 1000.0};
    const auto res = run_scan(cfg);
    // gammaN grows monotonically with the thermal occupation
    for (size_t i = 1; i < res.rows.size(); ++i)
        CHECK(res.rows[i].c.gamma_N > res.rows[i - 1].c.gamma_N);

    ScanConfig cfg2;
    cfg2.var = ScanVariable::OmegaA;
    cfg2.values = {5.0, 10.0, 20.0, 40.0};
    const auto res2 = run_scan(cfg2);
    CHECK_FALSE(res2.any_domain_error);
    for (const auto& r : res2.rows) CHECK(r.c.gamma() > 0.0);
}

TEST_CASE("domain errors mark rows and keep scanning") {
    ScanConfig cfg;
    cfg.var = ScanVariable::OmegaA;
    cfg.values = {10.0, -3.0, 12.0};
    const auto res = run_scan(cfg);
    CHECK(res.any_domain_error);
    CHECK(res.rows[0].status == "ok");
    CHECK(res.rows[1].status.find("domain_error") == 0);
    CHECK(res.rows[2].status == "ok");
    CHECK_THROWS_AS(run_scan(ScanConfig{}), DomainError);   // empty grid
    CHECK_THROWS_AS(parse_scan_variable("nope"), DomainError);
}

}  // TEST_SUITE
