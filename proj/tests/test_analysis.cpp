#include <doctest.h>

#include "dirac/analysis.hpp"
#include "dirac/errors.hpp"
#include "helpers.hpp"

using namespace dirac;
using testutil::basis_spinor;
using testutil::random_field;

namespace {

LatticeField gaussian_master(int n, int points, double L, double width) {
    const GridSpec g(n, points, L / points);
    Eigen::VectorXd center(n), carrier(n);
    for (int j = 0; j < n; ++j) {
        center(j) = L / 2.0;
        carrier(j) = (j == 0) ? 3.0 : -2.0;
    }
    Eigen::VectorXcd spinor = basis_spinor(n == 3 ? 4 : 2, 0);
    spinor(spinor.size() - 1) = Complex(0.4, 0.3);
    return gaussian_state(g, width, center, carrier, spinor);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("consistency: massless 1d is exact") {
    const auto phi = gaussian_master(1, 128, 4.0, 0.5);
    const auto [err, bound] = consistency_error(phi, 0.0, 4.0 / 128, 0.0);
    CHECK(err < 1e-12);
    CHECK(bound > 0.0);
}

TEST_CASE("consistency: 2d gaussian within the bound, ratio ~ 4 per halving") {
    const double L = 4.0;
    const LatticeField master = gaussian_master(2, 128, L, 0.5);
    const LatticeField base = normalized(low_pass(master, 32));

    double prev_err = 0.0;
    for (int npts : {32, 64, 128}) {
        const auto phi = regrid(base, npts);
        const double eps = L / npts;
        const auto [err, bound] = consistency_error(phi, 1.0, eps, 0.0);
        CHECK(err <= bound * (1.0 + 1e-9));
        if (prev_err > 0.0) {
            CHECK(prev_err / err > 3.5);
            CHECK(prev_err / err < 4.5);
        }
        prev_err = err;
    }
}

TEST_CASE("consistency in H^1 and for 3d") {
    const auto phi2 = gaussian_master(2, 64, 4.0, 0.5);
    const auto res2 = consistency_error(phi2, 0.7, 4.0 / 64, 1.0);
    CHECK(res2.error <= res2.bound * (1.0 + 1e-9));

    const auto phi3 = gaussian_master(3, 16, 2.0, 0.25);
    const auto res3 = consistency_error(phi3, 1.0, 2.0 / 16, 0.0);
    CHECK(res3.error <= res3.bound * (1.0 + 1e-9));
}

TEST_CASE("stability ratios over random fields") {
    for (int n : {1, 2, 3}) {
        const GridSpec g(n, n == 3 ? 8 : 32, 0.2);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto f = random_field(g, n == 3 ? 4 : 2, 1000 + seed);
            for (double s : {0.0, 1.0, 2.0}) {
                const double ratio = stability_check(f, 0.9, g.spacing, s);
                CHECK(std::abs(ratio - 1.0) < 1e-11);
            }
        }
    }
    const GridSpec g(1, 8, 0.2);
    CHECK_THROWS_AS(stability_check(LatticeField(g, 2), 1.0, 0.2, 0.0), std::invalid_argument);
}

TEST_CASE("convergence study: order 1 in 1d, every row within the bound") {
    const auto master = gaussian_master(1, 512, 4.0, 0.5);
    const auto report = convergence_study(master, 1.0, 1.0, {8, 16, 32, 64, 128}, 0.0);
    REQUIRE(report.rows.size() == 5);
    CHECK(report.c == doctest::Approx(1.5));
    for (const auto& row : report.rows) {
        CHECK(row.error <= row.bound * (1.0 + 1e-9));
        CHECK(row.eps == doctest::Approx(1.0 / row.l));
    }
    CHECK(report.fitted_order > 0.9);
    CHECK(report.fitted_order < 1.1);
    // errors decay monotonically in l, at least by the telescoping factor
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        CHECK(report.rows[i].error <= 0.75 * report.rows[i - 1].error);
}

TEST_CASE("convergence study: massless 1d rows are exact, order fit skipped") {
    const auto master = gaussian_master(1, 256, 4.0, 0.5);
    const auto report = convergence_study(master, 0.0, 1.0, {8, 16, 32}, 0.0);
    for (const auto& row : report.rows) CHECK(row.error <= 1e-12);
    CHECK(std::isnan(report.fitted_order));
}

TEST_CASE("convergence study rejects inadmissible step counts") {
    const auto master = gaussian_master(1, 256, 4.0, 0.5);
    CHECK_THROWS_WITH_AS(convergence_study(master, 1.0, 1.0, {8, 1000}, 0.0).rows.size(),
                         doctest::Contains("admissible"), std::invalid_argument);
    // period 4 with x0 = 0.7 is not an integer multiple
    CHECK_THROWS_AS(convergence_study(master, 1.0, 0.7, {8}, 0.0), std::invalid_argument);
}

TEST_CASE("observation probability") {
    const GridSpec g(1, 32, 0.25);
    const auto a = random_field(g, 2, 1);
    CHECK(observation_probability(a, a) == doctest::Approx(0.0));

    LatticeField e1(g, 2), e2(g, 2);
    e1.values(0, 0) = 1.0;
    e2.values(1, 0) = 1.0;
    const auto u1 = normalized(e1), u2 = normalized(e2);
    CHECK(observation_probability(u1, u2) == doctest::Approx(1.0));

    const auto b = random_field(g, 2, 2);
    const double p = observation_probability(a, b);
    CHECK(std::abs(observation_probability(b, a) - p) < 1e-14);
    const Complex phase = std::polar(1.0, 0.83);
    CHECK(std::abs(observation_probability(phase * a, b) - p) < 1e-14);

    CHECK_THROWS_AS(observation_probability(0.5 * a, b), ContractViolation);
}

TEST_CASE("observation probability shrinks ~4x per eps halving (2d walk vs exact)") {
    const double L = 4.0, x0 = 1.0;
    const auto master = gaussian_master(2, 128, L, 0.5);
    const auto base = normalized(low_pass(master, 32));
    double prev = 0.0;
    for (int l : {8, 16, 32}) {
        const auto phi = regrid(base, 4 * l);
        const auto w = build_dirac_walk(2, 1.0, x0 / l);
        const auto walked = apply_walk_steps(w, phi, l);
        const auto exact = exact_evolve(phi, x0, 1.0);
        const double p = observation_probability(walked, exact);
        if (prev > 0.0) {
            CHECK(prev / p > 3.0);
            CHECK(prev / p < 5.0);
        }
        prev = p;
    }
}

TEST_CASE("end to end: band-limited input reduces to plain convergence") {
    const double L = 4.0, x0 = 1.0;
    const int l = 16;
    const auto master = gaussian_master(1, 512, L, 0.5);
    const auto base = normalized(low_pass(master, 4 * l));

    const auto res = end_to_end_error(base, 1.0, x0, l, 0.0);
    CHECK(res.identity_residual < 1e-11);
    CHECK(res.error <= res.bound * (1.0 + 1e-9));

    // compare with the convergence row at the same l
    const auto phi = regrid(base, 4 * l);
    const auto w = build_dirac_walk(1, 1.0, x0 / l);
    const auto direct_err =
        sobolev_norm(apply_walk_steps(w, phi, l) - exact_evolve(phi, x0, 1.0), 0.0, 1.0);
    CHECK(std::abs(res.error - direct_err) < 1e-12);
}

TEST_CASE("end to end: general gaussian within the combined bound") {
    const auto master = gaussian_master(1, 512, 4.0, 0.25);
    for (int l : {16, 32}) {
        const auto res = end_to_end_error(master, 1.0, 1.0, l, 0.0);
        CHECK(res.error <= res.bound * (1.0 + 1e-9));
        CHECK(res.identity_residual < 1e-11);
    }
    CHECK_THROWS_AS(end_to_end_error(master, 1.0, 1.0, 3, 0.0), std::invalid_argument);
}

TEST_CASE("fit order recovers exact slopes") {
    std::vector<std::pair<double, double>> linear, quadratic;
    for (double e : {0.5, 0.25, 0.125, 0.0625}) {
        linear.emplace_back(e, 3.7 * e);
        quadratic.emplace_back(e, 0.2 * e * e);
    }
    CHECK(fit_order(linear) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit_order(quadratic) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(fit_order({{0.5, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_order({{0.5, 0.0}, {0.25, 1.0}}), std::invalid_argument);
}

}  // TEST_SUITE
