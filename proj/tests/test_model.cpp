#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace akgrowth;

TEST_CASE("angle canonicalization is idempotent and 2pi-periodic", "[model]") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = dist(rng);
        const double c = canonical_angle(x);
        REQUIRE(c >= 0.0);
        REQUIRE(c < two_pi);
        REQUIRE(canonical_angle(c) == c);  // exact: in-range values pass through
        REQUIRE(CirclePoint(x) == CirclePoint(x + two_pi));
        REQUIRE(CirclePoint(x) == CirclePoint(x - two_pi));
    }
    REQUIRE(CirclePoint(0.1) != CirclePoint(0.2));
    REQUIRE(circular_distance(0.1, two_pi - 0.1) == Catch::Approx(0.2).margin(1e-12));
}

TEST_CASE("cumulative technology: constant and piecewise-linear are exact", "[model]") {
    const auto constant = TechnologyPath::constant(0.1);
    REQUIRE(constant.cumulative(10.0) == Catch::Approx(1.0).margin(1e-14));
    REQUIRE(constant.cumulative(0.0) == 0.0);

    // line from 0.1 at t=0 to 0.3 at t=10: trapezoid gives 2.0
    const auto ramp = TechnologyPath::sampled({0.0, 10.0}, {0.1, 0.3});
    REQUIRE(ramp.cumulative(10.0) == Catch::Approx(2.0).margin(1e-14));
    REQUIRE(ramp.cumulative(5.0) == Catch::Approx(0.75).margin(1e-14));
    // clamped beyond the last knot
    REQUIRE(ramp.cumulative(12.0) == Catch::Approx(2.0 + 0.3 * 2.0).margin(1e-14));
    REQUIRE(ramp.rate(12.0) == 0.3);

    // clamped before the first knot
    const auto late = TechnologyPath::sampled({2.0, 4.0}, {0.5, 0.5});
    REQUIRE(late.cumulative(1.0) == Catch::Approx(0.5).margin(1e-14));
    REQUIRE(late.cumulative(3.0) == Catch::Approx(1.5).margin(1e-14));
}

TEST_CASE("cumulative technology: sinusoidal closed form matches quadrature", "[model]") {
    const auto tech = TechnologyPath::sinusoidal(0.2, 0.1, 1.0);
    const double t = std::numbers::pi;
    // antiderivative 0.2 t - 0.1 cos t + 0.1
    const double expected = 0.2 * t + 0.2;
    REQUIRE(tech.cumulative(t) == Catch::Approx(expected).margin(1e-13));

    const double oracle =
        adaptive_integrate([&](double u) { return tech.rate(u); }, 0.0, t, 1e-12);
    REQUIRE(tech.cumulative(t) == Catch::Approx(oracle).margin(1e-11));
}

TEST_CASE("cumulative technology is nondecreasing", "[model]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> tdist(0.0, 20.0);
    const auto paths = {TechnologyPath::sinusoidal(0.4, 0.4, 2.3),
                        TechnologyPath::sampled({0.0, 1.0, 3.0, 7.0}, {0.0, 2.0, 0.5, 0.1}),
                        TechnologyPath::constant(0.3)};
    for (const auto& p : paths) {
        for (int i = 0; i < 300; ++i) {
            double t1 = tdist(rng), t2 = tdist(rng);
            if (t1 > t2) std::swap(t1, t2);
            REQUIRE(p.cumulative(t1) <= p.cumulative(t2) + 1e-12);
        }
    }
}

TEST_CASE("technology rejects negative times and bad samples", "[model]") {
    const auto tech = TechnologyPath::constant(0.1);
    REQUIRE_THROWS_AS(tech.cumulative(-1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(tech.rate(-0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(TechnologyPath::sampled({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(TechnologyPath::sampled({-1.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("scalar paths evaluate their closed forms", "[model]") {
    REQUIRE(ScalarPath::exponential(2.0, 0.5).value(2.0) == Catch::Approx(2.0 * std::exp(1.0)));
    const auto sam = ScalarPath::sampled({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    REQUIRE(sam.value(0.5) == Catch::Approx(0.5));
    REQUIRE(sam.value(1.5) == Catch::Approx(0.5));
    REQUIRE(sam.value(-1.0) == 0.0);   // clamped
    REQUIRE(sam.value(5.0) == 0.0);
    const auto sin_path = ScalarPath::sinusoidal(1.0, 0.25, 2.0, 0.5);
    REQUIRE(sin_path.value(0.3) == Catch::Approx(1.0 + 0.25 * std::sin(1.1)));
}

TEST_CASE("consumption fields are 2pi-periodic and nonnegative kinds evaluate", "[model]") {
    const auto sep = ConsumptionField::separable(
        SpatialProfile::harmonics(64, 1.0, {{1, 0.5}}), ScalarPath::constant(0.2));
    const auto grid = ConsumptionField::grid(
        {0.0, 1.0}, {std::vector<double>{1, 2, 3, 4}, std::vector<double>{2, 3, 4, 5}});
    const auto fn = ConsumptionField::analytic(
        [](double x, double t) { return 1.0 + 0.5 * std::cos(x) * std::exp(-t); });

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> xdist(-10.0, 10.0), tdist(0.0, 5.0);
    for (const auto& c : {sep, grid, fn}) {
        for (int i = 0; i < 200; ++i) {
            const double x = xdist(rng), t = tdist(rng);
            REQUIRE(c.value(x + two_pi, t) == Catch::Approx(c.value(x, t)).margin(1e-12));
        }
    }

    // grid kind: exact at nodes, linear between them
    REQUIRE(grid.value(0.0, 0.0) == 1.0);
    REQUIRE(grid.value(std::numbers::pi, 1.0) == 4.0);       // x index 2, second row
    REQUIRE(grid.value(0.0, 0.5) == Catch::Approx(1.5));     // time interpolation
    REQUIRE(grid.value(0.0, 9.0) == 2.0);                    // clamped in time
    REQUIRE(grid.max_on_grid(0.0, 4) == 4.0);

    REQUIRE(ConsumptionField::zero().value(1.0, 1.0) == 0.0);
    REQUIRE(ConsumptionField::constant(0.7).value(2.0, 3.0) == 0.7);
}

TEST_CASE("validate_scenario accepts a plain valid scenario", "[model]") {
    const auto s = test::constant_scenario(1.0, 0.0, 0.1, 5.0, 10);
    REQUIRE(validate_scenario(s).empty());
}

TEST_CASE("validate_scenario reports every broken invariant with its location", "[model]") {
    SECTION("negative initial capital names the index") {
        auto s = test::constant_scenario(1.0, 0.0, 0.1, 5.0, 10, 16);
        std::vector<double> samples(16, 1.0);
        samples[7] = -0.5;
        s.initial_capital = SpatialProfile(samples);
        const auto v = validate_scenario(s);
        REQUIRE(v.size() == 1);
        REQUIRE(v[0].where == "initial_capital");
        REQUIRE(v[0].message.find("index 7") != std::string::npos);
    }
    SECTION("non-increasing time mesh") {
        auto s = test::constant_scenario(1.0, 0.0, 0.1, 2.0, 10);
        s.time_mesh = {0.0, 2.0, 1.0};
        bool found = false;
        for (const auto& v : validate_scenario(s))
            if (v.message.find("not increasing") != std::string::npos) found = true;
        REQUIRE(found);
    }
    SECTION("negative consumption") {
        auto s = test::constant_scenario(1.0, 0.0, 0.1, 5.0, 10);
        s.consumption = ConsumptionField::analytic([](double x, double) { return std::cos(x); });
        bool found = false;
        for (const auto& v : validate_scenario(s))
            if (v.where == "consumption") found = true;
        REQUIRE(found);
    }
    SECTION("sinusoidal technology dipping below zero") {
        auto s = test::constant_scenario(1.0, 0.0, 0.1, 5.0, 10);
        s.technology = TechnologyPath::sinusoidal(0.1, 0.5, 1.0);
        bool found = false;
        for (const auto& v : validate_scenario(s))
            if (v.where == "technology") found = true;
        REQUIRE(found);
    }
    SECTION("mode cutoff beyond Nyquist") {
        auto s = test::constant_scenario(1.0, 0.0, 0.1, 5.0, 10, 64);
        s.mode_cutoff = 40;
        bool found = false;
        for (const auto& v : validate_scenario(s))
            if (v.where == "mode_cutoff") found = true;
        REQUIRE(found);
    }
}

TEST_CASE("random scenario evaluations stay in their declared domains", "[model]") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto s = random_feasible_scenario(seed);
        REQUIRE(validate_scenario(s).empty());
        std::mt19937_64 rng(seed * 977);
        std::uniform_real_distribution<double> xdist(0.0, two_pi), tdist(0.0, s.horizon);
        for (int i = 0; i < 50; ++i) {
            const double x = xdist(rng), t = tdist(rng);
            REQUIRE(s.consumption.value(x, t) >= 0.0);
            REQUIRE(s.technology.rate(t) >= 0.0);
        }
        REQUIRE(s.initial_capital.min() >= 0.0);
    }
}

TEST_CASE("adaptive quadrature reaches its tolerance", "[model]") {
    const double val = adaptive_integrate([](double x) { return std::sin(x); }, 0.0,
                                          std::numbers::pi, 1e-12);
    REQUIRE(val == Catch::Approx(2.0).margin(1e-11));
    // integrable kink
    const double kink =
        adaptive_integrate([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, 1e-12);
    REQUIRE(kink == Catch::Approx(0.5 * (0.09 + 0.49)).margin(1e-10));
    REQUIRE_THROWS_AS(
        adaptive_integrate([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, 1e-30, 8),
        NumericalError);
}

TEST_CASE("exponentially weighted panel rule integrates stiff factors exactly", "[model]") {
    // moments: w = 0 gives 1/(m+1); generic w checked against quadrature
    double mu[8];
    exp_moments(0.0, 8, mu);
    for (std::size_t m = 0; m < 8; ++m)
        REQUIRE(mu[m] == Catch::Approx(1.0 / (m + 1.0)).margin(1e-15));
    for (double w : {0.3, 2.0, 4.0, 4.5, 17.0, 300.0, 2e5}) {
        exp_moments(w, 8, mu);
        for (std::size_t m = 0; m < 8; m += 3) {
            const double oracle = adaptive_integrate(
                [&](double u) { return std::exp(-w * (1.0 - u)) * std::pow(u, double(m)); },
                0.0, 1.0, 1e-14);
            REQUIRE(mu[m] == Catch::Approx(oracle).margin(2e-13));
        }
    }

    const ExpPanelRule rule(8);
    std::vector<double> nodes, weights;

    // integral_0^1 e^{-3(1-s)} e^{2s} ds = (e^2 - e^{-3}) / 5
    rule.panel_nodes(0.0, 1.0, nodes);
    rule.weights(3.0, 1.0, weights);
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) acc += weights[k] * std::exp(2.0 * nodes[k]);
    REQUIRE(acc == Catch::Approx((std::exp(2.0) - std::exp(-3.0)) / 5.0).margin(1e-9));

    // very stiff mode: integral_0^1 e^{-z(1-s)} ds = (1 - e^{-z})/z
    rule.weights(16384.0, 1.0, weights);
    double stiff = 0.0;
    for (double w : weights) stiff += w;
    REQUIRE(stiff == Catch::Approx(1.0 / 16384.0).epsilon(1e-10));
}
