#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "akgrowth/feasibility.hpp"
#include "akgrowth/scenario.hpp"

namespace akgrowth {

// Named scenarios used by the test suites and the `gen` subcommand.

/// Constant benchmark: k0 = 2, c = 0.1, A = 0.05. The exact solution is the
/// ODE (K - c0/A0) e^{A0 t} + c0/A0, which here is identically 2.
inline Scenario preset_benchmark() {
    Scenario s;
    s.technology = TechnologyPath::constant(0.05);
    s.consumption = ConsumptionField::constant(0.1);
    s.initial_capital = SpatialProfile::constant(256, 2.0);
    s.horizon = 20.0;
    s.time_mesh = uniform_time_mesh(s.horizon, 100);
    return s;
}

/// Pure diffusion of a single harmonic: k0 = 1 + cos(3x)/2, no consumption,
/// no growth. The spatial inequality decays like e^{-9t}.
inline Scenario preset_single_mode() {
    Scenario s;
    s.technology = TechnologyPath::constant(0.0);
    s.consumption = ConsumptionField::zero();
    s.initial_capital = SpatialProfile::harmonics(256, 1.0, {{3, 0.5}});
    s.horizon = 3.0;
    s.time_mesh = uniform_time_mesh(s.horizon, 60);
    return s;
}

/// Convergence study with constant technology: mixed-mode initial capital and
/// spatially uneven consumption against A = 0.1.
inline Scenario preset_asymptotic_constant() {
    Scenario s;
    s.technology = TechnologyPath::constant(0.1);
    s.consumption = ConsumptionField::separable(SpatialProfile::harmonics(256, 1.0, {{1, 0.5}}),
                                                ScalarPath::constant(0.02));
    s.initial_capital = SpatialProfile::harmonics(256, 1.0, {{1, 0.5}}, {{2, 0.25}});
    s.horizon = 40.0;
    s.time_mesh = uniform_time_mesh(s.horizon, 80);
    return s;
}

/// Same capital and consumption, oscillating technology A = 0.1 + 0.05 sin t
/// (infimum 0.05).
inline Scenario preset_asymptotic_varying() {
    Scenario s = preset_asymptotic_constant();
    s.technology = TechnologyPath::sinusoidal(0.1, 0.05, 1.0);
    s.horizon = 60.0;
    s.time_mesh = uniform_time_mesh(s.horizon, 120);
    return s;
}

/// Overconsumption example: k0 = 0.5, c = 1, A = 1. The discounted maximum
/// consumption stream is 1 > 0.5, so the sufficient condition fails with
/// margin -0.5, and the solved capital turns negative after t = ln 2.
inline Scenario preset_violating() {
    Scenario s;
    s.technology = TechnologyPath::constant(1.0);
    s.consumption = ConsumptionField::constant(1.0);
    s.initial_capital = SpatialProfile::constant(256, 0.5);
    s.horizon = 2.0;
    s.time_mesh = uniform_time_mesh(s.horizon, 40);
    return s;
}

struct RandomScenarioOptions {
    std::size_t grid_size = 256;
    double horizon = 2.0;
    std::size_t mesh_steps = 8;
    std::size_t max_mode = 8;
    bool force_constant_technology = false;
};

/// Deterministic random scenario: nonnegative band-limited initial capital,
/// separable consumption scaled to keep the maximum-consumption budget
/// strictly inside the lowest endowment, technology constant or sinusoidal
/// with infimum >= 0.05.
inline Scenario random_feasible_scenario(std::uint64_t seed, RandomScenarioOptions opt = {}) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };

    Scenario s;
    s.horizon = opt.horizon;
    s.time_mesh = uniform_time_mesh(opt.horizon, opt.mesh_steps);

    // capital: random modes with 1/n^2 amplitude falloff over a safe base
    std::vector<SpatialProfile::Harmonic> cosines, sines;
    double mass = 0.0;
    for (int n = 1; n <= static_cast<int>(opt.max_mode); ++n) {
        const double scale = 0.5 / (static_cast<double>(n) * static_cast<double>(n));
        const double a = uniform(-scale, scale);
        const double b = uniform(-scale, scale);
        cosines.push_back({n, a});
        sines.push_back({n, b});
        mass += std::fabs(a) + std::fabs(b);
    }
    const double base = mass + uniform(0.5, 1.5);
    s.initial_capital = SpatialProfile::harmonics(opt.grid_size, base, cosines, sines);

    // technology: constant or sinusoidal, infimum at least 0.05
    if (opt.force_constant_technology || rng() % 2 == 0) {
        s.technology = TechnologyPath::constant(uniform(0.05, 0.8));
    } else {
        const double floor_a = 0.05;
        const double tech_base = uniform(0.15, 0.8);
        const double amp = uniform(0.2, 0.9) * (tech_base - floor_a);
        s.technology = TechnologyPath::sinusoidal(tech_base, amp, uniform(0.5, 2.5));
    }

    // consumption: cosine ridge in space, constant or decaying in time,
    // scaled so the discounted maximum stream stays below the capital floor
    const double alpha = uniform(0.0, 0.5);
    const double phase = uniform(0.0, two_pi);
    SpatialProfile spatial = SpatialProfile::from_function(
        opt.grid_size, [&](double x) { return 1.0 + alpha * std::cos(x - phase); });
    ScalarPath temporal = rng() % 2 == 0 ? ScalarPath::constant(1.0)
                                         : ScalarPath::exponential(1.0, -uniform(0.0, 0.4));
    s.consumption = ConsumptionField::separable(spatial, temporal);

    const Theorem2Result raw = check_theorem2(s);
    const double target_share = uniform(0.2, 0.7);
    const double scale = raw.budget > 0.0 ? target_share * raw.floor / raw.budget : 1.0;
    s.consumption = ConsumptionField::separable(
        SpatialProfile::from_function(
            opt.grid_size, [&](double x) { return scale * (1.0 + alpha * std::cos(x - phase)); }),
        temporal);
    return s;
}

inline Scenario preset_by_name(const std::string& name, std::uint64_t seed = 1) {
    if (name == "benchmark") return preset_benchmark();
    if (name == "single-mode") return preset_single_mode();
    if (name == "asymptotic-constant") return preset_asymptotic_constant();
    if (name == "asymptotic-varying") return preset_asymptotic_varying();
    if (name == "violating") return preset_violating();
    if (name == "random") return random_feasible_scenario(seed);
    throw std::invalid_argument(
        "unknown preset '" + name +
        "' (expected benchmark, single-mode, asymptotic-constant, asymptotic-varying, "
        "violating, or random)");
}

}  // namespace akgrowth
