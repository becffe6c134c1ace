#pragma once

// Shared scenario builders and small oracles for the test suites.

#include <cmath>
#include <random>
#include <vector>

#include "akgrowth/akgrowth.hpp"

namespace akgrowth::test {

/// Spatially constant scenario (the closed-form ODE case).
inline Scenario constant_scenario(double k0, double c0, double a0, double horizon,
                                  std::size_t steps, std::size_t n = 256) {
    Scenario s;
    s.technology = TechnologyPath::constant(a0);
    s.consumption = ConsumptionField::constant(c0);
    s.initial_capital = SpatialProfile::constant(n, k0);
    s.horizon = horizon;
    s.time_mesh = uniform_time_mesh(horizon, steps);
    return s;
}

/// k0 = base + amp cos(mode x), no consumption.
inline Scenario single_mode_scenario(double base, double amp, int mode, double a0,
                                     double horizon, std::size_t steps, std::size_t n = 256) {
    Scenario s;
    s.technology = TechnologyPath::constant(a0);
    s.consumption = ConsumptionField::zero();
    s.initial_capital = SpatialProfile::harmonics(n, base, {{mode, amp}});
    s.horizon = horizon;
    s.time_mesh = uniform_time_mesh(horizon, steps);
    return s;
}

inline double sup_row_error(std::span<const double> row, const std::vector<double>& expect) {
    double m = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i)
        m = std::max(m, std::fabs(row[i] - expect[i]));
    return m;
}

}  // namespace akgrowth::test
