#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "akgrowth/consumption.hpp"
#include "akgrowth/profile.hpp"
#include "akgrowth/technology.hpp"

namespace akgrowth {

struct Tolerances {
    double series_tail = 1e-12;   // Green's function truncation
    double quadrature = 1e-10;    // time integrals (Duhamel, budgets, limits)
    double fd_dt = 1e-3;          // finite-difference oracle time step
    double fd_dx = 0.0;           // oracle grid spacing; 0 = use the scenario grid
    double feasibility = 1e-8;    // absolute slack on feasibility margins

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Full problem statement: technology path, consumption field, initial
/// capital, horizon and output mesh, solver resolution settings.
struct Scenario {
    TechnologyPath technology;
    ConsumptionField consumption;
    SpatialProfile initial_capital;
    double horizon = 0.0;
    std::vector<double> time_mesh;        // ascending, from 0 to horizon
    std::size_t mode_cutoff = 0;          // 0 = automatic (grid_size/2 - 1)
    Tolerances tolerances;

    std::size_t grid_size() const { return initial_capital.size(); }

    std::size_t modes() const {
        const std::size_t nyquist = grid_size() / 2 - 1;
        if (mode_cutoff == 0) return nyquist;
        return mode_cutoff < nyquist ? mode_cutoff : nyquist;
    }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Uniform mesh 0 = t_0 < ... < t_steps = horizon.
inline std::vector<double> uniform_time_mesh(double horizon, std::size_t steps) {
    std::vector<double> mesh(steps + 1);
    for (std::size_t j = 0; j <= steps; ++j)
        mesh[j] = horizon * static_cast<double>(j) / static_cast<double>(steps);
    mesh.back() = horizon;
    return mesh;
}

/// One violated scenario invariant, with enough location detail to fix it.
struct Violation {
    std::string where;
    std::string message;
};

/// Diagnostic check of every declared domain restriction. Returns all
/// violations found; an empty list means the scenario is valid. Never throws.
inline std::vector<Violation> validate_scenario(const Scenario& s) {
    std::vector<Violation> out;
    auto add = [&](std::string where, std::string message) {
        out.push_back({std::move(where), std::move(message)});
    };

    // grid and initial capital
    if (s.grid_size() < 4) add("initial_capital", "grid needs at least 4 points");
    for (std::size_t i = 0; i < s.grid_size(); ++i) {
        const double v = s.initial_capital[i];
        if (!(v >= 0.0))
            add("initial_capital", "initial capital negative at index " + std::to_string(i) +
                                       " (value " + std::to_string(v) + ")");
    }
    if (s.grid_size() >= 4 && s.mode_cutoff > s.grid_size() / 2 - 1)
        add("mode_cutoff", "exceeds the Nyquist limit " + std::to_string(s.grid_size() / 2 - 1));

    // horizon and mesh
    if (!(s.horizon > 0.0)) add("horizon", "horizon must be positive");
    if (s.time_mesh.size() < 2) {
        add("time_mesh", "needs at least the two points 0 and horizon");
    } else {
        if (s.time_mesh.front() != 0.0) add("time_mesh", "must start at 0");
        if (s.time_mesh.back() != s.horizon) add("time_mesh", "must end at the horizon");
        for (std::size_t j = 1; j < s.time_mesh.size(); ++j)
            if (!(s.time_mesh[j] > s.time_mesh[j - 1])) {
                add("time_mesh", "time mesh not increasing at index " + std::to_string(j));
                break;
            }
    }

    // technology: A(t) >= 0, and >= declared lower bound where one is given
    const double horizon = s.horizon > 0.0 ? s.horizon : 1.0;
    if (const auto* c = s.technology.get_if<TechnologyPath::Constant>()) {
        if (c->rate < 0.0) add("technology", "constant rate is negative");
    } else if (const auto* sin = s.technology.get_if<TechnologyPath::Sinusoidal>()) {
        if (sin->base - std::fabs(sin->amplitude) < 0.0)
            add("technology", "sinusoidal path dips below zero");
    } else if (const auto* sm = s.technology.get_if<TechnologyPath::Sampled>()) {
        for (std::size_t i = 0; i < sm->data.values.size(); ++i)
            if (sm->data.values[i] < 0.0)
                add("technology", "sampled value negative at index " + std::to_string(i));
    }
    if (auto lb = s.technology.lower_bound(); lb && *lb > 0.0) {
        for (std::size_t j = 0; j <= 200; ++j) {
            const double t = horizon * static_cast<double>(j) / 200.0;
            if (s.technology.rate(t) < *lb - 1e-12) {
                add("technology", "declared lower bound violated at t = " + std::to_string(t));
                break;
            }
        }
    }

    // consumption: c >= 0 on a sweep of the space-time domain
    if (const auto* g = s.consumption.grid_kind()) {
        for (std::size_t j = 0; j < g->values.size(); ++j)
            for (std::size_t i = 0; i < g->values[j].size(); ++i)
                if (!(g->values[j][i] >= 0.0)) {
                    add("consumption", "grid value negative at time index " + std::to_string(j) +
                                           ", space index " + std::to_string(i));
                    j = g->values.size();
                    break;
                }
    } else {
        const std::size_t n = s.grid_size() >= 4 ? s.grid_size() : 64;
        bool bad = false;
        for (std::size_t j = 0; j <= 64 && !bad; ++j) {
            const double t = horizon * static_cast<double>(j) / 64.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = two_pi * static_cast<double>(i) / static_cast<double>(n);
                if (!(s.consumption.value(x, t) >= 0.0)) {
                    add("consumption", "negative at x = " + std::to_string(x) +
                                           ", t = " + std::to_string(t));
                    bad = true;
                    break;
                }
            }
        }
    }

    // tolerances
    if (!(s.tolerances.series_tail > 0.0)) add("tolerances", "series_tail must be positive");
    if (!(s.tolerances.quadrature > 0.0)) add("tolerances", "quadrature must be positive");
    if (!(s.tolerances.fd_dt > 0.0)) add("tolerances", "fd_dt must be positive");
    if (s.tolerances.fd_dx < 0.0) add("tolerances", "fd_dx must be nonnegative");

    return out;
}

}  // namespace akgrowth
