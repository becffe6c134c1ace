#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "akgrowth/field.hpp"
#include "akgrowth/fit.hpp"
#include "akgrowth/quadrature.hpp"
#include "akgrowth/scenario.hpp"

namespace akgrowth {

namespace detail {

inline double mean_consumption(const Scenario& s, double t) {
    if (const auto* sep = s.consumption.separable_kind())
        if (sep->spatial.size() == s.grid_size())
            return sep->spatial.mean() * sep->temporal.value(t);
    std::vector<double> row = s.consumption.row(t, s.grid_size());
    double acc = 0.0;
    for (double v : row) acc += v;
    return acc / static_cast<double>(row.size());
}

}  // namespace detail

/// Theoretical limit of the detrended capital stock,
///
///   lim_{t->inf} k(x, t) e^{-int_0^t A} = mean(k0) - integral_0^inf e^{-int A} cbar(s) ds,
///
/// with cbar the spatial mean of consumption. The integral is quadrature on
/// [0, horizon] plus a tail estimate e^{-int_0^T A} sup cbar / A_plus, which
/// needs a positive lower bound on A (constant technology provides its own).
inline double predicted_limit(const Scenario& s, double* tail_out = nullptr) {
    const double finite = adaptive_integrate(
        [&](double t) {
            return std::exp(-s.technology.cumulative(t)) * detail::mean_consumption(s, t);
        },
        0.0, s.horizon, s.tolerances.quadrature);

    // Future consumption proxy: the trailing tenth of the horizon. For
    // constant consumption this is exact; for decaying consumption it is far
    // tighter than the global supremum (the feasibility budget, which must
    // stay conservative, uses the global supremum instead).
    double sup_cbar = 0.0;
    const std::size_t sweep = 64;
    for (std::size_t j = 0; j <= sweep; ++j) {
        const double t = s.horizon * (0.9 + 0.1 * static_cast<double>(j) / sweep);
        sup_cbar = std::max(sup_cbar, detail::mean_consumption(s, t));
    }

    double tail = 0.0;
    if (sup_cbar > 0.0) {
        const auto lb = s.technology.lower_bound();
        if (!lb || !(*lb > 0.0))
            throw std::invalid_argument(
                "predicted limit needs constant technology or a declared positive lower bound "
                "to certify the consumption tail");
        tail = std::exp(-s.technology.cumulative(s.horizon)) * sup_cbar / *lb;
    }
    if (tail_out) *tail_out = tail;
    return s.initial_capital.mean() - finite - tail;
}

/// Convergence measurements of a solved field against the theoretical limit.
struct ConvergenceDiagnostics {
    std::optional<double> predicted_limit;     // nullopt: tail not certifiable
    double tail_bound = 0.0;                   // size of the tail estimate used
    std::vector<double> times;
    std::vector<double> sup_deviation;         // sup_x |h - limit|; empty without a limit
    std::vector<double> spatial_inequality;    // max - min of the detrended rows
    std::optional<double> decay_rate;          // log-slope fit; nullopt when below floor
    double fit_residual = 0.0;
    bool below_floor = false;
};

/// Floor under which spatial inequality is treated as numerically zero.
inline constexpr double inequality_floor = 1e-14;

inline ConvergenceDiagnostics convergence_report(const SpaceTimeField& field, const Scenario& s) {
    const SpaceTimeField h = detrend(field, s.technology);

    ConvergenceDiagnostics diag;
    diag.times = h.times;
    try {
        double tail = 0.0;
        diag.predicted_limit = predicted_limit(s, &tail);
        diag.tail_bound = tail;
    } catch (const std::invalid_argument&) {
        diag.predicted_limit = std::nullopt;
    }

    diag.spatial_inequality.reserve(h.times.size());
    for (const auto& row : h.values) {
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        diag.spatial_inequality.push_back(*hi - *lo);
        if (diag.predicted_limit) {
            double dev = 0.0;
            for (double v : row) dev = std::max(dev, std::fabs(v - *diag.predicted_limit));
            diag.sup_deviation.push_back(dev);
        }
    }

    // Exponential-rate fit of the inequality over the trailing half of the mesh.
    const double t_half = 0.5 * (h.times.front() + h.times.back());
    std::vector<double> ts, logs;
    for (std::size_t j = 0; j < h.times.size(); ++j) {
        if (h.times[j] < t_half) continue;
        if (diag.spatial_inequality[j] <= inequality_floor) continue;
        ts.push_back(h.times[j]);
        logs.push_back(std::log(diag.spatial_inequality[j]));
    }
    const auto fit = fit_line(ts, logs);
    if (!fit) {
        diag.below_floor = true;
    } else {
        diag.decay_rate = fit->slope;
        diag.fit_residual = fit->rms_residual;
    }
    return diag;
}

/// Majorant of the consumption-induced spatial deviation for constant
/// technology A0 < 1 (the slowest eigenvalue is 1, so every n^2 - A0 > 0):
///
///   B(t) = ctilde_sup (e^{-A0 t} sum_{n>=1} 1/(n^2 - A0) - sum_{n>=1} e^{-n^2 t}/(n^2 - A0))
///
/// with ctilde_sup = 2 sup_s cbar(s) (the L1 bound on every Fourier
/// coefficient of a nonnegative profile).
inline double consumption_deviation_majorant(const Scenario& s, double t) {
    const auto* constant = s.technology.get_if<TechnologyPath::Constant>();
    if (!constant) throw std::invalid_argument("majorant requires constant technology");
    const double a0 = constant->rate;
    if (!(a0 < 1.0)) throw std::invalid_argument("majorant requires A0 < 1");
    if (!(t > 0.0)) throw std::invalid_argument("majorant requires t > 0");

    // S1 = sum 1/(n^2 - a^2) = (1 - pi a cot(pi a)) / (2 a^2), a = sqrt(A0).
    double s1;
    const double a = std::sqrt(a0);
    const double u = std::numbers::pi * a;
    if (u < 1e-4) {
        s1 = std::numbers::pi * std::numbers::pi / 6.0 + u * u / 90.0 * std::numbers::pi * std::numbers::pi;
    } else {
        s1 = (1.0 - u * std::cos(u) / std::sin(u)) / (2.0 * a0);
    }

    double s2 = 0.0;
    for (std::size_t n = 1; n < 100000; ++n) {
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        const double term = std::exp(-nn * t) / (nn - a0);
        s2 += term;
        if (term < 1e-18 * (s2 + 1e-300)) break;
    }

    double sup_cbar = 0.0;
    const std::size_t sweep = 256;
    for (std::size_t j = 0; j <= sweep; ++j) {
        const double tt = t * static_cast<double>(j) / sweep;
        sup_cbar = std::max(sup_cbar, detail::mean_consumption(s, tt));
    }
    return 2.0 * sup_cbar * (std::exp(-a0 * t) * s1 - s2);
}

}  // namespace akgrowth
