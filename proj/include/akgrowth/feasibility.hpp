#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "akgrowth/fit.hpp"
#include "akgrowth/quadrature.hpp"
#include "akgrowth/scenario.hpp"

namespace akgrowth {

/// Slack allowed on solved-field nonnegativity when the sufficient condition
/// holds with positive margin.
inline constexpr double positivity_slack = 1e-9;

/// Verdict for the concave-consumption sufficient condition: c spatially
/// constant (a periodic function with c_xx <= 0 everywhere is constant) and
/// the discounted per-location consumption stream within the local endowment.
struct Theorem1Result {
    bool concavity_ok = false;
    bool bound_ok = false;
    double margin = 0.0;          // min over x of k0(x) - discounted stream at x
    double spatial_range = 0.0;   // worst max-min of c over the sweep
    bool tail_bounded = false;    // horizon tail estimate available
};

/// Verdict for the maximum-consumption sufficient condition: the discounted
/// stream of the space-wide maximum consumption within the lowest endowment.
struct Theorem2Result {
    bool bound_ok = false;
    double margin = 0.0;   // floor - budget
    double budget = 0.0;   // discounted max-consumption stream (plus tail estimate)
    double floor = 0.0;    // min over x of k0
    bool tail_bounded = false;
};

/// Necessary-condition heuristic: the discounted maximum consumption should
/// decay toward zero for the budget integrals to converge.
struct FootnoteResult {
    bool discounted_c_vanishes = false;
    double fitted_rate = 0.0;  // slope of log d(t) over the trailing window
};

struct FeasibilityReport {
    Theorem1Result theorem1;
    Theorem2Result theorem2;
    FootnoteResult footnote;
};

namespace detail {

inline std::vector<double> sweep_times(const Scenario& s, std::size_t count) {
    std::vector<double> ts(count + 1);
    for (std::size_t j = 0; j <= count; ++j)
        ts[j] = s.horizon * static_cast<double>(j) / static_cast<double>(count);
    return ts;
}

inline double discount(const Scenario& s, double t) {
    return std::exp(-s.technology.cumulative(t));
}

/// Tail estimate for integral_T^inf e^{-int A} g ds with g <= sup_g and
/// A >= A_plus > 0: e^{-int_0^T A} sup_g / A_plus. Returns false when no
/// positive lower bound on A is available.
inline bool tail_estimate(const Scenario& s, double sup_g, double& tail) {
    tail = 0.0;
    if (sup_g <= 0.0) return true;
    const auto lb = s.technology.lower_bound();
    if (!lb || !(*lb > 0.0)) return false;
    tail = discount(s, s.horizon) * sup_g / *lb;
    return true;
}

}  // namespace detail

inline Theorem1Result check_theorem1(const Scenario& s) {
    Theorem1Result res;
    const double tol = s.tolerances.feasibility;
    const std::size_t n = s.grid_size();

    // Spatial-constancy form of the concavity hypothesis.
    const auto sweep = detail::sweep_times(s, std::max<std::size_t>(4 * s.time_mesh.size(), 64));
    double range = 0.0;
    for (double t : sweep) {
        const auto row = s.consumption.row(t, n);
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        range = std::max(range, *hi - *lo);
    }
    res.spatial_range = range;
    res.concavity_ok = range <= tol;

    // Pointwise budget k0(x) >= sup_t integral_0^t e^{-int A} c(x, s) ds.
    // The integrand is nonnegative, so the supremum is the full integral.
    std::vector<double> budget(n, 0.0);
    std::vector<double> sup_c(n, 0.0);
    const auto* sep = s.consumption.separable_kind();
    if (sep && sep->spatial.size() == n) {
        const double stream = adaptive_integrate(
            [&](double t) { return detail::discount(s, t) * sep->temporal.value(t); }, 0.0,
            s.horizon, s.tolerances.quadrature);
        double sup_temporal = 0.0;
        for (double t : sweep) sup_temporal = std::max(sup_temporal, sep->temporal.value(t));
        for (std::size_t i = 0; i < n; ++i) {
            budget[i] = sep->spatial[i] * stream;
            sup_c[i] = sep->spatial[i] * sup_temporal;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double x = two_pi * static_cast<double>(i) / static_cast<double>(n);
            budget[i] = adaptive_integrate(
                [&](double t) { return detail::discount(s, t) * s.consumption.value(x, t); }, 0.0,
                s.horizon, s.tolerances.quadrature);
            for (double t : sweep) sup_c[i] = std::max(sup_c[i], s.consumption.value(x, t));
        }
    }

    res.margin = std::numeric_limits<double>::infinity();
    res.tail_bounded = true;
    for (std::size_t i = 0; i < n; ++i) {
        double tail = 0.0;
        if (!detail::tail_estimate(s, sup_c[i], tail)) res.tail_bounded = false;
        res.margin = std::min(res.margin, s.initial_capital[i] - (budget[i] + tail));
    }
    res.bound_ok = res.margin >= -tol;
    return res;
}

inline Theorem2Result check_theorem2(const Scenario& s) {
    Theorem2Result res;
    const double tol = s.tolerances.feasibility;
    const std::size_t n = s.grid_size();

    res.floor = s.initial_capital.min();
    res.budget = adaptive_integrate(
        [&](double t) { return detail::discount(s, t) * s.consumption.max_on_grid(t, n); }, 0.0,
        s.horizon, s.tolerances.quadrature);

    double sup_max_c = 0.0;
    for (double t : detail::sweep_times(s, std::max<std::size_t>(4 * s.time_mesh.size(), 64)))
        sup_max_c = std::max(sup_max_c, s.consumption.max_on_grid(t, n));
    double tail = 0.0;
    res.tail_bounded = detail::tail_estimate(s, sup_max_c, tail);
    res.budget += tail;

    res.margin = res.floor - res.budget;
    res.bound_ok = res.margin >= -tol;
    return res;
}

/// Trend of d(t) = e^{-int A} max_x c over the trailing tenth of the horizon.
/// A heuristic necessary check, not a proof: it looks only at the horizon.
inline FootnoteResult check_footnote_limits(const Scenario& s) {
    FootnoteResult res;
    const std::size_t n = s.grid_size();
    const std::size_t points = 32;
    const double t0 = 0.9 * s.horizon;

    std::vector<double> ts, logs;
    double d_first = 0.0, d_last = 0.0, d_max = 0.0;
    for (std::size_t j = 0; j <= points; ++j) {
        const double t = t0 + (s.horizon - t0) * static_cast<double>(j) / points;
        const double d = detail::discount(s, t) * s.consumption.max_on_grid(t, n);
        if (j == 0) d_first = d;
        d_last = d;
        d_max = std::max(d_max, d);
        if (d > 1e-300) {
            ts.push_back(t);
            logs.push_back(std::log(d));
        }
    }
    if (d_max <= 1e-14) {  // already vanished
        res.discounted_c_vanishes = true;
        res.fitted_rate = 0.0;
        return res;
    }
    const auto fit = fit_line(ts, logs);
    if (!fit) {
        res.discounted_c_vanishes = d_last <= d_first;
        return res;
    }
    res.fitted_rate = fit->slope;
    res.discounted_c_vanishes = fit->slope <= 1e-9 && d_last <= d_first * (1.0 + 1e-9);
    return res;
}

inline FeasibilityReport check_feasibility(const Scenario& s) {
    return FeasibilityReport{check_theorem1(s), check_theorem2(s), check_footnote_limits(s)};
}

}  // namespace akgrowth
