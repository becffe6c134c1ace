#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "akgrowth/circle.hpp"
#include "akgrowth/profile.hpp"
#include "akgrowth/scalar_path.hpp"

namespace akgrowth {

/// Consumption flow c(x, t) >= 0, 2*pi-periodic in x.
///
/// Three representations:
///  - separable: spatial profile times a scalar path of time,
///  - grid: samples on a time mesh by spatial grid, linear in t, periodic
///    linear in x, clamped outside the time range,
///  - analytic: an arbitrary callable (not serializable; intended for tests).
class ConsumptionField {
public:
    struct Separable {
        SpatialProfile spatial;
        ScalarPath temporal;
        friend bool operator==(const Separable&, const Separable&) = default;
    };
    struct Grid {
        std::vector<double> times;
        std::vector<std::vector<double>> values;  // values[j][i] at (x_i, times[j])
        friend bool operator==(const Grid&, const Grid&) = default;
    };
    struct Analytic {
        std::shared_ptr<const std::function<double(double, double)>> fn;
        friend bool operator==(const Analytic& a, const Analytic& b) { return a.fn == b.fn; }
    };

    ConsumptionField() : kind_(Separable{SpatialProfile::constant(4, 0.0), ScalarPath::constant(0.0)}) {}

    static ConsumptionField zero(std::size_t n = 4) {
        return separable(SpatialProfile::constant(n, 0.0), ScalarPath::constant(1.0));
    }

    static ConsumptionField constant(double value, std::size_t n = 4) {
        return separable(SpatialProfile::constant(n, 1.0), ScalarPath::constant(value));
    }

    static ConsumptionField separable(SpatialProfile spatial, ScalarPath temporal) {
        return ConsumptionField(Kind{Separable{std::move(spatial), std::move(temporal)}});
    }

    static ConsumptionField grid(std::vector<double> times,
                                 std::vector<std::vector<double>> values) {
        if (times.size() < 2 || values.size() != times.size())
            throw std::invalid_argument("consumption grid needs a row per time, at least 2");
        if (times.front() < 0.0)
            throw std::invalid_argument("consumption grid times must be nonnegative");
        for (std::size_t j = 1; j < times.size(); ++j)
            if (!(times[j] > times[j - 1]))
                throw std::invalid_argument("consumption grid times must be strictly increasing");
        const std::size_t n = values.front().size();
        if (n < 4) throw std::invalid_argument("consumption grid needs at least 4 columns");
        for (const auto& row : values)
            if (row.size() != n) throw std::invalid_argument("consumption grid rows differ in length");
        return ConsumptionField(Kind{Grid{std::move(times), std::move(values)}});
    }

    static ConsumptionField analytic(std::function<double(double, double)> fn) {
        return ConsumptionField(Kind{Analytic{
            std::make_shared<const std::function<double(double, double)>>(std::move(fn))}});
    }

    /// c(x, t); x is reduced to [0, 2*pi) first.
    double value(double x, double t) const {
        const double xc = canonical_angle(x);
        return std::visit(
            [&](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Separable>)
                    return k.spatial.value_at(xc) * k.temporal.value(t);
                else if constexpr (std::is_same_v<T, Grid>)
                    return grid_value(k, xc, t);
                else
                    return (*k.fn)(xc, t);
            },
            kind_);
    }

    /// Samples c(., t) on the uniform n-point grid.
    std::vector<double> row(double t, std::size_t n) const {
        std::vector<double> out(n);
        if (const auto* s = std::get_if<Separable>(&kind_)) {
            const double f = s->temporal.value(t);
            if (s->spatial.size() == n) {
                for (std::size_t i = 0; i < n; ++i) out[i] = s->spatial[i] * f;
                return out;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            out[i] = value(two_pi * static_cast<double>(i) / static_cast<double>(n), t);
        return out;
    }

    /// max_i c(x_i, t) over the uniform n-point grid.
    double max_on_grid(double t, std::size_t n) const {
        if (const auto* s = std::get_if<Separable>(&kind_)) {
            const double f = s->temporal.value(t);
            // profile extremes scale by the sign of the temporal factor
            return f >= 0.0 ? s->spatial.max() * f : s->spatial.min() * f;
        }
        auto r = row(t, n);
        return *std::max_element(r.begin(), r.end());
    }

    const Separable* separable_kind() const { return std::get_if<Separable>(&kind_); }
    const Grid* grid_kind() const { return std::get_if<Grid>(&kind_); }
    bool is_analytic() const { return std::holds_alternative<Analytic>(kind_); }

    friend bool operator==(const ConsumptionField&, const ConsumptionField&) = default;

private:
    using Kind = std::variant<Separable, Grid, Analytic>;
    explicit ConsumptionField(Kind k) : kind_(std::move(k)) {}

    static double grid_value(const Grid& g, double xc, double t) {
        const std::size_t n = g.values.front().size();
        double u = xc / two_pi * static_cast<double>(n);
        std::size_t i = static_cast<std::size_t>(u);
        if (i >= n) i = n - 1;
        const double fx = u - static_cast<double>(i);
        const std::size_t i1 = (i + 1) % n;

        std::size_t j;
        double ft;
        if (t <= g.times.front()) {
            j = 0;
            ft = 0.0;
        } else if (t >= g.times.back()) {
            j = g.times.size() - 2;
            ft = 1.0;
        } else {
            auto it = std::upper_bound(g.times.begin(), g.times.end(), t);
            j = static_cast<std::size_t>(it - g.times.begin()) - 1;
            ft = (t - g.times[j]) / (g.times[j + 1] - g.times[j]);
        }
        const double lo = g.values[j][i] + fx * (g.values[j][i1] - g.values[j][i]);
        const double hi = g.values[j + 1][i] + fx * (g.values[j + 1][i1] - g.values[j + 1][i]);
        return lo + ft * (hi - lo);
    }

    Kind kind_;
};

}  // namespace akgrowth
