#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "akgrowth/circle.hpp"

namespace akgrowth {

namespace detail {

/// Piecewise-linear samples over ascending times, clamped outside the range.
struct LinearSamples {
    std::vector<double> times;
    std::vector<double> values;

    void check() const {
        if (times.size() != values.size() || times.size() < 2)
            throw std::invalid_argument("sampled path needs matching times/values, at least 2");
        for (std::size_t i = 1; i < times.size(); ++i)
            if (!(times[i] > times[i - 1]))
                throw std::invalid_argument("sampled path times must be strictly increasing");
    }

    double value(double t) const {
        if (t <= times.front()) return values.front();
        if (t >= times.back()) return values.back();
        auto it = std::upper_bound(times.begin(), times.end(), t);
        std::size_t i = static_cast<std::size_t>(it - times.begin()) - 1;
        double frac = (t - times[i]) / (times[i + 1] - times[i]);
        return values[i] + frac * (values[i + 1] - values[i]);
    }

    friend bool operator==(const LinearSamples&, const LinearSamples&) = default;
};

}  // namespace detail

/// A scalar function of time, in one of a few closed forms. Used for the
/// temporal factor of separable consumption fields.
class ScalarPath {
public:
    struct Constant {
        double value;
        friend bool operator==(const Constant&, const Constant&) = default;
    };
    struct Sampled {
        detail::LinearSamples data;
        friend bool operator==(const Sampled&, const Sampled&) = default;
    };
    struct Exponential {  // value * exp(growth * t)
        double value;
        double growth;
        friend bool operator==(const Exponential&, const Exponential&) = default;
    };
    struct Sinusoidal {  // base + amplitude * sin(frequency * t + phase)
        double base;
        double amplitude;
        double frequency;
        double phase;
        friend bool operator==(const Sinusoidal&, const Sinusoidal&) = default;
    };

    ScalarPath() : kind_(Constant{0.0}) {}

    static ScalarPath constant(double v) { return ScalarPath(Constant{v}); }
    static ScalarPath sampled(std::vector<double> times, std::vector<double> values) {
        detail::LinearSamples d{std::move(times), std::move(values)};
        d.check();
        return ScalarPath(Sampled{std::move(d)});
    }
    static ScalarPath exponential(double value, double growth) {
        return ScalarPath(Exponential{value, growth});
    }
    static ScalarPath sinusoidal(double base, double amplitude, double frequency,
                                 double phase = 0.0) {
        return ScalarPath(Sinusoidal{base, amplitude, frequency, phase});
    }

    double value(double t) const {
        return std::visit(
            [t](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Constant>) return k.value;
                else if constexpr (std::is_same_v<T, Sampled>) return k.data.value(t);
                else if constexpr (std::is_same_v<T, Exponential>) return k.value * std::exp(k.growth * t);
                else return k.base + k.amplitude * std::sin(k.frequency * t + k.phase);
            },
            kind_);
    }

    /// Lower bound of the path over [0, horizon] (exact per kind; samples are
    /// piecewise linear so their extremes sit at knots).
    double min_on(double horizon) const {
        return std::visit(
            [horizon](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Constant>) return k.value;
                else if constexpr (std::is_same_v<T, Exponential>)
                    // monotone, so the minimum is at an endpoint
                    return std::min(k.value, k.value * std::exp(k.growth * horizon));
                else if constexpr (std::is_same_v<T, Sinusoidal>) {
                    if (std::fabs(k.frequency) * horizon >= two_pi)
                        return k.base - std::fabs(k.amplitude);
                    double m = std::min(k.base + k.amplitude * std::sin(k.phase),
                                        k.base + k.amplitude * std::sin(k.frequency * horizon + k.phase));
                    // interior extrema of sin at phase +- pi/2
                    for (int j = -64; j <= 64; ++j) {
                        double arg = (0.5 + j) * std::numbers::pi;
                        double t = (arg - k.phase) / (k.frequency == 0 ? 1.0 : k.frequency);
                        if (k.frequency != 0 && t >= 0 && t <= horizon)
                            m = std::min(m, k.base + k.amplitude * std::sin(arg));
                    }
                    return m;
                } else {
                    double m = k.data.values.front();
                    for (double v : k.data.values) m = std::min(m, v);
                    return m;
                }
            },
            kind_);
    }

    template <typename T>
    const T* get_if() const { return std::get_if<T>(&kind_); }

    friend bool operator==(const ScalarPath&, const ScalarPath&) = default;

private:
    using Kind = std::variant<Constant, Sampled, Exponential, Sinusoidal>;
    explicit ScalarPath(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

}  // namespace akgrowth
