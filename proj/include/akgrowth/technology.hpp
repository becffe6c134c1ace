#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "akgrowth/scalar_path.hpp"

namespace akgrowth {

/// The technology level A(t) >= 0 and its exact running integral. Sampled
/// paths are piecewise linear and clamped to the end values outside their
/// time range; the integral is the analytic antiderivative in every kind.
class TechnologyPath {
public:
    struct Constant {
        double rate;
        friend bool operator==(const Constant&, const Constant&) = default;
    };
    struct Sampled {
        detail::LinearSamples data;
        friend bool operator==(const Sampled&, const Sampled&) = default;
    };
    struct Sinusoidal {  // base + amplitude * sin(frequency * t)
        double base;
        double amplitude;
        double frequency;
        friend bool operator==(const Sinusoidal&, const Sinusoidal&) = default;
    };

    TechnologyPath() : kind_(Constant{0.0}) {}

    static TechnologyPath constant(double rate) {
        TechnologyPath p{Kind{Constant{rate}}};
        p.lower_bound_ = rate;
        return p;
    }

    static TechnologyPath sampled(std::vector<double> times, std::vector<double> values,
                                  std::optional<double> lower_bound = std::nullopt) {
        detail::LinearSamples d{std::move(times), std::move(values)};
        d.check();
        if (d.times.front() < 0.0)
            throw std::invalid_argument("technology sample times must be nonnegative");
        TechnologyPath p{Kind{Sampled{std::move(d)}}};
        p.lower_bound_ = lower_bound;
        p.build_prefix();
        return p;
    }

    static TechnologyPath sinusoidal(double base, double amplitude, double frequency) {
        TechnologyPath p{Kind{Sinusoidal{base, amplitude, frequency}}};
        p.lower_bound_ = base - std::fabs(amplitude);
        return p;
    }

    /// A(t). Negative times are rejected.
    double rate(double t) const {
        require_nonnegative(t);
        return std::visit(
            [t](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Constant>) return k.rate;
                else if constexpr (std::is_same_v<T, Sampled>) return k.data.value(t);
                else return k.base + k.amplitude * std::sin(k.frequency * t);
            },
            kind_);
    }

    /// integral_0^t A(s) ds, exact per kind; nondecreasing in t when A >= 0.
    double cumulative(double t) const {
        require_nonnegative(t);
        return std::visit(
            [&](const auto& k) -> double {
                using T = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<T, Constant>) {
                    return k.rate * t;
                } else if constexpr (std::is_same_v<T, Sinusoidal>) {
                    if (k.frequency == 0.0) return k.base * t;
                    return k.base * t + k.amplitude / k.frequency * (1.0 - std::cos(k.frequency * t));
                } else {
                    return sampled_cumulative(k.data, t);
                }
            },
            kind_);
    }

    /// Declared (or kind-implied) infimum of A over all time, if any.
    std::optional<double> lower_bound() const { return lower_bound_; }

    template <typename T>
    const T* get_if() const { return std::get_if<T>(&kind_); }

    friend bool operator==(const TechnologyPath& a, const TechnologyPath& b) {
        return a.kind_ == b.kind_ && a.lower_bound_ == b.lower_bound_;
    }

private:
    using Kind = std::variant<Constant, Sampled, Sinusoidal>;
    explicit TechnologyPath(Kind k) : kind_(std::move(k)) {}

    static void require_nonnegative(double t) {
        if (t < 0.0) throw std::invalid_argument("technology path evaluated at negative time");
    }

    void build_prefix() {
        const auto& d = std::get<Sampled>(kind_).data;
        prefix_.assign(d.times.size(), 0.0);
        for (std::size_t i = 1; i < d.times.size(); ++i)
            prefix_[i] = prefix_[i - 1] +
                         0.5 * (d.values[i] + d.values[i - 1]) * (d.times[i] - d.times[i - 1]);
    }

    double sampled_cumulative(const detail::LinearSamples& d, double t) const {
        // Clamped extension: constant value before the first knot and after the last.
        double acc = 0.0;
        if (d.times.front() > 0.0) {
            double end = std::min(t, d.times.front());
            acc += d.values.front() * end;
            if (t <= d.times.front()) return acc;
        } else if (t <= d.times.front()) {
            return d.values.front() * t;
        }
        if (t >= d.times.back())
            return acc + prefix_.back() + d.values.back() * (t - d.times.back());
        auto it = std::upper_bound(d.times.begin(), d.times.end(), t);
        std::size_t i = static_cast<std::size_t>(it - d.times.begin()) - 1;
        double dt = t - d.times[i];
        double v_t = d.values[i] + (d.values[i + 1] - d.values[i]) * dt / (d.times[i + 1] - d.times[i]);
        return acc + prefix_[i] + 0.5 * (d.values[i] + v_t) * dt;
    }

    Kind kind_;
    std::optional<double> lower_bound_;
    std::vector<double> prefix_;  // integral over [times[0], times[i]] for sampled kind
};

/// integral_0^t A(s) ds.
inline double cumulative_technology(const TechnologyPath& tech, double t) {
    return tech.cumulative(t);
}

}  // namespace akgrowth
