#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "akgrowth/circle.hpp"

namespace akgrowth {

/// Samples of a 2*pi-periodic function on the uniform grid x_i = 2*pi*i/n.
/// The sample at index n would coincide with index 0 and is not stored.
class SpatialProfile {
public:
    SpatialProfile() = default;

    explicit SpatialProfile(std::vector<double> samples) : samples_(std::move(samples)) {
        if (samples_.size() < 4)
            throw std::invalid_argument("SpatialProfile needs at least 4 samples");
        for (double v : samples_)
            if (!std::isfinite(v)) throw std::invalid_argument("SpatialProfile sample not finite");
    }

    static SpatialProfile constant(std::size_t n, double value) {
        return SpatialProfile(std::vector<double>(n, value));
    }

    template <typename F>
    static SpatialProfile from_function(std::size_t n, F&& f) {
        std::vector<double> s(n);
        for (std::size_t i = 0; i < n; ++i)
            s[i] = f(two_pi * static_cast<double>(i) / static_cast<double>(n));
        return SpatialProfile(std::move(s));
    }

    struct Harmonic {
        int mode;
        double amplitude;
    };

    /// base + sum_j cos_terms[j].amp * cos(m_j x) + sum_j sin_terms[j].amp * sin(m_j x)
    static SpatialProfile harmonics(std::size_t n, double base,
                                    const std::vector<Harmonic>& cos_terms,
                                    const std::vector<Harmonic>& sin_terms = {}) {
        return from_function(n, [&](double x) {
            double v = base;
            for (const auto& h : cos_terms) v += h.amplitude * std::cos(h.mode * x);
            for (const auto& h : sin_terms) v += h.amplitude * std::sin(h.mode * x);
            return v;
        });
    }

    std::size_t size() const { return samples_.size(); }
    std::span<const double> samples() const { return samples_; }
    double operator[](std::size_t i) const { return samples_[i]; }

    double grid_point(std::size_t i) const {
        return two_pi * static_cast<double>(i) / static_cast<double>(size());
    }

    /// Periodic linear interpolation between grid samples.
    double value_at(double x) const {
        const std::size_t n = size();
        double u = canonical_angle(x) / two_pi * static_cast<double>(n);
        std::size_t i = static_cast<std::size_t>(u);
        if (i >= n) i = n - 1;
        double frac = u - static_cast<double>(i);
        return samples_[i] + frac * (samples_[(i + 1) % n] - samples_[i]);
    }

    double mean() const {
        return std::accumulate(samples_.begin(), samples_.end(), 0.0) /
               static_cast<double>(size());
    }

    double min() const { return *std::min_element(samples_.begin(), samples_.end()); }
    double max() const { return *std::max_element(samples_.begin(), samples_.end()); }

    friend bool operator==(const SpatialProfile&, const SpatialProfile&) = default;

private:
    std::vector<double> samples_;
};

}  // namespace akgrowth
