#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "akgrowth/circle.hpp"
#include "akgrowth/profile.hpp"

namespace akgrowth {

/// Real Fourier coefficients of a periodic profile, normalized so that
///
///   p(x) = mean + sum_{n=1}^{M} a_n cos(n x) + b_n sin(n x),
///
/// i.e. the constant coefficient is the true spatial mean (1/2pi) integral p.
class ModeSpectrum {
public:
    ModeSpectrum() = default;
    ModeSpectrum(double mean, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
        : mean_(mean), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
        if (cos_.size() != sin_.size())
            throw std::invalid_argument("cos/sin coefficient counts differ");
    }

    static ModeSpectrum zeros(std::size_t modes) {
        return ModeSpectrum(0.0, std::vector<double>(modes, 0.0), std::vector<double>(modes, 0.0));
    }

    std::size_t mode_count() const { return cos_.size(); }

    double mean() const { return mean_; }
    double& mean() { return mean_; }

    /// 1-based mode index, matching the harmonic number n.
    double cos_coeff(std::size_t n) const { return cos_.at(n - 1); }
    double sin_coeff(std::size_t n) const { return sin_.at(n - 1); }
    double& cos_coeff(std::size_t n) { return cos_.at(n - 1); }
    double& sin_coeff(std::size_t n) { return sin_.at(n - 1); }

    std::span<const double> cos_coeffs() const { return cos_; }
    std::span<const double> sin_coeffs() const { return sin_; }

    /// Evaluate the trigonometric polynomial at an arbitrary angle.
    double evaluate(double x) const {
        double acc = mean_;
        for (std::size_t n = 1; n <= mode_count(); ++n) {
            const double nx = static_cast<double>(n) * x;
            acc += cos_[n - 1] * std::cos(nx) + sin_[n - 1] * std::sin(nx);
        }
        return acc;
    }

    friend bool operator==(const ModeSpectrum&, const ModeSpectrum&) = default;

private:
    double mean_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// Cached cos/sin tables for one (grid size, mode count) pair. Analysis and
/// synthesis are plain O(N M) sums; exact (to rounding) for profiles
/// band-limited below the Nyquist mode N/2.
class FourierBasis {
public:
    FourierBasis(std::size_t grid_size, std::size_t modes) : n_(grid_size), m_(modes) {
        if (grid_size < 4) throw std::invalid_argument("grid size must be at least 4");
        if (modes > grid_size / 2 - 1)
            throw std::invalid_argument("mode count " + std::to_string(modes) +
                                        " exceeds the Nyquist limit " +
                                        std::to_string(grid_size / 2 - 1) + " for grid size " +
                                        std::to_string(grid_size));
        cos_tab_.resize(m_ * n_);
        sin_tab_.resize(m_ * n_);
        for (std::size_t n = 1; n <= m_; ++n)
            for (std::size_t i = 0; i < n_; ++i) {
                const double arg = static_cast<double>(n) * two_pi * static_cast<double>(i) /
                                   static_cast<double>(n_);
                cos_tab_[(n - 1) * n_ + i] = std::cos(arg);
                sin_tab_[(n - 1) * n_ + i] = std::sin(arg);
            }
    }

    std::size_t grid_size() const { return n_; }
    std::size_t modes() const { return m_; }

    ModeSpectrum analyze(std::span<const double> samples) const {
        if (samples.size() != n_) throw std::invalid_argument("sample count does not match basis");
        ModeSpectrum spec = ModeSpectrum::zeros(m_);
        double mean = 0.0;
        for (double v : samples) mean += v;
        spec.mean() = mean / static_cast<double>(n_);
        const double scale = 2.0 / static_cast<double>(n_);
        for (std::size_t n = 1; n <= m_; ++n) {
            const double* ct = &cos_tab_[(n - 1) * n_];
            const double* st = &sin_tab_[(n - 1) * n_];
            double ac = 0.0, as = 0.0;
            for (std::size_t i = 0; i < n_; ++i) {
                ac += samples[i] * ct[i];
                as += samples[i] * st[i];
            }
            spec.cos_coeff(n) = scale * ac;
            spec.sin_coeff(n) = scale * as;
        }
        return spec;
    }

    std::vector<double> synthesize(const ModeSpectrum& spec) const {
        if (spec.mode_count() > m_)
            throw std::invalid_argument("spectrum has more modes than the basis");
        std::vector<double> out(n_, spec.mean());
        for (std::size_t n = 1; n <= spec.mode_count(); ++n) {
            const double a = spec.cos_coeff(n);
            const double b = spec.sin_coeff(n);
            const double* ct = &cos_tab_[(n - 1) * n_];
            const double* st = &sin_tab_[(n - 1) * n_];
            for (std::size_t i = 0; i < n_; ++i) out[i] += a * ct[i] + b * st[i];
        }
        return out;
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<double> cos_tab_;
    std::vector<double> sin_tab_;
};

/// Discrete real Fourier coefficients of the profile, up to n_modes.
/// Requires n_modes <= N/2 - 1 (below Nyquist).
inline ModeSpectrum analyze(const SpatialProfile& p, std::size_t n_modes) {
    return FourierBasis(p.size(), n_modes).analyze(p.samples());
}

/// Evaluate a spectrum on the uniform grid. Requires grid_size >= 2*modes + 2.
inline SpatialProfile synthesize(const ModeSpectrum& spec, std::size_t grid_size) {
    if (grid_size < 2 * spec.mode_count() + 2)
        throw std::invalid_argument("grid size " + std::to_string(grid_size) +
                                    " is below the Nyquist requirement " +
                                    std::to_string(2 * spec.mode_count() + 2) + " for " +
                                    std::to_string(spec.mode_count()) + " modes");
    return SpatialProfile(FourierBasis(grid_size, spec.mode_count()).synthesize(spec));
}

}  // namespace akgrowth
