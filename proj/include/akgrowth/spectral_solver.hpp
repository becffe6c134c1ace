#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akgrowth/errors.hpp"
#include "akgrowth/field.hpp"
#include "akgrowth/fourier.hpp"
#include "akgrowth/quadrature.hpp"
#include "akgrowth/scenario.hpp"

namespace akgrowth {

/// Discounted consumption gamma(x, t) = exp(-integral_0^t A) c(x, t), sampled
/// on the scenario grid.
inline SpatialProfile discounted_source(const Scenario& s, double t) {
    const double f = std::exp(-s.technology.cumulative(t));
    std::vector<double> row = s.consumption.row(t, s.grid_size());
    for (double& v : row) v *= f;
    return SpatialProfile(std::move(row));
}

/// Spatial mean of the discounted source at time t.
inline double discounted_source_mean(const Scenario& s, double t) {
    return discounted_source(s, t).mean();
}

namespace detail {

/// Mode-space Duhamel integrator for h_t = h_xx - gamma. For each mode the
/// increment over a panel treats the stiff factor e^{-n^2 (b-s)} exactly and
/// interpolates gamma_n(s) at Gauss-Legendre nodes, so accuracy is uniform in
/// the mode number. Panels are split adaptively under a Richardson check.
class DuhamelIntegrator {
public:
    DuhamelIntegrator(const Scenario& s, const FourierBasis& basis)
        : s_(s), basis_(basis), rule_(8) {
        if (const auto* sep = s.consumption.separable_kind()) {
            if (sep->spatial.size() == basis.grid_size()) {
                separable_spec_ = basis.analyze(sep->spatial.samples());
                temporal_ = &sep->temporal;
            }
        }
    }

    /// Fourier coefficients of gamma(., t).
    ModeSpectrum source_spectrum(double t) const {
        const double f = std::exp(-s_.technology.cumulative(t));
        if (separable_spec_) {
            ModeSpectrum spec = *separable_spec_;
            const double scale = f * temporal_->value(t);
            spec.mean() *= scale;
            for (std::size_t n = 1; n <= spec.mode_count(); ++n) {
                spec.cos_coeff(n) *= scale;
                spec.sin_coeff(n) *= scale;
            }
            return spec;
        }
        std::vector<double> row = s_.consumption.row(t, basis_.grid_size());
        for (double& v : row) v *= f;
        return basis_.analyze(row);
    }

    /// D_n = integral_a^b e^{-n^2 (b-s)} gamma_n(s) ds for every mode, adaptively.
    ModeSpectrum increment(double a, double b, double tol) const {
        return refine(a, b, panel(a, b), tol, max_depth_);
    }

private:
    ModeSpectrum panel(double a, double b) const {
        std::vector<double> nodes;
        rule_.panel_nodes(a, b, nodes);
        std::vector<ModeSpectrum> g;
        g.reserve(nodes.size());
        for (double t : nodes) g.push_back(source_spectrum(t));

        const std::size_t m = basis_.modes();
        ModeSpectrum out = ModeSpectrum::zeros(m);
        std::vector<double> w;
        rule_.weights(0.0, b - a, w);
        double mean = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) mean += w[k] * g[k].mean();
        out.mean() = mean;
        for (std::size_t n = 1; n <= m; ++n) {
            rule_.weights(static_cast<double>(n) * static_cast<double>(n), b - a, w);
            double ac = 0.0, as = 0.0;
            for (std::size_t k = 0; k < w.size(); ++k) {
                ac += w[k] * g[k].cos_coeff(n);
                as += w[k] * g[k].sin_coeff(n);
            }
            out.cos_coeff(n) = ac;
            out.sin_coeff(n) = as;
        }
        return out;
    }

    /// Splice increments over [a, m] and [m, b]: the left part decays by
    /// e^{-n^2 (b - m)} before the right part is added.
    static ModeSpectrum compose(const ModeSpectrum& left, const ModeSpectrum& right,
                                double span_right) {
        ModeSpectrum out = right;
        out.mean() += left.mean();
        for (std::size_t n = 1; n <= out.mode_count(); ++n) {
            const double decay =
                std::exp(-static_cast<double>(n) * static_cast<double>(n) * span_right);
            out.cos_coeff(n) += decay * left.cos_coeff(n);
            out.sin_coeff(n) += decay * left.sin_coeff(n);
        }
        return out;
    }

    ModeSpectrum refine(double a, double b, const ModeSpectrum& whole, double tol,
                        int depth) const {
        const double mid = 0.5 * (a + b);
        const ModeSpectrum left = panel(a, mid);
        const ModeSpectrum right = panel(mid, b);
        const ModeSpectrum split = compose(left, right, b - mid);

        double err = std::fabs(split.mean() - whole.mean());
        std::size_t worst = 0;
        for (std::size_t n = 1; n <= split.mode_count(); ++n) {
            const double ec = std::fabs(split.cos_coeff(n) - whole.cos_coeff(n));
            const double es = std::fabs(split.sin_coeff(n) - whole.sin_coeff(n));
            const double e = ec > es ? ec : es;
            if (e > err) {
                err = e;
                worst = n;
            }
        }
        if (err <= tol) return split;
        if (depth <= 0)
            throw NumericalError("Duhamel quadrature did not converge on [" +
                                 std::to_string(a) + ", " + std::to_string(b) +
                                 "], worst mode " + std::to_string(worst));
        return compose(refine(a, mid, left, 0.5 * tol, depth - 1),
                       refine(mid, b, right, 0.5 * tol, depth - 1), b - mid);
    }

    const Scenario& s_;
    const FourierBasis& basis_;
    ExpPanelRule rule_;
    std::optional<ModeSpectrum> separable_spec_;
    const ScalarPath* temporal_ = nullptr;
    static constexpr int max_depth_ = 30;
};

inline void advance_spectrum(ModeSpectrum& spec, const ModeSpectrum& inc, double span) {
    spec.mean() -= inc.mean();
    for (std::size_t n = 1; n <= spec.mode_count(); ++n) {
        const double decay = std::exp(-static_cast<double>(n) * static_cast<double>(n) * span);
        spec.cos_coeff(n) = decay * spec.cos_coeff(n) - inc.cos_coeff(n);
        spec.sin_coeff(n) = decay * spec.sin_coeff(n) - inc.sin_coeff(n);
    }
}

}  // namespace detail

/// Mode coefficients of the detrended solution h(., t) at an arbitrary time.
inline ModeSpectrum detrended_spectrum_at(const Scenario& s, double t) {
    if (t < 0.0) throw std::invalid_argument("solution requested at negative time");
    const FourierBasis basis(s.grid_size(), s.modes());
    ModeSpectrum spec = basis.analyze(s.initial_capital.samples());
    if (t == 0.0) return spec;
    const detail::DuhamelIntegrator duhamel(s, basis);
    detail::advance_spectrum(spec, duhamel.increment(0.0, t, s.tolerances.quadrature), t);
    return spec;
}

/// Detrended solution h(x, t) of h_t = h_xx - gamma with h(., 0) = k0,
/// sampled on the scenario grid at every mesh time. The first row repeats the
/// initial samples exactly; later rows live in the truncated mode space.
inline SpaceTimeField solve_detrended(const Scenario& s) {
    const FourierBasis basis(s.grid_size(), s.modes());
    const detail::DuhamelIntegrator duhamel(s, basis);

    SpaceTimeField field;
    field.grid_size = s.grid_size();
    field.times = s.time_mesh;
    field.producer = Producer::spectral;
    field.detrended = true;
    field.values.reserve(s.time_mesh.size());
    field.values.emplace_back(s.initial_capital.samples().begin(),
                              s.initial_capital.samples().end());

    ModeSpectrum spec = basis.analyze(s.initial_capital.samples());
    const double span_total = s.time_mesh.back() - s.time_mesh.front();
    for (std::size_t j = 1; j < s.time_mesh.size(); ++j) {
        const double a = s.time_mesh[j - 1];
        const double b = s.time_mesh[j];
        const double tol = s.tolerances.quadrature * (b - a) / span_total;
        detail::advance_spectrum(spec, duhamel.increment(a, b, tol), b - a);
        field.values.push_back(basis.synthesize(spec));
    }
    return field;
}

/// Full solution k(x, t) = e^{integral_0^t A} h(x, t).
inline SpaceTimeField solve(const Scenario& s) {
    SpaceTimeField field = solve_detrended(s);
    for (std::size_t j = 0; j < field.times.size(); ++j) {
        const double grow = std::exp(s.technology.cumulative(field.times[j]));
        for (double& v : field.values[j]) v *= grow;
    }
    field.detrended = false;
    return field;
}

/// Trade balance tau = -k_xx of one field row, computed spectrally
/// (tau_n = n^2 k_n). Its spatial mean is zero: flows are internal transfers.
inline SpatialProfile trade_balance(const SpaceTimeField& field, std::size_t t_index) {
    const auto row = field.row(t_index);
    const FourierBasis basis(field.grid_size, field.grid_size / 2 - 1);
    ModeSpectrum spec = basis.analyze(row);
    spec.mean() = 0.0;
    for (std::size_t n = 1; n <= spec.mode_count(); ++n) {
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        spec.cos_coeff(n) *= nn;
        spec.sin_coeff(n) *= nn;
    }
    return SpatialProfile(basis.synthesize(spec));
}

}  // namespace akgrowth
