#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace akgrowth {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    std::size_t points = 0;
};

/// Ordinary least-squares line through (x_i, y_i). Returns nullopt with
/// fewer than two points or a degenerate x spread.
inline std::optional<LineFit> fit_line(const std::vector<double>& xs,
                                       const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) return std::nullopt;
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
    fit.points = n;
    return fit;
}

}  // namespace akgrowth
