#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "akgrowth/errors.hpp"
#include "akgrowth/fourier.hpp"

namespace akgrowth {

/// One evaluation of the heat kernel on the circle, with a certified bound on
/// the truncation error of the eigenmode series.
struct KernelEvaluation {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
};

/// Closed-form majorant of the n >= 1 part of the kernel series,
/// sum_{n>=1} e^{-n^2 t} <= e^{-t} / (1 - e^{-2t}). Monotone decreasing in t.
inline double kernel_decay_bound(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("kernel decay bound requires t > 0");
    return std::exp(-t) / (-std::expm1(-2.0 * t));
}

/// Heat kernel on the circle,
///
///   G(x, y, t) = 1/2 + sum_{n>=1} e^{-n^2 t} cos(n (x - y)),
///
/// normalized so that (1/pi) integral_T G(x,y,t) f(y) dy is the heat
/// semigroup acting on f (identity as t -> 0, spatial mean as t -> infinity).
/// The series is truncated once the geometric tail majorant
/// e^{-(M+1)^2 t} / (1 - e^{-(2M+3) t}) drops below tol.
inline KernelEvaluation kernel(double x, double y, double t, double tol = 1e-12) {
    if (!(t > 0.0))
        throw std::invalid_argument("kernel requires t > 0 (distributional at t = 0)");
    if (!(tol > 0.0)) throw std::invalid_argument("kernel tolerance must be positive");

    const double d = x - y;
    KernelEvaluation ev;
    ev.value = 0.5;
    double tail = kernel_decay_bound(t);  // tail past M = 0
    std::size_t m = 0;
    while (tail > tol) {
        ++m;
        const double mm = static_cast<double>(m);
        ev.value += std::exp(-mm * mm * t) * std::cos(mm * d);
        // sum_{n>M} e^{-n^2 t} <= e^{-(M+1)^2 t} / (1 - e^{-(2M+3) t})
        tail = std::exp(-(mm + 1.0) * (mm + 1.0) * t) / (-std::expm1(-(2.0 * mm + 3.0) * t));
        if (m > 2000000)
            throw NumericalError("kernel series will not reach the tolerance at this t");
    }
    ev.tail_bound = tail;
    ev.terms_used = m;
    return ev;
}

/// Mode-wise action of the heat semigroup over a time span t >= 0:
/// the mean is unchanged and mode n is damped by e^{-n^2 t}.
inline ModeSpectrum smoothed_initial(const ModeSpectrum& spec, double t) {
    if (t < 0.0) throw std::invalid_argument("smoothed_initial requires t >= 0");
    ModeSpectrum out = spec;
    for (std::size_t n = 1; n <= out.mode_count(); ++n) {
        const double damp = std::exp(-static_cast<double>(n) * static_cast<double>(n) * t);
        out.cos_coeff(n) *= damp;
        out.sin_coeff(n) *= damp;
    }
    return out;
}

}  // namespace akgrowth
