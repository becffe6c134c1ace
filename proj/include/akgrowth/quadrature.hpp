#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "akgrowth/errors.hpp"

namespace akgrowth {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Compute the q-point Gauss-Legendre rule by Newton iteration on P_q.
/// Nodes are the roots of the Legendre polynomial, weights 2/((1-x^2) P_q'(x)^2).
inline GaussLegendreRule make_gauss_legendre(std::size_t q) {
    GaussLegendreRule rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);
    const double n = static_cast<double>(q);
    for (std::size_t k = 0; k < q; ++k) {
        // Chebyshev-based initial guess, then Newton.
        double x = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= q; ++j) {
                double jj = static_cast<double>(j);
                double p2 = ((2.0 * jj - 1.0) * x * p1 - (jj - 1.0) * p0) / jj;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (std::size_t j = 2; j <= q; ++j) {
            double jj = static_cast<double>(j);
            double p2 = ((2.0 * jj - 1.0) * x * p1 - (jj - 1.0) * p0) / jj;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[k] = x;
        rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

inline const GaussLegendreRule& gauss_legendre(std::size_t q) {
    static const std::array<GaussLegendreRule, 17> cache = [] {
        std::array<GaussLegendreRule, 17> rules;
        for (std::size_t i = 1; i < rules.size(); ++i) rules[i] = make_gauss_legendre(i);
        return rules;
    }();
    return cache.at(q);
}

namespace detail {

template <typename F>
double gl_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return half * sum;
}

template <typename F>
double adaptive_gl(F&& f, double a, double b, double whole, double tol,
                   const GaussLegendreRule& rule, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl_panel(f, a, mid, rule);
    const double right = gl_panel(f, mid, b, rule);
    const double split = left + right;
    if (std::fabs(split - whole) <= tol || (b - a) < 1e-14 * std::fabs(b))
        return split;
    if (depth <= 0)
        throw NumericalError("adaptive quadrature did not converge on [" + std::to_string(a) +
                             ", " + std::to_string(b) + "]");
    return adaptive_gl(f, a, mid, left, 0.5 * tol, rule, depth - 1) +
           adaptive_gl(f, mid, b, right, 0.5 * tol, rule, depth - 1);
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre integration of f over [a, b] to absolute
/// tolerance tol. Throws NumericalError when the subdivision budget is exhausted.
template <typename F>
double adaptive_integrate(F&& f, double a, double b, double tol, int max_depth = 48) {
    if (a == b) return 0.0;
    const GaussLegendreRule& rule = gauss_legendre(12);
    const double whole = detail::gl_panel(f, a, b, rule);
    return detail::adaptive_gl(f, a, b, whole, tol, rule, max_depth);
}

// ---------------------------------------------------------------------------
// Exponentially weighted panel rule for Duhamel integrals.
//
// Computes  I(z) = integral_a^b exp(-z (b-s)) g(s) ds  from samples of g at
// Gauss-Legendre nodes of the panel, exactly for g polynomial of degree < q.
// The exponential factor is treated analytically through its moments, so the
// rule stays accurate for arbitrarily large z (stiff modes).
// ---------------------------------------------------------------------------

/// Moments mu_m(w) = integral_0^1 exp(-w (1-u)) u^m du for m = 0..count-1, w >= 0.
inline void exp_moments(double w, std::size_t count, double* mu) {
    if (w <= 4.0) {
        // Alternating series mu_m = sum_k (-w)^k m! / (m+k+1)!; converges fast
        // for small w and avoids the cancellation of the recursion there.
        for (std::size_t m = 0; m < count; ++m) {
            double term = 1.0 / static_cast<double>(m + 1);
            double sum = term;
            for (std::size_t k = 1; k < 60; ++k) {
                term *= -w / static_cast<double>(m + k + 1);
                sum += term;
                if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
            }
            mu[m] = sum;
        }
        return;
    }
    // Forward recursion mu_m = (1 - m mu_{m-1}) / w, stable for w > m.
    mu[0] = -std::expm1(-w) / w;
    for (std::size_t m = 1; m < count; ++m)
        mu[m] = (1.0 - static_cast<double>(m) * mu[m - 1]) / w;
}

/// Fixed panel shape: q Gauss-Legendre nodes mapped to (0,1) plus the monomial
/// coefficients of the Lagrange cardinal polynomials on those nodes.
class ExpPanelRule {
public:
    explicit ExpPanelRule(std::size_t q) : q_(q), nodes01_(q), lagrange_mono_(q) {
        const GaussLegendreRule& gl = gauss_legendre(q);
        for (std::size_t k = 0; k < q; ++k) nodes01_[k] = 0.5 * (1.0 + gl.nodes[k]);
        for (std::size_t k = 0; k < q; ++k) {
            // Numerator product prod_{j != k} (u - u_j), then scale by the
            // denominator prod_{j != k} (u_k - u_j).
            std::vector<double> poly{1.0};
            double denom = 1.0;
            for (std::size_t j = 0; j < q; ++j) {
                if (j == k) continue;
                denom *= nodes01_[k] - nodes01_[j];
                std::vector<double> next(poly.size() + 1, 0.0);
                for (std::size_t m = 0; m < poly.size(); ++m) {
                    next[m] += poly[m] * (-nodes01_[j]);
                    next[m + 1] += poly[m];
                }
                poly = std::move(next);
            }
            lagrange_mono_[k].resize(q);
            for (std::size_t m = 0; m < q; ++m) lagrange_mono_[k][m] = poly[m] / denom;
        }
    }

    std::size_t size() const { return q_; }

    /// Node locations for the panel [a, b].
    void panel_nodes(double a, double b, std::vector<double>& out) const {
        out.resize(q_);
        for (std::size_t k = 0; k < q_; ++k) out[k] = a + (b - a) * nodes01_[k];
    }

    /// Weights w_k(z) with  I(z) ~= sum_k w_k g(s_k)  on the panel of length delta.
    void weights(double z, double delta, std::vector<double>& out) const {
        out.resize(q_);
        double mu[32];
        exp_moments(z * delta, q_, mu);
        for (std::size_t k = 0; k < q_; ++k) {
            double acc = 0.0;
            for (std::size_t m = 0; m < q_; ++m) acc += lagrange_mono_[k][m] * mu[m];
            out[k] = delta * acc;
        }
    }

private:
    std::size_t q_;
    std::vector<double> nodes01_;
    std::vector<std::vector<double>> lagrange_mono_;
};

}  // namespace akgrowth
