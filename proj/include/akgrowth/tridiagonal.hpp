#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "akgrowth/errors.hpp"

namespace akgrowth {

/// Thomas algorithm for a tridiagonal system
///   sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i]
/// (sub[0] and sup[n-1] unused). No pivoting; throws on a vanishing pivot.
inline std::vector<double> thomas_solve(std::span<const double> sub, std::span<const double> diag,
                                        std::span<const double> sup, std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (sub.size() != n || sup.size() != n || rhs.size() != n)
        throw std::invalid_argument("tridiagonal bands must have equal length");
    if (n == 0) return {};

    std::vector<double> scratch(n);
    std::vector<double> x(n);
    double pivot = diag[0];
    if (pivot == 0.0) throw NumericalError("tridiagonal solve: zero pivot at row 0");
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        scratch[i] = sup[i - 1] / pivot;
        pivot = diag[i] - sub[i] * scratch[i];
        if (pivot == 0.0)
            throw NumericalError("tridiagonal solve: zero pivot at row " + std::to_string(i));
        x[i] = (rhs[i] - sub[i] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= scratch[i + 1] * x[i + 1];
    return x;
}

/// Cyclic tridiagonal solve via the Sherman-Morrison rank-one update:
/// the matrix is tridiagonal plus corner entries top_right at (0, n-1) and
/// bottom_left at (n-1, 0), as arises from periodic boundary conditions.
inline std::vector<double> cyclic_tridiagonal_solve(std::span<const double> sub,
                                                    std::span<const double> diag,
                                                    std::span<const double> sup,
                                                    std::span<const double> rhs,
                                                    double bottom_left, double top_right) {
    const std::size_t n = diag.size();
    if (n < 3) throw std::invalid_argument("cyclic solve needs at least 3 unknowns");

    const double gamma = -diag[0];
    std::vector<double> d(diag.begin(), diag.end());
    d[0] -= gamma;
    d[n - 1] -= top_right * bottom_left / gamma;

    std::vector<double> y = thomas_solve(sub, d, sup, rhs);

    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = bottom_left;
    std::vector<double> q = thomas_solve(sub, d, sup, u);

    // v = (1, 0, ..., 0, top_right / gamma)
    const double vy = y[0] + top_right / gamma * y[n - 1];
    const double vq = q[0] + top_right / gamma * q[n - 1];
    const double denom = 1.0 + vq;
    if (denom == 0.0) throw NumericalError("cyclic tridiagonal solve: singular update");
    const double factor = vy / denom;
    for (std::size_t i = 0; i < n; ++i) y[i] -= factor * q[i];
    return y;
}

}  // namespace akgrowth
