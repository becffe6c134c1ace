#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "akgrowth/circle.hpp"
#include "akgrowth/errors.hpp"
#include "akgrowth/field.hpp"
#include "akgrowth/fourier.hpp"
#include "akgrowth/scenario.hpp"
#include "akgrowth/tridiagonal.hpp"

namespace akgrowth {

/// Discretization of the theta-scheme oracle. theta = 1/2 is Crank-Nicolson;
/// the diffusion part is unconditionally stable for theta >= 1/2, while
/// smaller theta requires dt <= dx^2 / 2.
struct FdConfig {
    double dt = 1e-3;
    double theta = 0.5;
    std::size_t grid_size = 0;  // 0 = use the scenario grid

    static FdConfig from_scenario(const Scenario& s) {
        FdConfig cfg;
        cfg.dt = s.tolerances.fd_dt;
        if (s.tolerances.fd_dx > 0.0) {
            const double n = std::ceil(two_pi / s.tolerances.fd_dx);
            cfg.grid_size = n < 4.0 ? 4 : static_cast<std::size_t>(n);
        }
        return cfg;
    }
};

/// Independent ground truth: solve k_t = k_xx + A(t) k - c directly with a
/// theta-weighted step and periodic second differences,
///
///   (I - theta dt L_{t+dt}) k_new = (I + (1-theta) dt L_t) k_old - dt c(., t + theta dt),
///
/// where L_t = D2 + A(t) I. Each step is a cyclic tridiagonal solve; the
/// walk lands exactly on every scenario mesh time.
inline SpaceTimeField solve_fd(const Scenario& s, FdConfig cfg = {}) {
    const std::size_t n = cfg.grid_size == 0 ? s.grid_size() : cfg.grid_size;
    const double dx = two_pi / static_cast<double>(n);
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("fd solver requires dt > 0");
    if (cfg.theta < 0.0 || cfg.theta > 1.0)
        throw std::invalid_argument("fd solver requires theta in [0, 1]");
    if (cfg.theta < 0.5 && cfg.dt > 0.5 * dx * dx)
        throw std::invalid_argument("fd solver unstable: theta < 1/2 needs dt <= dx^2/2 (dt " +
                                    std::to_string(cfg.dt) + ", dx^2/2 " +
                                    std::to_string(0.5 * dx * dx) + ")");

    // Initial data on the oracle grid; band-limited trigonometric interpolation
    // when the grids differ.
    std::vector<double> k;
    if (n == s.grid_size()) {
        k.assign(s.initial_capital.samples().begin(), s.initial_capital.samples().end());
    } else {
        const std::size_t m = std::min(s.modes(), n / 2 - 1);
        k = FourierBasis(n, m).synthesize(analyze(s.initial_capital, m));
    }

    SpaceTimeField field;
    field.grid_size = n;
    field.times = s.time_mesh;
    field.producer = Producer::finite_difference;
    field.detrended = false;
    field.values.reserve(s.time_mesh.size());
    field.values.push_back(k);

    const double inv_dx2 = 1.0 / (dx * dx);
    const double theta = cfg.theta;
    std::vector<double> sub(n), diag(n), sup(n), rhs(n);

    std::size_t step_index = 0;
    for (std::size_t j = 1; j < s.time_mesh.size(); ++j) {
        const double t0 = s.time_mesh[j - 1];
        const double t1 = s.time_mesh[j];
        const std::size_t n_sub =
            static_cast<std::size_t>(std::ceil((t1 - t0) / cfg.dt - 1e-12));
        const std::size_t steps = n_sub == 0 ? 1 : n_sub;
        const double h = (t1 - t0) / static_cast<double>(steps);

        for (std::size_t q = 0; q < steps; ++q, ++step_index) {
            const double t = t0 + h * static_cast<double>(q);
            const double a_old = s.technology.rate(t);
            const double a_new = s.technology.rate(t + h);
            const std::vector<double> source = s.consumption.row(t + theta * h, n);

            const double r = h * inv_dx2;
            const double off = -theta * r;
            for (std::size_t i = 0; i < n; ++i) {
                sub[i] = off;
                sup[i] = off;
                diag[i] = 1.0 + 2.0 * theta * r - theta * h * a_new;
                const double lap = (k[(i + n - 1) % n] - 2.0 * k[i] + k[(i + 1) % n]) * inv_dx2;
                rhs[i] = k[i] + (1.0 - theta) * h * (lap + a_old * k[i]) - h * source[i];
            }
            if (theta == 0.0) {
                k = rhs;
            } else {
                try {
                    k = cyclic_tridiagonal_solve(sub, diag, sup, rhs, off, off);
                } catch (const NumericalError& e) {
                    throw NumericalError("fd solver breakdown at step " +
                                         std::to_string(step_index) + ": " + e.what());
                }
            }
        }
        field.values.push_back(k);
    }
    return field;
}

}  // namespace akgrowth
