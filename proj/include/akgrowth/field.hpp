#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "akgrowth/technology.hpp"

namespace akgrowth {

enum class Producer { spectral, finite_difference };

/// Solution snapshots k(x_i, t_j) (or the detrended h when detrended is set)
/// over a time mesh, tagged with the solver that produced them.
struct SpaceTimeField {
    std::size_t grid_size = 0;
    std::vector<double> times;
    std::vector<std::vector<double>> values;  // values[j][i]
    Producer producer = Producer::spectral;
    bool detrended = false;

    std::span<const double> row(std::size_t j) const { return values.at(j); }

    double min_value() const {
        double m = values.at(0).at(0);
        for (const auto& r : values)
            for (double v : r)
                if (v < m) m = v;
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& r : values)
            for (double v : r)
                if (std::fabs(v) > m) m = std::fabs(v);
        return m;
    }
};

/// Divide each row by the growth factor exp(integral of A), turning a raw
/// capital field into the detrended one. No-op copy when already detrended.
inline SpaceTimeField detrend(const SpaceTimeField& field, const TechnologyPath& tech) {
    SpaceTimeField out = field;
    if (field.detrended) return out;
    for (std::size_t j = 0; j < out.times.size(); ++j) {
        const double f = std::exp(-tech.cumulative(out.times[j]));
        for (double& v : out.values[j]) v *= f;
    }
    out.detrended = true;
    return out;
}

/// Largest pointwise difference between two fields on the same mesh and grid.
inline double sup_difference(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid_size != b.grid_size || a.times.size() != b.times.size())
        throw std::invalid_argument("fields are not comparable (mesh or grid mismatch)");
    double m = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j)
        for (std::size_t i = 0; i < a.grid_size; ++i) {
            const double d = std::fabs(a.values[j][i] - b.values[j][i]);
            if (d > m) m = d;
        }
    return m;
}

}  // namespace akgrowth
