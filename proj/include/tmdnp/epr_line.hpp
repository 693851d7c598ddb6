#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tmdnp/constants.hpp"
#include "tmdnp/errors.hpp"

namespace tmdnp {

enum class LineShape { Rectangular, Gaussian };

inline const char* to_string(LineShape s) {
    return s == LineShape::Rectangular ? "rectangular" : "gaussian";
}

// Discretized electron spectral density g(omega) on a uniform grid of
// angular frequencies. Weights are normalized so that sum(g_i * dw) == 1.
class EprLine {
public:
    EprLine() = default;

    // Validating constructor for externally supplied samples. The grid must
    // be strictly increasing and uniform; weights nonnegative with at least
    // one positive entry. Weights are renormalized.
    static EprLine from_samples(std::vector<double> grid, std::vector<double> weights,
                                LineShape tag = LineShape::Rectangular) {
        if (grid.size() < 2 || grid.size() != weights.size())
            throw InvalidArgumentError("EprLine: need >= 2 matching grid/weight samples");
        const double dw = grid[1] - grid[0];
        if (!(dw > 0.0)) throw InvalidArgumentError("EprLine: grid must be increasing");
        const double span = grid.back() - grid.front();
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double step = grid[i] - grid[i - 1];
            if (std::abs(step - dw) > 1e-9 * std::abs(span))
                throw InvalidArgumentError("EprLine: grid must be uniform");
        }
        double mass = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw InvalidArgumentError("EprLine: negative weight");
            mass += w * dw;
        }
        if (!(mass > 0.0)) throw InvalidArgumentError("EprLine: zero total weight");
        for (double& w : weights) w /= mass;
        EprLine line;
        line.grid_ = std::move(grid);
        line.weights_ = std::move(weights);
        line.shape_ = tag;
        return line;
    }

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& weights() const { return weights_; }
    LineShape shape() const { return shape_; }
    std::size_t size() const { return grid_.size(); }
    double spacing() const { return grid_[1] - grid_[0]; }
    double center() const { return 0.5 * (grid_.front() + grid_.back()); }
    double span() const { return grid_.back() - grid_.front(); }

    bool contains(double omega) const {
        return omega >= grid_.front() && omega <= grid_.back();
    }

private:
    std::vector<double> grid_;     // rad/s, ascending, uniform
    std::vector<double> weights_;  // g(omega_i) >= 0, sum g dw = 1
    LineShape shape_ = LineShape::Rectangular;
};

// Per-frequency electron polarization on a line's grid.
struct ElectronProfile {
    EprLine line;
    std::vector<double> values;  // P_e(omega_i), each in [-1, 1]
};

inline ElectronProfile make_profile(EprLine line, std::vector<double> values) {
    if (values.size() != line.size())
        throw InvalidArgumentError("ElectronProfile: value count must match grid");
    for (double v : values)
        if (!(std::abs(v) <= 1.0)) throw InvalidArgumentError("ElectronProfile: |P_e| must be <= 1");
    return ElectronProfile{std::move(line), std::move(values)};
}

// Parametric line factory. `width` is the full width of a rectangular line,
// or the FWHM of a gaussian one; a gaussian grid spans +/- 3 sigma and the
// truncated tail mass is renormalized into the window. n_points must be odd
// so the center sits on a grid point.
inline EprLine make_epr_line(LineShape shape, double center, double width, std::size_t n_points) {
    if (!(width > 0.0)) throw InvalidArgumentError("make_epr_line: width must be > 0");
    if (n_points < 3) throw InvalidArgumentError("make_epr_line: need at least 3 points");
    if (n_points % 2 == 0) throw InvalidArgumentError("make_epr_line: point count must be odd");

    const std::size_t m = (n_points - 1) / 2;
    double half_span;
    if (shape == LineShape::Rectangular) {
        half_span = width / 2.0;
    } else {
        const double sigma = width / (2.0 * std::sqrt(2.0 * std::log(2.0)));
        half_span = 3.0 * sigma;
    }
    const double dw = half_span / static_cast<double>(m);

    std::vector<double> grid(n_points), weights(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double offset = (static_cast<double>(i) - static_cast<double>(m)) * dw;
        grid[i] = center + offset;
        if (shape == LineShape::Rectangular) {
            weights[i] = 1.0;
        } else {
            const double sigma = width / (2.0 * std::sqrt(2.0 * std::log(2.0)));
            weights[i] = std::exp(-0.5 * (offset / sigma) * (offset / sigma));
        }
    }
    return EprLine::from_samples(std::move(grid), std::move(weights), shape);
}

// Same, but the grid step is locked to an integer fraction of omega_n so the
// nuclear shift in the polarization integral is an exact index offset. The
// realized width is the nearest even multiple of the step (off by at most one
// step from the request).
inline EprLine make_epr_line_snapped(LineShape shape, double center, double width,
                                     double omega_n, std::size_t target_points) {
    if (!(width > 0.0)) throw InvalidArgumentError("make_epr_line_snapped: width must be > 0");
    if (!(omega_n > 0.0)) throw InvalidArgumentError("make_epr_line_snapped: omega_n must be > 0");
    if (target_points < 3) throw InvalidArgumentError("make_epr_line_snapped: need at least 3 points");

    double full_span = width;
    if (shape == LineShape::Gaussian)
        full_span = 6.0 * width / (2.0 * std::sqrt(2.0 * std::log(2.0)));

    // Subdivisions of omega_n giving roughly the requested resolution.
    const double dw_target = full_span / static_cast<double>(target_points - 1);
    auto subdiv = static_cast<std::size_t>(std::llround(omega_n / dw_target));
    if (subdiv == 0) subdiv = 1;
    const double dw = omega_n / static_cast<double>(subdiv);

    auto half_points = static_cast<std::size_t>(std::llround(full_span / (2.0 * dw)));
    if (half_points == 0) half_points = 1;
    const std::size_t n = 2 * half_points + 1;
    const double realized_width =
        shape == LineShape::Rectangular
            ? 2.0 * static_cast<double>(half_points) * dw
            : 2.0 * static_cast<double>(half_points) * dw *
                  (2.0 * std::sqrt(2.0 * std::log(2.0))) / 6.0;
    return make_epr_line(shape, center, realized_width, n);
}

// Electron polarization in thermal equilibrium with the lattice,
// P0(omega) = tanh(hbar*omega / (2 kB T)) evaluated at the stored (absolute)
// grid frequencies.
inline ElectronProfile thermal_electron_profile(const EprLine& line, double temperature_k) {
    if (!(temperature_k > 0.0))
        throw InvalidArgumentError("thermal_electron_profile: temperature must be > 0");
    std::vector<double> values(line.size());
    for (std::size_t i = 0; i < line.size(); ++i)
        values[i] = std::tanh(zeeman_temperature_scale(line.grid()[i]) / temperature_k);
    return ElectronProfile{line, std::move(values)};
}

}  // namespace tmdnp
