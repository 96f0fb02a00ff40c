#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "waveprop/dispersion.hpp"
#include "waveprop/errors.hpp"
#include "waveprop/lattice.hpp"

namespace waveprop {

/// Single-slit diffraction oracle: peak-normalized sin^2(u)/u^2 with
/// u = (m a / (2 hbar t)) x.  The removable singularity at u = 0 takes its
/// analytic limit 1.
inline std::vector<double> sinc2_pattern(const LatticePtr& lattice, double a,
                                         const PhysicalConstants& pc, double t) {
    if (!(a > 0.0 && t > 0.0))
        throw config_error("sinc2_pattern: a and t must be positive");
    const double scale = pc.m * a / (2.0 * pc.hbar * t);
    std::vector<double> d(lattice->n);
    for (std::size_t j = 0; j < lattice->n; ++j) {
        const double u = scale * lattice->x_samples[j];
        if (u == 0.0) {
            d[j] = 1.0;
        } else {
            const double s = std::sin(u) / u;
            d[j] = s * s;
        }
    }
    return d;
}

/// Two-slit interference oracle: cos^2((m d / (2 hbar t)) x).
inline std::vector<double> cos2_pattern(const LatticePtr& lattice, double slit_sep,
                                        const PhysicalConstants& pc, double t) {
    if (!(slit_sep > 0.0 && t > 0.0))
        throw config_error("cos2_pattern: d and t must be positive");
    const double scale = pc.m * slit_sep / (2.0 * pc.hbar * t);
    std::vector<double> out(lattice->n);
    for (std::size_t j = 0; j < lattice->n; ++j) {
        const double c = std::cos(scale * lattice->x_samples[j]);
        out[j] = c * c;
    }
    return out;
}

/// Geometric features of a diffraction/interference pattern.
struct PatternFeatures {
    std::vector<double> maxima_positions;  // strictly ascending
    std::vector<double> minima_positions;  // strictly ascending
    double fringe_spacing = 0.0;           // mean spacing of adjacent maxima
    double central_peak_width = 0.0;       // minimum-to-minimum around the global peak
};

/// Locate interior extrema by sign change of the discrete derivative and
/// refine each to sub-grid accuracy with a 3-point parabola.
inline PatternFeatures extract_features(const std::vector<double>& density,
                                        const LatticePtr& lattice) {
    const auto& lat = *lattice;
    if (density.size() != lat.n)
        throw config_error("extract_features: density length does not match lattice");
    if (std::all_of(density.begin(), density.end(), [](double v) { return v == 0.0; }))
        throw config_error("extract_features: all-zero density");

    PatternFeatures feat;
    const auto refine = [&](std::size_t i) {
        const double dm = density[i - 1], d0 = density[i], dp = density[i + 1];
        const double denom = dm - 2.0 * d0 + dp;
        double delta = 0.0;
        if (denom != 0.0) delta = 0.5 * (dm - dp) / denom;
        delta = std::clamp(delta, -0.5, 0.5);
        return lat.x_samples[i] + delta * lat.dx;
    };

    for (std::size_t i = 1; i + 1 < lat.n; ++i) {
        const double left = density[i] - density[i - 1];
        const double right = density[i + 1] - density[i];
        if (left > 0.0 && right < 0.0)
            feat.maxima_positions.push_back(refine(i));
        else if (left < 0.0 && right > 0.0)
            feat.minima_positions.push_back(refine(i));
    }

    if (feat.maxima_positions.size() >= 2) {
        const double span = feat.maxima_positions.back() - feat.maxima_positions.front();
        feat.fringe_spacing = span / static_cast<double>(feat.maxima_positions.size() - 1);
    }

    // Width of the central lobe: nearest minima bracketing the global maximum.
    const auto it = std::max_element(density.begin(), density.end());
    const double x_peak = lat.x_samples[static_cast<std::size_t>(it - density.begin())];
    double left = 0.0, right = 0.0;
    bool have_left = false, have_right = false;
    for (const double xm : feat.minima_positions) {
        if (xm < x_peak) { left = xm; have_left = true; }
        if (xm > x_peak && !have_right) { right = xm; have_right = true; }
    }
    if (have_left && have_right) feat.central_peak_width = right - left;
    return feat;
}

}  // namespace waveprop
