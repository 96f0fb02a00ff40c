#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "waveprop/errors.hpp"
#include "waveprop/evolution.hpp"
#include "waveprop/lattice.hpp"

namespace waveprop {

/// Fraction of spectral power carried by evanescent components |k_x| > k0.
inline double evanescent_power_fraction(const Spectrum& spectrum, double k0) {
    double total = 0.0, evan = 0.0;
    const auto& ks = spectrum.lattice->k_samples;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const double p = std::norm(spectrum.values[j]);
        total += p;
        if (std::abs(ks[j]) > k0) evan += p;
    }
    return total > 0.0 ? evan / total : 0.0;
}

/// Exact angular-spectrum propagation from plane z = 0 to plane z.
/// Propagating components (|k_x| <= k0) pick up exp(i sqrt(k0^2-k_x^2) z);
/// evanescent ones decay as exp(-sqrt(k_x^2-k0^2) z).
inline Field propagate_exact(const Field& field0, double k0, double z) {
    if (!(k0 > 0.0)) throw config_error("propagate_exact: k0 must be positive");
    if (!(z >= 0.0)) throw config_error("propagate_exact: z must be non-negative");
    Spectrum s = forward(field0);
    const auto& ks = s.lattice->k_samples;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const double kx = ks[j];
        if (std::abs(kx) <= k0) {
            const double kz = std::sqrt((k0 - kx) * (k0 + kx));
            s.values[j] *= std::polar(1.0, kz * z);
        } else {
            const double kappa = std::sqrt((kx - k0) * (kx + k0));
            s.values[j] *= std::exp(-kappa * z);
        }
    }
    return inverse(s);
}

/// Fresnel (paraxial) propagation: phase exp(i (k0 - k_x^2/(2 k0)) z).
/// The overall carrier phase exp(i k0 z) is retained; it cancels in any
/// density comparison.
inline Field propagate_fresnel(const Field& field0, double k0, double z) {
    if (!(k0 > 0.0)) throw config_error("propagate_fresnel: k0 must be positive");
    if (!(z >= 0.0)) throw config_error("propagate_fresnel: z must be non-negative");
    Spectrum s = forward(field0);
    const auto& ks = s.lattice->k_samples;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const double kx = ks[j];
        s.values[j] *= std::polar(1.0, (k0 - kx * kx / (2.0 * k0)) * z);
    }
    return inverse(s);
}

struct FraunhoferResult {
    std::vector<double> density;     // peak-normalized
    bool condition_violated = false;  // quadratic aperture phase above threshold
    double aperture_phase = 0.0;      // k0 * a^2 / (2 z), a = support width
};

namespace detail {

// Full width of the region where |field| is above 1e-12 of its maximum.
inline double support_width(const Field& field) {
    const auto& lat = *field.lattice;
    double peak = 0.0;
    for (const auto& v : field.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (std::size_t j = 0; j < lat.n; ++j) {
        if (std::abs(field.values[j]) > 1e-12 * peak) {
            if (!any) { lo = lat.x_samples[j]; any = true; }
            hi = lat.x_samples[j];
        }
    }
    return hi - lo;
}

inline void peak_normalize(std::vector<double>& d) {
    const double peak = *std::max_element(d.begin(), d.end());
    if (!(peak > 0.0)) throw guard_error("density is identically zero");
    for (auto& v : d) v /= peak;
}

}  // namespace detail

/// Far-field pattern: the squared Fourier transform of the boundary field
/// read off at k_x = k0 x / z, peak-normalized.  Sets condition_violated when
/// the neglected quadratic phase k0 a^2/(2z) exceeds `threshold` radians.
inline FraunhoferResult propagate_fraunhofer(const Field& field0, double k0, double z,
                                             double threshold = 0.05) {
    if (!(k0 > 0.0)) throw config_error("propagate_fraunhofer: k0 must be positive");
    if (!(z > 0.0)) throw config_error("propagate_fraunhofer: z must be positive");
    const auto& lat = *field0.lattice;
    const Spectrum s = forward(field0);

    FraunhoferResult res;
    const double a = detail::support_width(field0);
    res.aperture_phase = k0 * a * a / (2.0 * z);
    res.condition_violated = res.aperture_phase > threshold;

    res.density.resize(lat.n);
    for (std::size_t j = 0; j < lat.n; ++j) {
        const double kx = k0 * lat.x_samples[j] / z;
        res.density[j] = std::norm(sample_spectrum(s, kx));
    }
    detail::peak_normalize(res.density);
    return res;
}

}  // namespace waveprop
