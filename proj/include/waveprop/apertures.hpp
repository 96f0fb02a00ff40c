#pragma once

#include <cmath>
#include <string>

#include "waveprop/errors.hpp"
#include "waveprop/field_io.hpp"
#include "waveprop/lattice.hpp"

namespace waveprop {

/// Builders for the initial / boundary wave function at t = 0 (z = 0).
struct ApertureSpec {
    enum class Kind { Rect, DoubleSlit, Gaussian, FromFile };

    Kind kind = Kind::Rect;
    double a = 1.0;         // Rect: full slit width
    double d = 2.0;         // DoubleSlit: slit separation (center to center)
    double w = 0.1;         // DoubleSlit: individual slit width
    double sigma = 0.5;     // Gaussian: width
    double x_center = 0.0;  // Gaussian: center
    std::string path;       // FromFile: CSV path
};

namespace detail {

// Support must fit within the lattice with a margin of at least 25% of the
// extent on each side, i.e. inside [-L/4, L/4].
inline void check_margin(const Lattice& lat, double lo, double hi, const char* what) {
    const double quarter = lat.extent() / 4.0;
    if (lo < -quarter || hi > quarter)
        throw config_error(std::string("aperture: ") + what +
                           " support exceeds the 25% margin rule");
}

// Indicator of [center - width/2, center + width/2].  Edges landing exactly
// on a grid point are included on both sides so that centered apertures stay
// even in x.
inline bool in_window(double x, double center, double width) {
    const double eps = 1e-12 * (std::abs(center) + width);
    return std::abs(x - center) <= width / 2.0 + eps;
}

}  // namespace detail

inline Field build(const ApertureSpec& spec, const LatticePtr& lattice) {
    const auto& lat = *lattice;
    Field field{lattice, std::vector<cplx>(lat.n, cplx{0.0, 0.0})};

    switch (spec.kind) {
        case ApertureSpec::Kind::Rect: {
            if (!(spec.a > 0.0)) throw config_error("aperture: rect width a must be positive");
            detail::check_margin(lat, -spec.a / 2.0, spec.a / 2.0, "rect");
            for (std::size_t j = 0; j < lat.n; ++j)
                if (detail::in_window(lat.x_samples[j], 0.0, spec.a))
                    field.values[j] = 1.0;
            break;
        }
        case ApertureSpec::Kind::DoubleSlit: {
            if (!(spec.w > 0.0 && spec.d > spec.w))
                throw config_error("aperture: double slit requires d > w > 0");
            if (spec.w < 2.0 * lat.dx)
                throw config_error("aperture: slit width w < 2*dx is unresolvable");
            const double half = (spec.d + spec.w) / 2.0;
            detail::check_margin(lat, -half, half, "double slit");
            for (std::size_t j = 0; j < lat.n; ++j) {
                const double x = lat.x_samples[j];
                if (detail::in_window(x, -spec.d / 2.0, spec.w) ||
                    detail::in_window(x, spec.d / 2.0, spec.w))
                    field.values[j] = 1.0;
            }
            break;
        }
        case ApertureSpec::Kind::Gaussian: {
            if (!(spec.sigma > 0.0)) throw config_error("aperture: sigma must be positive");
            detail::check_margin(lat, spec.x_center - 4.0 * spec.sigma,
                                 spec.x_center + 4.0 * spec.sigma, "gaussian");
            for (std::size_t j = 0; j < lat.n; ++j) {
                const double u = lat.x_samples[j] - spec.x_center;
                field.values[j] = std::exp(-u * u / (4.0 * spec.sigma * spec.sigma));
            }
            break;
        }
        case ApertureSpec::Kind::FromFile:
            // Loaded as-is; normalization is the caller's decision.
            return load_field_csv(spec.path, lattice);
    }
    return normalize(field);
}

/// Alias matching the CSV contract of field_io.
inline Field load_field(const std::string& path, const LatticePtr& lattice) {
    return load_field_csv(path, lattice);
}

}  // namespace waveprop
