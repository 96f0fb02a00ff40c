#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "waveprop/errors.hpp"

namespace waveprop {

struct PhysicalConstants {
    double hbar = 1.0;
    double m = 1.0;
    double c = 1.0;
};

inline void validate(const PhysicalConstants& pc) {
    if (!(pc.hbar > 0.0 && pc.m > 0.0 && pc.c > 0.0))
        throw config_error("constants: hbar, m, c must all be positive");
}

/// The three wave families.  Paraxial variants use the quadratic expansion
/// of the longitudinal wavenumber; Exact variants keep the full square root
/// (with k_z held at the carrier k0) and exist to measure the size of the
/// Fresnel approximation error.
enum class WaveFamily {
    DeBroglie,
    ElectromagneticParaxial,
    ElectromagneticExact,
    KleinGordonParaxial,
    KleinGordonExact,
};

struct DispersionSpec {
    WaveFamily family = WaveFamily::DeBroglie;
    PhysicalConstants constants{};
    std::optional<double> k0{};  // carrier wavenumber along z
};

inline double require_k0(const DispersionSpec& spec) {
    if (!spec.k0)
        throw config_error("dispersion: k0 is required for this operation");
    if (!(*spec.k0 > 0.0))
        throw config_error("dispersion: k0 must be positive");
    return *spec.k0;
}

inline WaveFamily paraxial_family(WaveFamily f) {
    switch (f) {
        case WaveFamily::ElectromagneticExact: return WaveFamily::ElectromagneticParaxial;
        case WaveFamily::KleinGordonExact: return WaveFamily::KleinGordonParaxial;
        default: return f;
    }
}

namespace detail {

// sqrt(k0^2 + (m c / hbar)^2): the Klein-Gordon effective longitudinal
// wavenumber, which reduces to k0 in the massless (electromagnetic) limit.
inline double kg_keff(const PhysicalConstants& pc, double k0) {
    const double mu = pc.m * pc.c / pc.hbar;
    return std::hypot(k0, mu);
}

}  // namespace detail

/// Carrier frequency omega0(k0) of the longitudinal wave.
inline double omega_longitudinal(const DispersionSpec& spec, double k0) {
    const auto& pc = spec.constants;
    switch (paraxial_family(spec.family)) {
        case WaveFamily::DeBroglie:
            return pc.hbar * k0 * k0 / (2.0 * pc.m);
        case WaveFamily::ElectromagneticParaxial:
            return pc.c * k0;
        default:  // Klein-Gordon
            return pc.c * detail::kg_keff(pc, k0);
    }
}

/// Transverse dispersion law omega(k_x) driving the spreading of the
/// transverse packet.
inline double omega_transverse(const DispersionSpec& spec, double kx) {
    const auto& pc = spec.constants;
    switch (spec.family) {
        case WaveFamily::DeBroglie:
            return pc.hbar * kx * kx / (2.0 * pc.m);
        case WaveFamily::ElectromagneticParaxial: {
            const double k0 = require_k0(spec);
            return pc.c * (k0 + kx * kx / (2.0 * k0));
        }
        case WaveFamily::ElectromagneticExact: {
            const double k0 = require_k0(spec);
            return pc.c * std::hypot(k0, kx);
        }
        case WaveFamily::KleinGordonParaxial: {
            const double keff = detail::kg_keff(pc, require_k0(spec));
            return pc.c * (keff + kx * kx / (2.0 * keff));
        }
        case WaveFamily::KleinGordonExact: {
            const double keff = detail::kg_keff(pc, require_k0(spec));
            return pc.c * std::hypot(keff, kx);
        }
    }
    throw config_error("dispersion: unknown family");
}

/// Envelope speed d(omega0)/d(k0) at the carrier.
inline double group_velocity(const DispersionSpec& spec) {
    const auto& pc = spec.constants;
    const double k0 = require_k0(spec);
    switch (paraxial_family(spec.family)) {
        case WaveFamily::DeBroglie:
            return pc.hbar * k0 / pc.m;
        case WaveFamily::ElectromagneticParaxial:
            return pc.c;
        default:  // Klein-Gordon: c*k0/sqrt(k0^2 + m^2 c^2/hbar^2) = p c^2 / E
            return pc.c * k0 / detail::kg_keff(pc, k0);
    }
}

/// Time for the envelope to cover a distance z: t = z / v_g.
inline double transit_time(const DispersionSpec& spec, double z) {
    if (!(z >= 0.0))
        throw config_error("transit_time: z must be non-negative");
    return z / group_velocity(spec);
}

inline std::string family_name(WaveFamily f) {
    switch (f) {
        case WaveFamily::DeBroglie: return "de_broglie";
        case WaveFamily::ElectromagneticParaxial: return "em_paraxial";
        case WaveFamily::ElectromagneticExact: return "em_exact";
        case WaveFamily::KleinGordonParaxial: return "kg_paraxial";
        case WaveFamily::KleinGordonExact: return "kg_exact";
    }
    return "unknown";
}

inline WaveFamily family_from_name(const std::string& s) {
    if (s == "de_broglie") return WaveFamily::DeBroglie;
    if (s == "em_paraxial") return WaveFamily::ElectromagneticParaxial;
    if (s == "em_exact") return WaveFamily::ElectromagneticExact;
    if (s == "kg_paraxial") return WaveFamily::KleinGordonParaxial;
    if (s == "kg_exact") return WaveFamily::KleinGordonExact;
    throw config_error("dispersion.family: unknown family '" + s + "'");
}

}  // namespace waveprop
