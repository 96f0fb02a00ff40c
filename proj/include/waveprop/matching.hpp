#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "waveprop/apertures.hpp"
#include "waveprop/dispersion.hpp"
#include "waveprop/errors.hpp"
#include "waveprop/evolution.hpp"
#include "waveprop/lattice.hpp"
#include "waveprop/propagation.hpp"

namespace waveprop {

enum class PropagatorMode { Exact, Fresnel };

inline std::string mode_name(PropagatorMode m) {
    return m == PropagatorMode::Exact ? "exact" : "fresnel";
}

inline PropagatorMode mode_from_name(const std::string& s) {
    if (s == "exact") return PropagatorMode::Exact;
    if (s == "fresnel") return PropagatorMode::Fresnel;
    throw config_error("run.mode: unknown propagator mode '" + s + "'");
}

struct MatchMetrics {
    double l2_rel = 0.0;
    double linf_peak = 0.0;
};

/// Shape comparison of two non-negative densities.  Both are peak-normalized
/// first, so overall scale drops out.
inline MatchMetrics compare_densities(std::vector<double> d1, std::vector<double> d2) {
    if (d1.size() != d2.size())
        throw config_error("compare_densities: length mismatch");
    detail::peak_normalize(d1);
    detail::peak_normalize(d2);
    double diff2 = 0.0, ref2 = 0.0, linf = 0.0;
    for (std::size_t j = 0; j < d1.size(); ++j) {
        const double diff = d1[j] - d2[j];
        diff2 += diff * diff;
        ref2 += d1[j] * d1[j];
        linf = std::max(linf, std::abs(diff));
    }
    return {std::sqrt(diff2 / ref2), linf};
}

/// Result of one t = z/v_g equivalence check.
struct MatchReport {
    double z = 0.0;
    double k0 = 0.0;
    double v_g = 0.0;
    double t = 0.0;
    double l2_rel = 0.0;
    double linf_peak = 0.0;
    double evanescent_fraction = 0.0;
    bool verdict = false;
    PropagatorMode mode = PropagatorMode::Fresnel;

    nlohmann::json to_json() const {
        return {
            {"z", z},
            {"k0", k0},
            {"v_g", v_g},
            {"t", t},
            {"l2_rel", l2_rel},
            {"linf_peak", linf_peak},
            {"evanescent_fraction", evanescent_fraction},
            {"verdict", verdict ? "pass" : "fail"},
            {"mode", mode_name(mode)},
        };
    }
};

struct MatchOptions {
    std::optional<double> tolerance;  // default depends on mode
    double time_scale = 1.0;          // 1.0 is the matching law; != 1 probes mismatch
    double edge_guard = 1e-6;         // wraparound detector threshold
};

inline double default_tolerance(PropagatorMode mode) {
    return mode == PropagatorMode::Fresnel ? 1e-9 : 5e-3;
}

/// Evolve the aperture field to t = time_scale * z / v_g, propagate it to z,
/// and compare the two densities.  Periodic-boundary contamination is a hard
/// error: if either peak-normalized density exceeds edge_guard at the domain
/// edge, the result would be untrustworthy.
inline MatchReport run_match(const ApertureSpec& aperture, const DispersionSpec& spec,
                             const LatticePtr& lattice, double z, PropagatorMode mode,
                             const MatchOptions& opts = {}) {
    if (!(z > 0.0)) throw config_error("run_match: z must be positive");
    const double k0 = require_k0(spec);

    const Field field0 = build(aperture, lattice);
    const double v_g = group_velocity(spec);
    const double t = opts.time_scale * z / v_g;

    DispersionSpec evolution_spec = spec;
    evolution_spec.family = paraxial_family(spec.family);

    const Field psi_t = evolve_spectral(field0, evolution_spec, t);
    const Field phi_z = mode == PropagatorMode::Exact ? propagate_exact(field0, k0, z)
                                                      : propagate_fresnel(field0, k0, z);

    std::vector<double> d_time = density_of(psi_t);
    std::vector<double> d_space = density_of(phi_z);

    // roundoff leaks ~1e-16 of the amplitude into propagating bins, so a dead
    // field still carries ~1e-32 of the power; compare against the input peak
    const std::vector<double> d_in = density_of(field0);
    const double peak_in = *std::max_element(d_in.begin(), d_in.end());
    const double peak_space = *std::max_element(d_space.begin(), d_space.end());
    if (!(peak_space > 1e-24 * peak_in))
        throw guard_error("run_match: propagated field is numerically zero (total evanescence)");

    for (const auto* d : {&d_time, &d_space}) {
        const double peak = *std::max_element(d->begin(), d->end());
        const double edge = std::max(d->front(), d->back());
        if (edge > opts.edge_guard * peak)
            throw guard_error("run_match: density at the domain edge exceeds " +
                              std::to_string(opts.edge_guard) +
                              " of the peak (wraparound; result untrustworthy)");
    }

    MatchReport report;
    report.z = z;
    report.k0 = k0;
    report.v_g = v_g;
    report.t = t;
    report.mode = mode;
    report.evanescent_fraction = evanescent_power_fraction(forward(field0), k0);
    const MatchMetrics metrics = compare_densities(d_time, d_space);
    report.l2_rel = metrics.l2_rel;
    report.linf_peak = metrics.linf_peak;
    report.verdict = metrics.linf_peak <= opts.tolerance.value_or(default_tolerance(mode));
    return report;
}

}  // namespace waveprop
