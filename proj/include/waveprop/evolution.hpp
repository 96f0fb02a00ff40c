#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "waveprop/dispersion.hpp"
#include "waveprop/errors.hpp"
#include "waveprop/lattice.hpp"

namespace waveprop {

/// Evolve a transverse packet in time: each spectral bin picks up the phase
/// exp(-i * omega(k) * t).  Exactly norm preserving.
inline Field evolve_spectral(const Field& field0, const DispersionSpec& spec, double t) {
    if (!(t >= 0.0))
        throw config_error("evolve_spectral: t must be non-negative");
    Spectrum s = forward(field0);
    const auto& ks = s.lattice->k_samples;
    for (std::size_t j = 0; j < ks.size(); ++j)
        s.values[j] *= std::polar(1.0, -omega_transverse(spec, ks[j]) * t);
    return inverse(s);
}

/// True when the quadratic kernel phase advances by more than pi between
/// adjacent source samples at the domain edge, i.e. the Riemann sum below
/// can no longer resolve the chirp.
inline bool propagator_undersampled(const Lattice& lat, const PhysicalConstants& pc, double t) {
    return pc.m * lat.dx * lat.extent() / (2.0 * pc.hbar * t) > std::numbers::pi;
}

/// Free-particle real-space propagator evaluated by direct Riemann-sum
/// quadrature over the lattice:
///
///   psi(x,t) = sqrt(m/(2*pi*i*hbar*t)) * sum_x' exp(i m (x-x')^2/(2 hbar t)) psi(x',0) dx'
///
/// This is the independent O(n^2) route against which the spectral evolution
/// is checked; it is not the production path.
inline Field evolve_propagator(const Field& field0, const PhysicalConstants& pc, double t,
                               bool* undersampled = nullptr) {
    if (!(t > 0.0))
        throw config_error("evolve_propagator: t must be positive (kernel singular at t = 0)");
    const auto& lat = *field0.lattice;
    if (undersampled)
        *undersampled = propagator_undersampled(lat, pc, t);

    const double chirp = pc.m / (2.0 * pc.hbar * t);
    // sqrt(m/(2*pi*i*hbar*t)) = sqrt(m/(2*pi*hbar*t)) * exp(-i*pi/4)
    const cplx prefactor =
        std::sqrt(pc.m / (2.0 * std::numbers::pi * pc.hbar * t)) *
        std::polar(1.0, -std::numbers::pi / 4.0);

    Field out{field0.lattice, std::vector<cplx>(lat.n)};
    for (std::size_t i = 0; i < lat.n; ++i) {
        const double x = lat.x_samples[i];
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < lat.n; ++j) {
            const double dxij = x - lat.x_samples[j];
            acc += std::polar(1.0, chirp * dxij * dxij) * field0.values[j];
        }
        out.values[i] = prefactor * acc * lat.dx;
    }
    return out;
}

/// Far-field (Fraunhofer-in-time) density: the evolved density is just the
/// squared Fourier transform of the initial packet read off at k = m x/(hbar t),
///
///   |psi(x,t)|^2 ~ m/(2*pi*hbar*t) * |FT[psi0](m x / (hbar t))|^2
///
/// The continuum transform is recovered from the unitary spectrum by the
/// factor sqrt(n)*dx, resampled by linear interpolation between bins.
inline std::vector<double> far_field_density(const Field& field0, const PhysicalConstants& pc,
                                             double t) {
    if (!(t > 0.0))
        throw config_error("far_field_density: t must be positive");
    const auto& lat = *field0.lattice;
    const Spectrum s = forward(field0);
    const double ft_scale = std::sqrt(static_cast<double>(lat.n)) * lat.dx;
    const double prefactor = pc.m / (2.0 * std::numbers::pi * pc.hbar * t);
    std::vector<double> density(lat.n);
    for (std::size_t j = 0; j < lat.n; ++j) {
        const double k = pc.m * lat.x_samples[j] / (pc.hbar * t);
        density[j] = prefactor * std::norm(ft_scale * sample_spectrum(s, k));
    }
    return density;
}

/// |values|^2 per sample.
inline std::vector<double> density_of(const Field& field) {
    std::vector<double> d(field.values.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = std::norm(field.values[j]);
    return d;
}

}  // namespace waveprop
