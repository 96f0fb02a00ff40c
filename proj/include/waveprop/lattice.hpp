#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <utility>
#include <vector>

#include "waveprop/errors.hpp"

namespace waveprop {

using cplx = std::complex<double>;

/// Uniform 1-D sampling grid centered on x = 0 together with its conjugate
/// wavenumber grid.
///
/// x_samples[j] = (j - n/2) * dx.  k_samples follow the standard FFT wrap
/// order: bin j holds k = 2*pi*m/(n*dx) with m = j for j < n/2 and
/// m = j - n otherwise, so max |k| is the Nyquist wavenumber pi/dx.
struct Lattice {
    std::size_t n = 0;
    double dx = 0.0;
    std::vector<double> x_samples;
    std::vector<double> k_samples;

    double extent() const { return static_cast<double>(n) * dx; }
    double dk() const { return 2.0 * std::numbers::pi / extent(); }
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Complex transverse wave function sampled on a Lattice.
struct Field {
    LatticePtr lattice;
    std::vector<cplx> values;
};

/// Complex wavenumber-space amplitudes, indexed by Lattice::k_samples.
struct Spectrum {
    LatticePtr lattice;
    std::vector<cplx> values;
};

inline bool is_power_of_two(std::size_t n) {
    return n >= 1 && (n & (n - 1)) == 0;
}

inline LatticePtr make_lattice(std::size_t n, double extent) {
    if (n < 2 || !is_power_of_two(n))
        throw config_error("lattice: n must be a power of two >= 2");
    if (!(extent > 0.0) || !std::isfinite(extent))
        throw config_error("lattice: extent must be positive and finite");

    auto lat = std::make_shared<Lattice>();
    lat->n = n;
    lat->dx = extent / static_cast<double>(n);
    lat->x_samples.resize(n);
    lat->k_samples.resize(n);
    const double dk = 2.0 * std::numbers::pi / extent;
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::size_t j = 0; j < n; ++j) {
        const auto sj = static_cast<std::ptrdiff_t>(j);
        lat->x_samples[j] = static_cast<double>(sj - half) * lat->dx;
        const std::ptrdiff_t m = sj < half ? sj : sj - static_cast<std::ptrdiff_t>(n);
        lat->k_samples[j] = static_cast<double>(m) * dk;
    }
    return lat;
}

namespace detail {

// In-place radix-2 Cooley-Tukey.  Twiddles are computed by std::polar per
// butterfly rather than by recurrence so that the transform stays unitary
// to a few ulps even at n = 2^16 and beyond.
inline void fft_radix2(std::vector<cplx>& a, bool invert) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double sgn = invert ? 1.0 : -1.0;
        const double step = sgn * 2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx w = std::polar(1.0, step * static_cast<double>(k));
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace detail

/// Unitary discrete Fourier transform with the phase convention
/// S[j] = n^{-1/2} sum_l f[l] exp(-i k_j x_l).  Because the grid is centered
/// on x = 0 this is a plain FFT followed by an alternating sign flip.
inline Spectrum forward(const Field& field) {
    const auto& lat = *field.lattice;
    std::vector<cplx> a = field.values;
    detail::fft_radix2(a, /*invert=*/false);
    const double s = 1.0 / std::sqrt(static_cast<double>(lat.n));
    for (std::size_t j = 0; j < lat.n; ++j)
        a[j] *= (j & 1) ? -s : s;
    return Spectrum{field.lattice, std::move(a)};
}

/// Adjoint of forward: f[l] = n^{-1/2} sum_j S[j] exp(+i k_j x_l).
inline Field inverse(const Spectrum& spectrum) {
    const auto& lat = *spectrum.lattice;
    std::vector<cplx> a = spectrum.values;
    for (std::size_t j = 0; j < lat.n; ++j)
        if (j & 1) a[j] = -a[j];
    detail::fft_radix2(a, /*invert=*/true);
    const double s = 1.0 / std::sqrt(static_cast<double>(lat.n));
    for (auto& v : a) v *= s;
    return Field{spectrum.lattice, std::move(a)};
}

/// Sum |values|^2 * dx (Riemann approximation of the continuum norm).
inline double norm_squared(const Field& field) {
    double acc = 0.0;
    for (const auto& v : field.values) acc += std::norm(v);
    return acc * field.lattice->dx;
}

/// Rescale to unit norm.  A zero field is a degenerate input.
inline Field normalize(const Field& field) {
    const double ns = norm_squared(field);
    if (!(ns > 0.0))
        throw config_error("normalize: field has zero norm");
    Field out{field.lattice, field.values};
    const double s = 1.0 / std::sqrt(ns);
    for (auto& v : out.values) v *= s;
    return out;
}

/// Complex spectrum value at an arbitrary wavenumber, linearly interpolated
/// between the two neighboring bins (in monotone k order).  Zero outside
/// the Nyquist band.
inline cplx sample_spectrum(const Spectrum& spectrum, double k) {
    const auto& lat = *spectrum.lattice;
    const double dk = lat.dk();
    const auto n = lat.n;
    // sorted position: k = (i - n/2) * dk
    const double pos = k / dk + static_cast<double>(n / 2);
    if (pos < 0.0 || pos > static_cast<double>(n - 1)) return {0.0, 0.0};
    const auto i0 = static_cast<std::size_t>(pos);
    const std::size_t i1 = std::min(i0 + 1, n - 1);
    const double frac = pos - static_cast<double>(i0);
    const auto wrap = [n](std::size_t i) { return (i + n / 2) % n; };
    const cplx a = spectrum.values[wrap(i0)];
    const cplx b = spectrum.values[wrap(i1)];
    return a + (b - a) * frac;
}

}  // namespace waveprop
