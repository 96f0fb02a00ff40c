// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here.
#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "waveprop/waveprop.hpp"

using namespace waveprop;
constexpr double pi = std::numbers::pi;

namespace {

int failures = 0;

void report(int id, const char* what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what,
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* name, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s = %.3e", name, v);
    return buf;
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared single-slit fixture: n = 4096, unit extent, k0 = 2*pi*200/extent,
// a = 20 wavelengths, z chosen so the pattern spreads over roughly a quarter
// of the domain.  The sinc^2 tails reach the edge near 1e-2 of the peak, so
// the wraparound guard is opened up for these runs (the time and space routes
// share the identical wraparound, which cancels in the comparison).
struct SlitFixture {
    LatticePtr lattice = make_lattice(4096, 1.0);
    double k0 = 400.0 * pi;
    ApertureSpec rect;
    double z = 2.5;
    MatchOptions opts;
    SlitFixture() {
        rect.kind = ApertureSpec::Kind::Rect;
        rect.a = 20.0 * 2.0 * pi / k0;  // 0.1
        opts.edge_guard = 0.05;
    }
};

void criterion_1_de_broglie() {
    const auto t0 = std::chrono::steady_clock::now();
    SlitFixture fx;
    DispersionSpec spec{WaveFamily::DeBroglie, {}, fx.k0};
    auto rep = run_match(fx.rect, spec, fx.lattice, fx.z, PropagatorMode::Fresnel, fx.opts);
    const double secs = elapsed_s(t0);
    report(1, "matching theorem, De Broglie rect slit",
           rep.linf_peak <= 1e-9 && secs < 1.0,
           fmt("linf_peak", rep.linf_peak) + ", " + fmt("runtime_s", secs));
}

void criterion_2_em() {
    SlitFixture fx;
    DispersionSpec spec{WaveFamily::ElectromagneticParaxial, {}, fx.k0};
    auto rep = run_match(fx.rect, spec, fx.lattice, fx.z, PropagatorMode::Fresnel, fx.opts);
    const bool t_is_z_over_c = std::abs(rep.t - fx.z / 1.0) < 1e-12;
    report(2, "matching theorem, electromagnetic t = z/c",
           rep.linf_peak <= 1e-9 && t_is_z_over_c, fmt("linf_peak", rep.linf_peak));
}

void criterion_3_klein_gordon() {
    const double k0 = 5.0;
    DispersionSpec spec{WaveFamily::KleinGordonParaxial, {1.0, 1.0, 1.0}, k0};

    const double vg_expected = 5.0 / std::sqrt(26.0);  // p c^2 / E with p = 5, E = sqrt(26)
    const double vg_err = std::abs(group_velocity(spec) - vg_expected);

    auto lattice = make_lattice(4096, 200.0);
    ApertureSpec gauss;
    gauss.kind = ApertureSpec::Kind::Gaussian;
    gauss.sigma = 3.0;
    const double z = 50.0;
    auto rep = run_match(gauss, spec, lattice, z, PropagatorMode::Fresnel, {});
    const bool t_matches = std::abs(rep.t - z * std::sqrt(26.0) / 5.0) < 1e-9;
    report(3, "matching theorem, Klein-Gordon v_g = pc^2/E",
           rep.linf_peak <= 1e-9 && vg_err <= 1e-14 && t_matches,
           fmt("linf_peak", rep.linf_peak) + ", " + fmt("vg_err", vg_err));
}

void criterion_4_negative_control() {
    auto lattice = make_lattice(4096, 1.0);
    DispersionSpec spec{WaveFamily::DeBroglie, {}, 400.0 * pi};
    ApertureSpec slits;
    slits.kind = ApertureSpec::Kind::DoubleSlit;
    slits.d = 0.05;
    slits.w = 0.05 / 20.0;
    MatchOptions opts;
    opts.time_scale = 0.9;
    opts.edge_guard = 1.0;  // the fringe field fills the domain by design
    auto rep = run_match(slits, spec, lattice, 2.5, PropagatorMode::Fresnel, opts);
    report(4, "negative control, t = 0.9 z/v_g must fail", rep.linf_peak >= 1e-3,
           fmt("linf_peak", rep.linf_peak));
}

void criterion_5_single_slit_minima() {
    const auto t0 = std::chrono::steady_clock::now();
    auto lattice = make_lattice(65536, 4096.0);  // dx = 1/16
    ApertureSpec rect;
    rect.kind = ApertureSpec::Kind::Rect;
    rect.a = 17.0 * lattice->dx;  // odd multiple of dx: sampled width is exact
    const double t = 40.0;

    auto psi = evolve_spectral(build(rect, lattice), {WaveFamily::DeBroglie, {}, {}}, t);
    auto feat = extract_features(density_of(psi), lattice);

    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const double expect = n * 2.0 * pi * t / rect.a;
        double best = 1e300;
        for (double m : feat.minima_positions)
            if (std::abs(m - expect) < std::abs(best - expect)) best = m;
        worst = std::max(worst, std::abs(best - expect));
    }
    const double secs = elapsed_s(t0);
    report(5, "single-slit minima at n 2 pi hbar t/(m a)",
           worst <= lattice->dx && secs < 1.0,
           fmt("worst_err_over_dx", worst / lattice->dx) + ", " + fmt("runtime_s", secs));
}

void criterion_6_double_slit_fringes() {
    const double d = 1.0, t = 0.02;
    const double expect = 2.0 * pi * t / d;
    std::vector<double> errs;
    for (double w : {d / 10.0, d / 20.0, d / 40.0}) {
        // per-run lattice: 25 samples per slit, edges mid-cell, extent ~1000
        const double dx = w / 25.0;
        std::size_t n = 1;
        while (static_cast<double>(n) * dx < 1000.0) n <<= 1;
        auto lattice = make_lattice(n, static_cast<double>(n) * dx);

        ApertureSpec slits;
        slits.kind = ApertureSpec::Kind::DoubleSlit;
        slits.d = d;
        slits.w = w;
        auto psi = evolve_spectral(build(slits, lattice), {WaveFamily::DeBroglie, {}, {}}, t);
        auto feat = extract_features(density_of(psi), lattice);

        std::vector<double> central;
        for (double m : feat.maxima_positions)
            if (std::abs(m) <= 0.8) central.push_back(m);
        const double spacing =
            (central.back() - central.front()) / static_cast<double>(central.size() - 1);
        errs.push_back(std::abs(spacing - expect) / expect);
    }
    const bool within = errs[1] <= 0.01;
    const bool monotone = errs[0] > errs[1] && errs[1] > errs[2];
    report(6, "double-slit fringe spacing, 1% at w = d/20 and monotone in w",
           within && monotone,
           fmt("err_d10", errs[0]) + ", " + fmt("err_d20", errs[1]) + ", " +
               fmt("err_d40", errs[2]));
}

void criterion_7_fresnel_validity() {
    auto lattice = make_lattice(8192, 20.0);
    const double k0 = 200.0, z = 1.0;

    const auto gap_for = [&](double sigma, double* beyond_frac) {
        ApertureSpec gauss;
        gauss.kind = ApertureSpec::Kind::Gaussian;
        gauss.sigma = sigma;
        auto f = build(gauss, lattice);
        auto s = forward(f);
        double total = 0.0, beyond = 0.0;
        for (std::size_t j = 0; j < lattice->n; ++j) {
            const double p = std::norm(s.values[j]);
            total += p;
            if (std::abs(lattice->k_samples[j]) > 0.05 * k0) beyond += p;
        }
        *beyond_frac = beyond / total;
        return oracles::rel_l2(propagate_exact(f, k0, z).values,
                               propagate_fresnel(f, k0, z).values);
    };

    double narrow_frac = 0.0, wide_frac = 0.0;
    const double narrow_gap = gap_for(0.5, &narrow_frac);       // paraxial fixture
    const double wide_gap = gap_for(2.0 / k0, &wide_frac);      // sigma ~ 2/k0
    report(7, "Fresnel vs exact: small for paraxial, visible for wide angles",
           narrow_frac < 1e-6 && narrow_gap <= 1e-3 && wide_gap >= 1e-2,
           fmt("paraxial_gap", narrow_gap) + ", " + fmt("wide_gap", wide_gap));
}

void criterion_8_propagator_oracle() {
    auto lattice = make_lattice(1024, 20.0);
    ApertureSpec gauss;
    gauss.kind = ApertureSpec::Kind::Gaussian;
    gauss.sigma = 0.5;
    auto f = build(gauss, lattice);
    const double t = 2.0 * 0.25 * std::sqrt(3.0);  // width doubles
    auto spectral = evolve_spectral(f, {WaveFamily::DeBroglie, {}, {}}, t);
    auto quadrature = evolve_propagator(f, {}, t);
    const double gap = oracles::rel_l2(spectral.values, quadrature.values);
    report(8, "Riemann-sum propagator vs spectral evolution", gap <= 1e-3,
           fmt("rel_l2", gap));
}

void criterion_9_unitarity() {
    // 100 chained evolution steps
    auto lattice = make_lattice(4096, 40.0);
    ApertureSpec gauss;
    gauss.kind = ApertureSpec::Kind::Gaussian;
    gauss.sigma = 0.5;
    Field f = build(gauss, lattice);
    const double n0 = norm_squared(f);
    DispersionSpec db{WaveFamily::DeBroglie, {}, {}};
    double drift = 0.0;
    for (int i = 0; i < 100; ++i) {
        f = evolve_spectral(f, db, 0.01);
        drift = std::max(drift, std::abs(norm_squared(f) - n0) / n0);
    }

    // discrete Parseval on random fields up to n = 2^16
    double parseval = 0.0;
    for (std::size_t n : {256ul, 4096ul, 65536ul}) {
        auto lat = make_lattice(n, 10.0);
        auto g = oracles::random_field(lat, static_cast<unsigned>(n) + 17);
        auto s = forward(g);
        double sum_f = 0.0, sum_s = 0.0;
        for (const auto& v : g.values) sum_f += std::norm(v);
        for (const auto& v : s.values) sum_s += std::norm(v);
        parseval = std::max(parseval, std::abs(sum_f - sum_s) / sum_f);
    }
    report(9, "norm drift over 100 steps and discrete Parseval",
           drift <= 1e-12 && parseval <= 1e-13,
           fmt("drift", drift) + ", " + fmt("parseval", parseval));
}

void criterion_10_fresnel_convolution() {
    auto lattice = make_lattice(512, 20.0);
    ApertureSpec gauss;
    gauss.kind = ApertureSpec::Kind::Gaussian;
    gauss.sigma = 0.5;
    auto f = build(gauss, lattice);
    const double k0 = 50.0, z = 25.0;
    const double gap = oracles::rel_l2(propagate_fresnel(f, k0, z).values,
                                       oracles::fresnel_convolution(f, k0, z).values);
    report(10, "spectral Fresnel vs quadratic-phase convolution", gap <= 1e-3,
           fmt("rel_l2", gap));
}

}  // namespace

int main() {
    criterion_1_de_broglie();
    criterion_2_em();
    criterion_3_klein_gordon();
    criterion_4_negative_control();
    criterion_5_single_slit_minima();
    criterion_6_double_slit_fringes();
    criterion_7_fresnel_validity();
    criterion_8_propagator_oracle();
    criterion_9_unitarity();
    criterion_10_fresnel_convolution();
    if (failures == 0)
        std::printf("all 10 acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
