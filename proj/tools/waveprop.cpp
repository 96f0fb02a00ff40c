// waveprop: spectral wave-packet evolution, angular-spectrum propagation,
// analytic patterns, and t = z/v_g matching runs, driven by a flat JSON
// config.  Emits gnuplot-ready CSV and JSON match reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "waveprop/waveprop.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace waveprop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitGuardTripped = 3;

std::string config_comment(const ExperimentConfig& cfg) {
    return "config: " + cfg.resolved.dump();
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream os(path);
    if (!os) throw config_error("cannot open '" + path.string() + "' for writing");
    return os;
}

void write_field_csv(std::ofstream& os, const ExperimentConfig& cfg, const Field& field) {
    os << "# " << config_comment(cfg) << "\n";
    os << "x,re,im,density\n";
    const auto& lat = *field.lattice;
    for (std::size_t j = 0; j < lat.n; ++j) {
        os << detail::fmt_g17(lat.x_samples[j]) << ','
           << detail::fmt_g17(field.values[j].real()) << ','
           << detail::fmt_g17(field.values[j].imag()) << ','
           << detail::fmt_g17(std::norm(field.values[j])) << '\n';
    }
}

void write_density_csv(std::ofstream& os, const ExperimentConfig& cfg, const Lattice& lat,
                       const std::vector<double>& density) {
    os << "# " << config_comment(cfg) << "\n";
    os << "x,density\n";
    for (std::size_t j = 0; j < lat.n; ++j)
        os << detail::fmt_g17(lat.x_samples[j]) << ','
           << detail::fmt_g17(density[j]) << '\n';
}

// Periodic wraparound detector shared by the evolve/propagate commands.
void check_edge_guard(const std::vector<double>& density, double threshold) {
    const double peak = *std::max_element(density.begin(), density.end());
    if (!(peak > 0.0)) throw guard_error("output density is identically zero");
    if (std::max(density.front(), density.back()) > threshold * peak)
        throw guard_error("density at the domain edge exceeds " + std::to_string(threshold) +
                          " of the peak (wraparound; result untrustworthy)");
}

double resolve_time(const ExperimentConfig& cfg) {
    if (cfg.t) return *cfg.t;
    if (cfg.z) return transit_time(cfg.dispersion(), *cfg.z);
    throw config_error("config: 'run.t' (or 'run.z' with dispersion.k0) is required");
}

int cmd_evolve(const ExperimentConfig& cfg, const fs::path& out_dir) {
    const double t = resolve_time(cfg);
    const auto lattice = cfg.make_grid();
    const Field field0 = build(cfg.aperture, lattice);
    const Field evolved = t > 0.0 ? evolve_spectral(field0, cfg.dispersion(), t) : field0;

    const auto density = density_of(evolved);
    check_edge_guard(density, cfg.edge_guard);

    auto field_os = open_out(out_dir, "field.csv");
    write_field_csv(field_os, cfg, evolved);
    auto density_os = open_out(out_dir, "density.csv");
    write_density_csv(density_os, cfg, *lattice, density);

    const double drift = std::abs(norm_squared(evolved) - norm_squared(field0));
    std::cout << "t = " << t << ", norm drift = " << drift << "\n";
    return kExitOk;
}

int cmd_propagate(const ExperimentConfig& cfg, const fs::path& out_dir) {
    if (!cfg.z) throw config_error("config: 'run.z' is required for propagate");
    if (!cfg.k0) throw config_error("config: 'dispersion.k0' is required for propagate");
    const double z = *cfg.z;
    const double k0 = *cfg.k0;
    const auto lattice = cfg.make_grid();
    const Field field0 = build(cfg.aperture, lattice);

    if (cfg.mode == "fraunhofer") {
        const auto res = propagate_fraunhofer(field0, k0, z);
        check_edge_guard(res.density, cfg.edge_guard);
        auto os = open_out(out_dir, "density.csv");
        write_density_csv(os, cfg, *lattice, res.density);
        if (res.condition_violated)
            std::cout << "warning: Fraunhofer condition violated (k0*a^2/2z = "
                      << res.aperture_phase << " rad)\n";
        return kExitOk;
    }

    const Field propagated = cfg.mode == "exact" ? propagate_exact(field0, k0, z)
                                                 : propagate_fresnel(field0, k0, z);
    const auto density = density_of(propagated);
    check_edge_guard(density, cfg.edge_guard);

    auto field_os = open_out(out_dir, "field.csv");
    write_field_csv(field_os, cfg, propagated);
    auto density_os = open_out(out_dir, "density.csv");
    write_density_csv(density_os, cfg, *lattice, density);

    const double drift = std::abs(norm_squared(propagated) - norm_squared(field0));
    std::cout << "z = " << z << ", norm drift = " << drift << "\n";
    return kExitOk;
}

int cmd_match(const ExperimentConfig& cfg, const fs::path& out_dir) {
    if (!cfg.z) throw config_error("config: 'run.z' is required for match");
    if (cfg.mode == "fraunhofer")
        throw config_error("config: match supports run.mode exact|fresnel only");
    const auto lattice = cfg.make_grid();
    const MatchReport report = run_match(cfg.aperture, cfg.dispersion(), lattice, *cfg.z,
                                         mode_from_name(cfg.mode), cfg.match_options());

    auto os = open_out(out_dir, "match.json");
    os << report.to_json().dump(2) << "\n";
    std::cout << (report.verdict ? "pass" : "fail")
              << " (linf_peak = " << report.linf_peak << ")\n";
    return report.verdict ? kExitOk : kExitVerdictFail;
}

int cmd_pattern(const ExperimentConfig& cfg, const fs::path& out_dir) {
    const double t = resolve_time(cfg);
    const auto lattice = cfg.make_grid();
    std::vector<double> density;
    switch (cfg.aperture.kind) {
        case ApertureSpec::Kind::Rect:
            density = sinc2_pattern(lattice, cfg.aperture.a, cfg.constants, t);
            break;
        case ApertureSpec::Kind::DoubleSlit:
            density = cos2_pattern(lattice, cfg.aperture.d, cfg.constants, t);
            break;
        default:
            throw config_error("config: pattern supports aperture.kind rect|double_slit only");
    }
    auto os = open_out(out_dir, "pattern.csv");
    write_density_csv(os, cfg, *lattice, density);
    return kExitOk;
}

void set_sweep_value(ExperimentConfig& cfg, const std::string& param, double value) {
    if (param == "a") cfg.aperture.a = value;
    else if (param == "d") cfg.aperture.d = value;
    else if (param == "w") cfg.aperture.w = value;
    else if (param == "sigma") cfg.aperture.sigma = value;
    else if (param == "z") cfg.z = value;
    else if (param == "k0") cfg.k0 = value;
    else throw config_error("sweep parameter must be one of a|d|w|z|k0|sigma");
    cfg.resolved[param == "z" ? "run.z" : param == "k0" ? "dispersion.k0" : "aperture." + param] =
        value;
}

int cmd_sweep(const ExperimentConfig& cfg, const fs::path& out_dir) {
    if (!cfg.sweep_parameter)
        throw config_error("config: 'sweep.parameter' is required for sweep");
    if (cfg.sweep_values.empty())
        throw config_error("config: 'sweep.values' must be a non-empty list");
    if (cfg.mode == "fraunhofer")
        throw config_error("config: sweep supports run.mode exact|fresnel only");

    auto os = open_out(out_dir, "sweep.csv");
    os << "# " << config_comment(cfg) << "\n";
    os << "parameter,value,z,k0,v_g,t,l2_rel,linf_peak,evanescent_fraction,verdict,mode\n";

    for (const double value : cfg.sweep_values) {
        ExperimentConfig run = cfg;
        set_sweep_value(run, *cfg.sweep_parameter, value);
        if (!run.z) throw config_error("config: 'run.z' is required for sweep");
        try {
            const auto lattice = run.make_grid();
            const MatchReport r = run_match(run.aperture, run.dispersion(), lattice, *run.z,
                                            mode_from_name(run.mode), run.match_options());
            os << *cfg.sweep_parameter << ',' << detail::fmt_g17(value) << ','
               << detail::fmt_g17(r.z) << ',' << detail::fmt_g17(r.k0) << ','
               << detail::fmt_g17(r.v_g) << ',' << detail::fmt_g17(r.t) << ','
               << detail::fmt_g17(r.l2_rel) << ',' << detail::fmt_g17(r.linf_peak) << ','
               << detail::fmt_g17(r.evanescent_fraction) << ','
               << (r.verdict ? "pass" : "fail") << ',' << mode_name(r.mode) << '\n';
        } catch (const guard_error& e) {
            os << "# aborted at " << *cfg.sweep_parameter << "=" << value
               << ": " << e.what() << " (partial output above)\n";
            std::cerr << "error: " << e.what() << "\n";
            return kExitGuardTripped;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D spectral wave propagation: time evolution, angular spectrum, matching"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::vector<std::string> overrides;
    std::optional<double> tolerance_flag;
    app.add_option("--config", config_path, "flat JSON config file")->required();
    app.add_option("--out", out_dir, "output directory (default: current)");
    app.add_option("--override", overrides, "key=value config override (repeatable)");
    app.add_option("--tolerance", tolerance_flag, "match tolerance override");

    auto* sub_evolve = app.add_subcommand("evolve", "evolve the aperture field to run.t");
    auto* sub_propagate = app.add_subcommand("propagate", "propagate the aperture field to run.z");
    auto* sub_match = app.add_subcommand("match", "check the t = z/v_g density identity");
    auto* sub_pattern = app.add_subcommand("pattern", "emit the analytic sinc^2/cos^2 pattern");
    auto* sub_sweep = app.add_subcommand("sweep", "run match over a list of parameter values");
    // global options may follow the subcommand
    for (auto* sub : {sub_evolve, sub_propagate, sub_match, sub_pattern, sub_sweep})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfigError;  // keep --help at 0
    }

    try {
        std::ifstream is(config_path);
        if (!is) throw config_error("cannot open config file '" + config_path + "'");
        json doc = json::parse(is, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded())
            throw config_error("config file '" + config_path + "' is not valid JSON");
        for (const auto& ov : overrides) apply_override(doc, ov);
        if (tolerance_flag) doc["run.tolerance"] = *tolerance_flag;

        const ExperimentConfig cfg = parse_config(doc);
        const fs::path out{out_dir};

        if (sub_evolve->parsed()) return cmd_evolve(cfg, out);
        if (sub_propagate->parsed()) return cmd_propagate(cfg, out);
        if (sub_match->parsed()) return cmd_match(cfg, out);
        if (sub_pattern->parsed()) return cmd_pattern(cfg, out);
        if (sub_sweep->parsed()) return cmd_sweep(cfg, out);
        return kExitConfigError;
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuardTripped;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
