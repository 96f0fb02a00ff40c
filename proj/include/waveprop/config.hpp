#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "waveprop/apertures.hpp"
#include "waveprop/dispersion.hpp"
#include "waveprop/errors.hpp"
#include "waveprop/lattice.hpp"
#include "waveprop/matching.hpp"

namespace waveprop {

/// One fully resolved experiment: a flat JSON document with dotted section
/// keys ("lattice.n", "aperture.kind", ...) validated into typed fields.
struct ExperimentConfig {
    std::size_t lattice_n = 0;
    double lattice_extent = 0.0;
    PhysicalConstants constants{};
    WaveFamily family = WaveFamily::DeBroglie;
    std::optional<double> k0;
    ApertureSpec aperture{};

    std::optional<double> z;
    std::optional<double> t;
    std::string mode = "fresnel";  // exact | fresnel | fraunhofer
    std::optional<double> tolerance;
    double time_scale = 1.0;
    double edge_guard = 1e-6;

    std::optional<std::string> sweep_parameter;
    std::vector<double> sweep_values;

    nlohmann::json resolved;  // the flat document after overrides

    LatticePtr make_grid() const { return make_lattice(lattice_n, lattice_extent); }

    DispersionSpec dispersion() const { return {family, constants, k0}; }

    MatchOptions match_options() const { return {tolerance, time_scale, edge_guard}; }
};

namespace detail {

inline double want_number(const nlohmann::json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_number())
        throw config_error("config: key '" + key + "' must be a number");
    return v.get<double>();
}

inline std::optional<double> opt_number(const nlohmann::json& doc, const std::string& key) {
    if (!doc.contains(key)) return std::nullopt;
    return want_number(doc, key);
}

inline std::string want_string(const nlohmann::json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_string())
        throw config_error("config: key '" + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace detail

/// Parse the flat key-value document.  Unknown keys are rejected with the
/// offending key named so typos never silently change an experiment.
inline ExperimentConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw config_error("config: document must be a JSON object");

    static const std::set<std::string> known = {
        "lattice.n", "lattice.extent",
        "constants.hbar", "constants.m", "constants.c",
        "dispersion.family", "dispersion.k0",
        "aperture.kind", "aperture.a", "aperture.d", "aperture.w",
        "aperture.sigma", "aperture.x_center", "aperture.path",
        "run.z", "run.t", "run.mode", "run.tolerance", "run.time_scale",
        "run.edge_guard", "run.fraunhofer_threshold",
        "sweep.parameter", "sweep.values",
    };
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known.contains(key))
            throw config_error("config: unknown key '" + key + "'");
    }

    ExperimentConfig cfg;
    cfg.resolved = doc;

    if (!doc.contains("lattice.n") || !doc.contains("lattice.extent"))
        throw config_error("config: 'lattice.n' and 'lattice.extent' are required");
    const double n_raw = detail::want_number(doc, "lattice.n");
    if (n_raw < 2.0 || n_raw != std::floor(n_raw))
        throw config_error("config: 'lattice.n' must be an integer >= 2");
    cfg.lattice_n = static_cast<std::size_t>(n_raw);
    cfg.lattice_extent = detail::want_number(doc, "lattice.extent");
    if (!is_power_of_two(cfg.lattice_n))
        throw config_error("config: 'lattice.n' must be a power of two");
    if (!(cfg.lattice_extent > 0.0))
        throw config_error("config: 'lattice.extent' must be positive");

    cfg.constants.hbar = detail::opt_number(doc, "constants.hbar").value_or(1.0);
    cfg.constants.m = detail::opt_number(doc, "constants.m").value_or(1.0);
    cfg.constants.c = detail::opt_number(doc, "constants.c").value_or(1.0);
    validate(cfg.constants);

    if (doc.contains("dispersion.family"))
        cfg.family = family_from_name(detail::want_string(doc, "dispersion.family"));
    cfg.k0 = detail::opt_number(doc, "dispersion.k0");
    if (cfg.k0 && !(*cfg.k0 > 0.0))
        throw config_error("config: 'dispersion.k0' must be positive");

    const std::string kind =
        doc.contains("aperture.kind") ? detail::want_string(doc, "aperture.kind") : "rect";
    if (kind == "rect")
        cfg.aperture.kind = ApertureSpec::Kind::Rect;
    else if (kind == "double_slit")
        cfg.aperture.kind = ApertureSpec::Kind::DoubleSlit;
    else if (kind == "gaussian")
        cfg.aperture.kind = ApertureSpec::Kind::Gaussian;
    else if (kind == "from_file")
        cfg.aperture.kind = ApertureSpec::Kind::FromFile;
    else
        throw config_error("config: 'aperture.kind' must be one of "
                           "rect|double_slit|gaussian|from_file, got '" + kind + "'");
    if (auto v = detail::opt_number(doc, "aperture.a")) cfg.aperture.a = *v;
    if (auto v = detail::opt_number(doc, "aperture.d")) cfg.aperture.d = *v;
    if (auto v = detail::opt_number(doc, "aperture.w")) cfg.aperture.w = *v;
    if (auto v = detail::opt_number(doc, "aperture.sigma")) cfg.aperture.sigma = *v;
    if (auto v = detail::opt_number(doc, "aperture.x_center")) cfg.aperture.x_center = *v;
    if (doc.contains("aperture.path"))
        cfg.aperture.path = detail::want_string(doc, "aperture.path");
    if (cfg.aperture.kind == ApertureSpec::Kind::FromFile && cfg.aperture.path.empty())
        throw config_error("config: 'aperture.path' is required for aperture.kind=from_file");

    cfg.z = detail::opt_number(doc, "run.z");
    cfg.t = detail::opt_number(doc, "run.t");
    if (doc.contains("run.mode")) {
        cfg.mode = detail::want_string(doc, "run.mode");
        if (cfg.mode != "exact" && cfg.mode != "fresnel" && cfg.mode != "fraunhofer")
            throw config_error("config: 'run.mode' must be exact|fresnel|fraunhofer");
    }
    cfg.tolerance = detail::opt_number(doc, "run.tolerance");
    if (auto v = detail::opt_number(doc, "run.time_scale")) cfg.time_scale = *v;
    if (auto v = detail::opt_number(doc, "run.edge_guard")) cfg.edge_guard = *v;

    if (doc.contains("sweep.parameter")) {
        cfg.sweep_parameter = detail::want_string(doc, "sweep.parameter");
        static const std::set<std::string> sweepable = {"a", "d", "w", "z", "k0", "sigma"};
        if (!sweepable.contains(*cfg.sweep_parameter))
            throw config_error("config: 'sweep.parameter' must be one of a|d|w|z|k0|sigma");
    }
    if (doc.contains("sweep.values")) {
        const auto& vals = doc.at("sweep.values");
        if (!vals.is_array())
            throw config_error("config: 'sweep.values' must be an array of numbers");
        for (const auto& v : vals) {
            if (!v.is_number())
                throw config_error("config: 'sweep.values' must contain only numbers");
            const double x = v.get<double>();
            if (!std::isfinite(x))
                throw config_error("config: 'sweep.values' entries must be finite");
            cfg.sweep_values.push_back(x);
        }
    }
    return cfg;
}

/// Apply one `key=value` override onto the flat document.  The value is
/// parsed as JSON when possible, otherwise taken as a string.
inline void apply_override(nlohmann::json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw config_error("override must have the form key=value, got '" + assignment + "'");
    const std::string key = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    const auto parsed = nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
    doc[key] = parsed.is_discarded() ? nlohmann::json(raw) : parsed;
}

}  // namespace waveprop
