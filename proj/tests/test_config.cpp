#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "waveprop/config.hpp"

using namespace waveprop;
using nlohmann::json;

namespace {

json base_doc() {
    return {
        {"lattice.n", 4096},
        {"lattice.extent", 1.0},
        {"dispersion.family", "de_broglie"},
        {"dispersion.k0", 1256.6},
        {"aperture.kind", "rect"},
        {"aperture.a", 0.1},
        {"run.z", 2.5},
    };
}

}  // namespace

TEST_CASE("a full document parses into typed fields") {
    auto cfg = parse_config(base_doc());
    CHECK(cfg.lattice_n == 4096);
    CHECK(cfg.lattice_extent == 1.0);
    CHECK(cfg.family == WaveFamily::DeBroglie);
    CHECK(cfg.k0 == doctest::Approx(1256.6));
    CHECK(cfg.aperture.kind == ApertureSpec::Kind::Rect);
    CHECK(cfg.aperture.a == 0.1);
    CHECK(cfg.z == 2.5);
    CHECK(cfg.mode == "fresnel");
    CHECK(cfg.time_scale == 1.0);
    // natural-unit defaults
    CHECK(cfg.constants.hbar == 1.0);
    CHECK(cfg.constants.m == 1.0);
    CHECK(cfg.constants.c == 1.0);
}

TEST_CASE("unknown keys are rejected by name") {
    auto doc = base_doc();
    doc["aperture.widht"] = 0.1;
    try {
        parse_config(doc);
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("aperture.widht") != std::string::npos);
    }
}

TEST_CASE("field-precise validation errors") {
    {
        auto doc = base_doc();
        doc.erase("lattice.n");
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
    {
        auto doc = base_doc();
        doc["lattice.n"] = 1000;  // not a power of two
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
    {
        auto doc = base_doc();
        doc["dispersion.family"] = "tachyon";
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
    {
        auto doc = base_doc();
        doc["run.mode"] = "warp";
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
    {
        auto doc = base_doc();
        doc["aperture.kind"] = "from_file";  // but no path
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
    {
        auto doc = base_doc();
        doc["constants.m"] = -1.0;
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
    {
        auto doc = base_doc();
        doc["lattice.extent"] = "wide";  // wrong type
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
}

TEST_CASE("sweep section") {
    auto doc = base_doc();
    doc["sweep.parameter"] = "w";
    doc["sweep.values"] = {0.01, 0.02};
    auto cfg = parse_config(doc);
    CHECK(*cfg.sweep_parameter == "w");
    CHECK(cfg.sweep_values == std::vector<double>{0.01, 0.02});

    doc["sweep.parameter"] = "extent";
    CHECK_THROWS_AS(parse_config(doc), config_error);
    doc["sweep.parameter"] = "w";
    doc["sweep.values"] = {0.01, "x"};
    CHECK_THROWS_AS(parse_config(doc), config_error);
}

TEST_CASE("overrides parse values as JSON with string fallback") {
    auto doc = base_doc();
    apply_override(doc, "run.z=5.0");
    CHECK(doc["run.z"] == 5.0);
    apply_override(doc, "run.mode=exact");
    CHECK(doc["run.mode"] == "exact");
    apply_override(doc, "sweep.values=[1,2,3]");
    CHECK(doc["sweep.values"].is_array());
    CHECK_THROWS_AS(apply_override(doc, "no_equals_sign"), config_error);
    CHECK_THROWS_AS(apply_override(doc, "=5"), config_error);
}

TEST_CASE("config round-trips into runnable domain objects") {
    auto cfg = parse_config(base_doc());
    auto lat = cfg.make_grid();
    CHECK(lat->n == 4096);
    auto spec = cfg.dispersion();
    CHECK(group_velocity(spec) == doctest::Approx(1256.6));
}
