//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_experiment.cpp
//---------------------------------------------------------------------------//
#include <filesystem>
#include <fstream>

#include <doctest.h>
#include <json.hpp>

#include "mcrt/error.hpp"
#include "mcrt/experiment.hpp"

using namespace mcrt;
namespace fs = std::filesystem;

namespace
{
fs::path scratch(char const* name)
{
    auto p = fs::temp_directory_path() / "mcrt_unit" / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}
}  // namespace

TEST_CASE("default configuration")
{
    ExperimentConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(walker_budget(c) == 100);
    CHECK(sandpile_mass(c) == doctest::Approx(100.0));
    auto back = config_from_json(config_to_json(c));
    CHECK(back.n_cells == c.n_cells);
    CHECK(back.compare_scales == c.compare_scales);
    CHECK(back.verify_t == c.verify_t);
}

TEST_CASE("shipped config file parses to the defaults")
{
    auto c = load_config(MCRT_SOURCE_DIR "/configs/default.jsonc");
    ExperimentConfig d;
    CHECK(config_to_json(c) == config_to_json(d));
}

TEST_CASE("bad configurations are domain errors")
{
    CHECK_THROWS_AS(config_from_json("{\"gamma\": 2.0}"), DomainError);
    CHECK_THROWS_AS(config_from_json("{\"n_cells\": 0}"), DomainError);
    CHECK_THROWS_AS(config_from_json("{\"t\": -1}"), DomainError);
    CHECK_THROWS_AS(config_from_json("{\"unknown_key\": 1}"), DomainError);
    CHECK_THROWS_AS(config_from_json("{\"solver\": {\"tolerance\": 0}}"), DomainError);
    CHECK_THROWS_AS(config_from_json("{\"sandpile\": {\"sweep\": \"sideways\"}}"), DomainError);
    CHECK_THROWS_AS(config_from_json("not json"), DomainError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.jsonc"), DomainError);
}

TEST_CASE("overrides merge over the file")
{
    auto c = load_config("", R"({"seed": 9, "grow": {"model": "sandpile"}})");
    CHECK(c.seed == 9);
    CHECK(c.model == "sandpile");
    CHECK(c.n_cells == 10000);
}

TEST_CASE("generate, grow and render write their artifacts")
{
    auto dir = scratch("pipeline");
    ExperimentConfig c;
    c.n_cells = 400;
    c.t = 0.02;
    c.out = dir.string();
    auto g = cmd_generate(c);
    CHECK(g.exit_code == 0);
    for (char const* f : {"path.bin", "map.bin", "positions.csv", "faces.json", "manifest.json"})
        CHECK(fs::exists(dir / f));

    auto gr = cmd_grow(c);
    CHECK(gr.exit_code == 0);
    CHECK(fs::exists(dir / "idla.csv"));
    CHECK(fs::exists(dir / "idla.svg"));
    auto metrics = nlohmann::json::parse(std::ifstream(dir / "metrics.json"));
    CHECK(metrics["walkers"] == 8);
    CHECK(metrics["cluster_size"] == 8);

    auto manifest = nlohmann::json::parse(std::ifstream(dir / "manifest.json"));
    CHECK(manifest["epsilon"] == "1/n_cells");
    CHECK(manifest.contains("grow"));

    fs::remove(dir / "idla.svg");
    auto r = cmd_render(c);
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "idla.svg"));
}

TEST_CASE("generate is deterministic")
{
    auto a = scratch("det_a"), b = scratch("det_b");
    ExperimentConfig c;
    c.n_cells = 300;
    c.out = a.string();
    cmd_generate(c);
    c.out = b.string();
    cmd_generate(c);
    auto read = [](fs::path const& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(read(a / "map.bin") == read(b / "map.bin"));
    CHECK(read(a / "positions.csv") == read(b / "positions.csv"));
}

TEST_CASE("grow without a generated map is an io error")
{
    auto dir = scratch("empty");
    ExperimentConfig c;
    c.out = dir.string();
    CHECK_THROWS_AS(cmd_grow(c), IoError);
}
