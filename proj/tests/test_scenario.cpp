#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpe/heatmap.hpp"
#include "gpe/io_csv.hpp"
#include "gpe/scenario.hpp"

using namespace gpe;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("scenario");

namespace {

// Small, fast config used for end-to-end smoke tests.
ScenarioConfig tiny_config() {
    ScenarioConfig cfg = preset_config("fig3a");
    cfg.name = "tiny";
    cfg.n_points = 256;
    cfg.z_min_um = -25.6;
    cfg.z_max_um = 25.6;
    cfg.stepper.n_steps = 200;  // 0.2 ms
    cfg.seed_count = 8;
    cfg.outputs.snapshot_times_ms = {0.0, 0.2};
    return cfg;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("gpe_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("config round trip and strict validation") {
    SUBCASE("presets serialize and reload") {
        for (const std::string& name : preset_names()) {
            const ScenarioConfig cfg = preset_config(name);
            const ScenarioConfig back = load_config(config_to_json(cfg), name);
            CHECK(back.physical.ell_um == cfg.physical.ell_um);
            CHECK(back.stepper.n_steps == cfg.stepper.n_steps);
            CHECK(back.r_factor == cfg.r_factor);
            CHECK((back.mode == cfg.mode));
            CHECK(back.outputs.density_clip_hi == cfg.outputs.density_clip_hi);
        }
    }

    SUBCASE("unknown keys are errors") {
        std::string text = config_to_json(preset_config("fig3a"));
        nlohmann::json j = nlohmann::json::parse(text);
        j["elll_um"] = 5.7;  // typo guard
        CHECK_THROWS_WITH_AS(load_config(j.dump(), "t"),
                             doctest::Contains("unknown key: elll_um"),
                             std::invalid_argument);
    }

    SUBCASE("every violated constraint is listed") {
        nlohmann::json j = nlohmann::json::parse(config_to_json(preset_config("fig3a")));
        j["mass_kg"] = -1.0;
        j["r_factor"] = 0.0;
        j["store_every"] = 0;
        try {
            load_config(j.dump(), "t");
            FAIL("expected a validation error");
        } catch (const std::invalid_argument& e) {
            const std::string msg = e.what();
            CHECK(msg.find("mass_kg") != std::string::npos);
            CHECK(msg.find("r_factor") != std::string::npos);
            CHECK(msg.find("store_every") != std::string::npos);
        }
    }

    SUBCASE("missing mode is an error") {
        nlohmann::json j = nlohmann::json::parse(config_to_json(preset_config("fig3a")));
        j.erase("mode");
        CHECK_THROWS_WITH_AS(load_config(j.dump(), "t"),
                             doctest::Contains("mode"), std::invalid_argument);
    }
}

TEST_CASE("free release forces the trap frequency to zero in propagation") {
    ScenarioConfig cfg = tiny_config();
    REQUIRE(cfg.physical.f_z_hz == 50.0);  // lab trap still on in the config
    const ScenarioSetup setup = prepare_scenario(cfg);
    CHECK(setup.scaled.omega_z_bar == 0.0);
    for (double v : setup.potential.values) CHECK(v == 0.0);

    ScenarioConfig trap_cfg = cfg;
    trap_cfg.mode = ScenarioMode::trap;
    const ScenarioSetup trap_setup = prepare_scenario(trap_cfg);
    CHECK(trap_setup.scaled.omega_z_bar > 0.0);
    CHECK(trap_setup.potential.values.front() > 0.0);
}

TEST_CASE("heatmap rendering") {
    SUBCASE("constants map to black and white") {
        const std::vector<std::vector<double>> lo(3, std::vector<double>(4, 1.5));
        const auto black = render_heatmap(lo, 1.5, 2.5);
        for (auto p : black) CHECK(p == 0);
        const auto white = render_heatmap(lo, 0.5, 1.5);
        for (auto p : white) CHECK(p == 255);
    }
    SUBCASE("midpoint rounds half up to 128") {
        const std::vector<std::vector<double>> mid(1, std::vector<double>(1, 0.5));
        CHECK(render_heatmap(mid, 0.0, 1.0)[0] == 128);
    }
    SUBCASE("saturation") {
        const std::vector<std::vector<double>> m(1, {-10.0, 10.0});
        const auto px = render_heatmap(m, 0.0, 1.0);
        CHECK(px[0] == 0);
        CHECK(px[1] == 255);
    }
    SUBCASE("bad clips rejected") {
        const std::vector<std::vector<double>> m(1, std::vector<double>(1, 0.0));
        CHECK_THROWS(render_heatmap(m, 1.0, 1.0));
        CHECK_THROWS(render_heatmap(m, 2.0, 1.0));
    }
}

TEST_CASE("pgm file format") {
    TempDir tmp("pgm");
    const fs::path p = tmp.path / "img.pgm";
    write_pgm(p.string(), {0, 128, 255, 7, 9, 11}, 3, 2);
    const std::string data = slurp(p);
    CHECK(data.substr(0, 3) == "P5\n");
    CHECK(data.find("3 2\n255\n") != std::string::npos);
    CHECK(data.size() == std::string("P5\n3 2\n255\n").size() + 6);
}

TEST_CASE("csv formatting round-trips doubles at 17 significant digits") {
    TempDir tmp("csv");
    const fs::path p = tmp.path / "m.csv";
    const std::vector<std::vector<double>> m = {{M_PI, 0.1, -1.0 / 3.0},
                                                {1e-300, 2.5e17, 0.0}};
    csv_write_matrix(p.string(), m);
    const std::string data = slurp(p);
    CHECK(data.find("\r") == std::string::npos);  // LF only

    std::istringstream in(data);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(cells, cell, ',')) {
            CHECK(std::stod(cell) == m[row][col]);
            ++col;
        }
        CHECK(col == m[row].size());
        ++row;
    }
    CHECK(row == m.size());
}

TEST_CASE("end-to-end scenario run writes the artifact bundle") {
    TempDir tmp("run");
    ScenarioConfig cfg = tiny_config();
    cfg.outputs.artifacts = {"density", "velocity", "trajectories",
                             "report", "heatmaps", "frames", "potential"};
    const ScenarioResult result = run_scenario(cfg, tmp.path.string());

    CHECK(fs::exists(tmp.path / "density.csv"));
    CHECK(fs::exists(tmp.path / "velocity.csv"));
    CHECK(fs::exists(tmp.path / "trajectories.csv"));
    CHECK(fs::exists(tmp.path / "report.json"));
    CHECK(fs::exists(tmp.path / "density.pgm"));
    CHECK(fs::exists(tmp.path / "velocity.pgm"));
    CHECK(fs::exists(tmp.path / "potential.csv"));
    CHECK(fs::exists(tmp.path / "grid.csv"));
    CHECK(fs::exists(tmp.path / "times.csv"));
    CHECK(fs::directory_iterator(tmp.path / "frames") != fs::directory_iterator());

    const nlohmann::json rep = nlohmann::json::parse(slurp(tmp.path / "report.json"));
    CHECK(rep.at("name") == "tiny");
    CHECK(rep.at("diagnostics").at("aborted") == false);
    CHECK(rep.at("derived").at("g1d_bar").get<double>() == doctest::Approx(23.1895).epsilon(1e-4));
    CHECK(rep.at("dips").size() == cfg.outputs.snapshot_times_ms.size());

    // 21 frames stored (200 steps / 10), all trajectory rows present
    CHECK(result.series.frames.size() == 21);
    REQUIRE(result.trajectories.has_value());
    CHECK(result.trajectories->positions.size() == 21);
    CHECK(result.trajectories->positions[0].size() == 8);
}

TEST_CASE("repeated runs are byte-identical") {
    TempDir tmp("det");
    ScenarioConfig cfg = tiny_config();
    const fs::path a = tmp.path / "a";
    const fs::path b = tmp.path / "b";
    run_scenario(cfg, a.string());
    run_scenario(cfg, b.string());
    for (const char* f : {"density.csv", "velocity.csv", "trajectories.csv",
                          "report.json", "density.pgm", "velocity.pgm"}) {
        CHECK(slurp(a / f) == slurp(b / f));
    }
}

TEST_CASE("preset registry") {
    const auto names = preset_names();
    CHECK(names.size() >= 20);
    for (const auto& n : names) {
        const ScenarioConfig cfg = preset_config(n);
        CHECK(cfg.validate().empty());
        CHECK(cfg.name == n);
    }
    CHECK_THROWS(preset_config("fig99"));
    // the documented clip ranges
    CHECK(preset_config("fig3a").outputs.density_clip_hi == 0.12);
    CHECK(preset_config("fig3a").outputs.velocity_clip_hi == 1.0);
    CHECK(preset_config("fig5c").outputs.density_clip_hi == 0.1);
    CHECK(preset_config("fig5c").outputs.velocity_clip_hi == 5.0);
    CHECK(preset_config("fig5c").physical.ell_um == 26.0);
}

TEST_SUITE_END();
