#include "gpe/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gpe/heatmap.hpp"
#include "gpe/io_csv.hpp"
#include "gpe/linear_oracle.hpp"

namespace gpe {

namespace fs = std::filesystem;
using nlohmann::json;

bool ScenarioConfig::wants(const std::string& artifact) const {
    return std::find(outputs.artifacts.begin(), outputs.artifacts.end(), artifact) !=
           outputs.artifacts.end();
}

std::vector<std::string> ScenarioConfig::validate() const {
    std::vector<std::string> errors = physical.validate();
    for (const auto& e : stepper.validate()) errors.push_back(e);
    if (!is_power_of_two(n_points)) errors.push_back("n_points must be a power of two");
    if (!(z_max_um > z_min_um)) errors.push_back("z_max_um must exceed z_min_um");
    if (!(r_factor > 0.0)) errors.push_back("r_factor must be > 0");
    if (!std::isfinite(phi)) errors.push_back("phi must be finite");
    if (seed_count < 1) errors.push_back("seed_count must be >= 1");
    if (!(seed_threshold_frac > 0.0 && seed_threshold_frac <= 1.0))
        errors.push_back("seed_threshold_frac must be in (0, 1]");
    if (!(dip_envelope_window_um > 0.0))
        errors.push_back("dip_envelope_window_um must be > 0");
    if (!(dip_min_contrast > 0.0 && dip_min_contrast < 1.0))
        errors.push_back("dip_min_contrast must be in (0, 1)");
    if (!(dip_min_envelope_frac >= 0.0 && dip_min_envelope_frac < 1.0))
        errors.push_back("dip_min_envelope_frac must be in [0, 1)");
    if (!(flip_probe_z_um > 0.0)) errors.push_back("flip_probe_z_um must be > 0");
    if (!(outputs.density_clip_lo < outputs.density_clip_hi))
        errors.push_back("density_clip must satisfy lo < hi");
    if (!(outputs.velocity_clip_lo < outputs.velocity_clip_hi))
        errors.push_back("velocity_clip must satisfy lo < hi");
    if (outputs.matrix_stride < 1) errors.push_back("matrix_stride must be >= 1");
    static const std::set<std::string> known_artifacts = {
        "density", "velocity", "trajectories", "report",
        "heatmaps", "frames", "potential"};
    for (const auto& a : outputs.artifacts)
        if (!known_artifacts.count(a)) errors.push_back("unknown artifact: " + a);
    return errors;
}

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "mass_kg", "a_s_m", "n_atoms", "f_z_hz", "f_perp_hz", "v0_over_h_hz",
        "ell_um", "n_points", "z_min_um", "z_max_um", "dt_ms", "n_steps",
        "store_every", "mode", "r_factor", "phi", "seed_count",
        "seed_threshold_frac", "dip_envelope_window_um", "dip_min_contrast",
        "dip_min_envelope_frac", "flip_probe_z_um", "outputs", "density_clip",
        "velocity_clip", "matrix_stride", "snapshot_times_ms"};
    return keys;
}

void get_num(const json& j, const char* key, double& out,
             std::vector<std::string>& errors) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number()) {
        errors.push_back(std::string(key) + " must be a number");
        return;
    }
    out = j.at(key).get<double>();
}

void get_int(const json& j, const char* key, int& out,
             std::vector<std::string>& errors) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) {
        errors.push_back(std::string(key) + " must be an integer");
        return;
    }
    out = j.at(key).get<int>();
}

void get_long(const json& j, const char* key, long& out,
              std::vector<std::string>& errors) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) {
        errors.push_back(std::string(key) + " must be an integer");
        return;
    }
    out = j.at(key).get<long>();
}

}  // namespace

ScenarioConfig load_config(const std::string& json_text, const std::string& name) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    std::vector<std::string> errors;
    for (const auto& item : j.items())
        if (!known_keys().count(item.key()))
            errors.push_back("unknown key: " + item.key());

    ScenarioConfig cfg;
    cfg.name = name;
    get_num(j, "mass_kg", cfg.physical.mass_kg, errors);
    get_num(j, "a_s_m", cfg.physical.a_s_m, errors);
    get_int(j, "n_atoms", cfg.physical.n_atoms, errors);
    get_num(j, "f_z_hz", cfg.physical.f_z_hz, errors);
    get_num(j, "f_perp_hz", cfg.physical.f_perp_hz, errors);
    get_num(j, "v0_over_h_hz", cfg.physical.v0_over_h_hz, errors);
    get_num(j, "ell_um", cfg.physical.ell_um, errors);
    get_int(j, "n_points", cfg.n_points, errors);
    get_num(j, "z_min_um", cfg.z_min_um, errors);
    get_num(j, "z_max_um", cfg.z_max_um, errors);
    get_num(j, "dt_ms", cfg.stepper.dt_ms, errors);
    get_long(j, "n_steps", cfg.stepper.n_steps, errors);
    get_int(j, "store_every", cfg.stepper.store_every, errors);
    get_num(j, "r_factor", cfg.r_factor, errors);
    get_num(j, "phi", cfg.phi, errors);
    get_int(j, "seed_count", cfg.seed_count, errors);
    get_num(j, "seed_threshold_frac", cfg.seed_threshold_frac, errors);
    get_num(j, "dip_envelope_window_um", cfg.dip_envelope_window_um, errors);
    get_num(j, "dip_min_contrast", cfg.dip_min_contrast, errors);
    get_num(j, "dip_min_envelope_frac", cfg.dip_min_envelope_frac, errors);
    get_num(j, "flip_probe_z_um", cfg.flip_probe_z_um, errors);
    get_int(j, "matrix_stride", cfg.outputs.matrix_stride, errors);

    if (j.contains("mode")) {
        const std::string m = j.at("mode").is_string() ? j.at("mode").get<std::string>() : "";
        if (m == "free_release")
            cfg.mode = ScenarioMode::free_release;
        else if (m == "trap")
            cfg.mode = ScenarioMode::trap;
        else
            errors.push_back("mode must be \"free_release\" or \"trap\"");
    } else {
        errors.push_back("missing required key: mode");
    }

    if (j.contains("outputs")) {
        if (j.at("outputs").is_array()) {
            cfg.outputs.artifacts.clear();
            for (const auto& a : j.at("outputs"))
                if (a.is_string())
                    cfg.outputs.artifacts.push_back(a.get<std::string>());
                else
                    errors.push_back("outputs entries must be strings");
        } else {
            errors.push_back("outputs must be an array of artifact names");
        }
    }
    auto get_clip = [&](const char* key, double& lo, double& hi) {
        if (!j.contains(key)) return;
        const auto& c = j.at(key);
        if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
            lo = c[0].get<double>();
            hi = c[1].get<double>();
        } else {
            errors.push_back(std::string(key) + " must be [lo, hi]");
        }
    };
    get_clip("density_clip", cfg.outputs.density_clip_lo, cfg.outputs.density_clip_hi);
    get_clip("velocity_clip", cfg.outputs.velocity_clip_lo, cfg.outputs.velocity_clip_hi);
    if (j.contains("snapshot_times_ms")) {
        if (j.at("snapshot_times_ms").is_array()) {
            cfg.outputs.snapshot_times_ms.clear();
            for (const auto& t : j.at("snapshot_times_ms"))
                if (t.is_number())
                    cfg.outputs.snapshot_times_ms.push_back(t.get<double>());
                else
                    errors.push_back("snapshot_times_ms entries must be numbers");
        } else {
            errors.push_back("snapshot_times_ms must be an array of numbers");
        }
    }

    cfg.physical.phi_rad = wrap_phase(cfg.phi);
    for (const auto& e : cfg.validate()) errors.push_back(e);
    if (!errors.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario config (" << errors.size() << " problems):";
        for (const auto& e : errors) msg << "\n  - " << e;
        throw std::invalid_argument(msg.str());
    }
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_config(buf.str(), fs::path(path).stem().string());
}

std::string config_to_json(const ScenarioConfig& cfg) {
    json j;
    j["mass_kg"] = cfg.physical.mass_kg;
    j["a_s_m"] = cfg.physical.a_s_m;
    j["n_atoms"] = cfg.physical.n_atoms;
    j["f_z_hz"] = cfg.physical.f_z_hz;
    j["f_perp_hz"] = cfg.physical.f_perp_hz;
    j["v0_over_h_hz"] = cfg.physical.v0_over_h_hz;
    j["ell_um"] = cfg.physical.ell_um;
    j["n_points"] = cfg.n_points;
    j["z_min_um"] = cfg.z_min_um;
    j["z_max_um"] = cfg.z_max_um;
    j["dt_ms"] = cfg.stepper.dt_ms;
    j["n_steps"] = cfg.stepper.n_steps;
    j["store_every"] = cfg.stepper.store_every;
    j["mode"] = (cfg.mode == ScenarioMode::trap) ? "trap" : "free_release";
    j["r_factor"] = cfg.r_factor;
    j["phi"] = cfg.phi;
    j["seed_count"] = cfg.seed_count;
    j["seed_threshold_frac"] = cfg.seed_threshold_frac;
    j["dip_envelope_window_um"] = cfg.dip_envelope_window_um;
    j["dip_min_contrast"] = cfg.dip_min_contrast;
    j["dip_min_envelope_frac"] = cfg.dip_min_envelope_frac;
    j["flip_probe_z_um"] = cfg.flip_probe_z_um;
    j["outputs"] = cfg.outputs.artifacts;
    j["density_clip"] = {cfg.outputs.density_clip_lo, cfg.outputs.density_clip_hi};
    j["velocity_clip"] = {cfg.outputs.velocity_clip_lo, cfg.outputs.velocity_clip_hi};
    j["matrix_stride"] = cfg.outputs.matrix_stride;
    j["snapshot_times_ms"] = cfg.outputs.snapshot_times_ms;
    return j.dump(2) + "\n";
}

ScenarioSetup prepare_scenario(const ScenarioConfig& cfg) {
    {
        const auto errors = cfg.validate();
        if (!errors.empty())
            throw std::invalid_argument("invalid scenario config: " + errors.front());
    }
    ScenarioSetup setup;
    setup.grid = Grid::make(cfg.n_points, cfg.z_min_um, cfg.z_max_um);
    setup.scaled = rescale(cfg.physical);
    if (cfg.mode == ScenarioMode::free_release) setup.scaled.omega_z_bar = 0.0;

    setup.f_eff_hz = effective_frequency(cfg.physical);
    setup.sigma_eff_um = effective_width(setup.f_eff_hz, cfg.physical.mass_kg);
    setup.sigma0_um = cfg.r_factor * setup.sigma_eff_um;

    setup.potential = (cfg.mode == ScenarioMode::trap)
                          ? harmonic_trap(setup.grid, setup.scaled)
                          : zero_potential(setup.grid);
    setup.psi0 = gaussian_superposition(setup.grid, cfg.physical.ell_um,
                                        setup.sigma0_um, cfg.physical.phi_rad);
    return setup;
}

namespace {

int nearest_frame(const FrameSeries& series, double t_ms) {
    int best = 0;
    double best_d = std::abs(series.times[0] - t_ms);
    for (std::size_t i = 1; i < series.times.size(); ++i) {
        const double d = std::abs(series.times[i] - t_ms);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

}  // namespace

std::vector<std::vector<double>> density_matrix(const ScenarioResult& r, int stride) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < r.series.frames.size(); i += stride)
        rows.push_back(density(r.series.frames[i]));
    return rows;
}

std::vector<std::vector<double>> velocity_matrix(const ScenarioResult& r, int stride) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < r.series.frames.size(); i += stride)
        rows.push_back(
            velocity_field(r.setup.grid, r.series.frames[i], r.setup.scaled).values);
    return rows;
}

ScenarioResult run_scenario_in_memory(const ScenarioConfig& cfg) {
    ScenarioResult result;
    result.config = cfg;
    result.setup = prepare_scenario(cfg);
    const ScenarioSetup& setup = result.setup;

    result.series = propagate(setup.psi0, setup.potential, setup.scaled, setup.grid,
                              cfg.stepper, {}, &result.diagnostics);

    if (cfg.wants("trajectories")) {
        const std::vector<double> seeds =
            seed_positions(setup.grid, setup.psi0, cfg.seed_count,
                           cfg.seed_threshold_frac);
        TrajectoryOptions topts;
        topts.seed_threshold_frac = cfg.seed_threshold_frac;
        result.trajectories =
            integrate_trajectories(setup.grid, result.series, seeds, setup.scaled, topts);
    }

    // Flip detection runs on the full stored history; the band signal is
    // accumulated frame by frame so the velocity matrix is never held whole.
    {
        std::vector<double> signal(result.series.frames.size());
        std::vector<std::vector<double>> vrow(1), nrow(1);
        for (std::size_t i = 0; i < result.series.frames.size(); ++i) {
            vrow[0] = velocity_field(setup.grid, result.series.frames[i], setup.scaled)
                          .values;
            nrow[0] = density(result.series.frames[i]);
            signal[i] =
                band_outflow_signal(vrow, nrow, setup.grid, cfg.flip_probe_z_um)[0];
        }
        result.flip_times_ms =
            flips_from_signal(result.series.times, signal, FlipOptions{}.persistence);
    }

    DipOptions dopts;
    dopts.envelope_window_um = cfg.dip_envelope_window_um;
    dopts.min_contrast = cfg.dip_min_contrast;
    dopts.min_envelope_frac = cfg.dip_min_envelope_frac;
    for (double t : cfg.outputs.snapshot_times_ms) {
        const int i = nearest_frame(result.series, t);
        DipSnapshot snap;
        snap.time_ms = result.series.times[i];
        snap.report = detect_dips(setup.grid, density(result.series.frames[i]), dopts);
        result.dip_snapshots.push_back(snap);
    }
    return result;
}

void write_artifacts(const ScenarioResult& result, const std::string& out_dir) {
    const ScenarioConfig& cfg = result.config;
    const ScenarioSetup& setup = result.setup;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    const int stride = cfg.outputs.matrix_stride;
    std::vector<double> strided_times;
    for (std::size_t i = 0; i < result.series.times.size(); i += stride)
        strided_times.push_back(result.series.times[i]);

    csv_write_column((dir / "grid.csv").string(), "z_um", setup.grid.z);
    csv_write_column((dir / "times.csv").string(), "t_ms", strided_times);

    if (cfg.wants("density"))
        csv_write_matrix((dir / "density.csv").string(), density_matrix(result, stride));
    if (cfg.wants("velocity"))
        csv_write_matrix((dir / "velocity.csv").string(), velocity_matrix(result, stride));
    if (cfg.wants("heatmaps")) {
        const auto dm = density_matrix(result, stride);
        write_pgm((dir / "density.pgm").string(),
                  render_heatmap(dm, cfg.outputs.density_clip_lo,
                                 cfg.outputs.density_clip_hi),
                  setup.grid.n_points, static_cast<int>(dm.size()));
        const auto vm = velocity_matrix(result, stride);
        write_pgm((dir / "velocity.pgm").string(),
                  render_heatmap(vm, cfg.outputs.velocity_clip_lo,
                                 cfg.outputs.velocity_clip_hi),
                  setup.grid.n_points, static_cast<int>(vm.size()));
    }
    if (cfg.wants("trajectories") && result.trajectories)
        csv_write_trajectories((dir / "trajectories.csv").string(),
                               *result.trajectories);
    if (cfg.wants("potential")) {
        const ScaledParams trap_scaled = rescale(cfg.physical);
        const PotentialField v_trap = harmonic_trap(setup.grid, trap_scaled);
        const PotentialField v_latt =
            lattice(setup.grid, lattice_v0_scaled(cfg.physical), cfg.physical.ell_um);
        csv_write_potential((dir / "potential.csv").string(), setup.grid,
                            v_trap.values, v_latt.values);
    }
    if (cfg.wants("frames")) {
        fs::create_directories(dir / "frames");
        for (double t : cfg.outputs.snapshot_times_ms) {
            const int i = nearest_frame(result.series, t);
            char label[32];
            std::snprintf(label, sizeof(label), "t%08.3fms.csv", result.series.times[i]);
            csv_write_frame((dir / "frames" / label).string(), setup.grid,
                            result.series.frames[i]);
        }
    }
    if (cfg.wants("report")) {
        json rep;
        rep["name"] = cfg.name;
        rep["mode"] = (cfg.mode == ScenarioMode::trap) ? "trap" : "free_release";
        rep["derived"] = {{"m_bar", setup.scaled.m_bar},
                          {"omega_z_bar", setup.scaled.omega_z_bar},
                          {"g1d_bar", setup.scaled.g1d_bar},
                          {"a_perp_um", setup.scaled.a_perp_um},
                          {"f_eff_hz", setup.f_eff_hz},
                          {"sigma_eff_um", setup.sigma_eff_um},
                          {"sigma0_um", setup.sigma0_um}};
        rep["diagnostics"] = {{"max_norm_drift", result.diagnostics.max_norm_drift},
                              {"max_energy_drift", result.diagnostics.max_energy_drift},
                              {"boundary_warning", result.diagnostics.boundary_warning},
                              {"aborted", false}};
        rep["flip_times_ms"] = result.flip_times_ms;
        json dips = json::array();
        for (const auto& snap : result.dip_snapshots) {
            json d;
            d["time_ms"] = snap.time_ms;
            d["count"] = snap.report.count();
            d["mean_spacing_um"] = snap.report.mean_spacing_um;
            json list = json::array();
            for (const auto& dip : snap.report.dips)
                list.push_back({{"position_um", dip.position_um},
                                {"depth_fraction", dip.depth_fraction},
                                {"half_width_um", dip.half_width_um}});
            d["dips"] = list;
            dips.push_back(d);
        }
        rep["dips"] = dips;
        if (result.trajectories) {
            int clamped = 0;
            for (auto c : result.trajectories->clamped) clamped += c;
            rep["trajectories"] = {
                {"count", static_cast<int>(result.trajectories->clamped.size())},
                {"clamped_count", clamped},
                {"seed_threshold_frac", result.trajectories->initial_band}};
        }
        std::ofstream f((dir / "report.json").string(), std::ios::binary);
        if (!f) throw std::runtime_error("cannot write report.json");
        f << rep.dump(2) << '\n';
    }
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir) {
    try {
        ScenarioResult result = run_scenario_in_memory(cfg);
        write_artifacts(result, out_dir);
        return result;
    } catch (const PropagationError& e) {
        // Dump the last good frame for diagnosis, then let the error rise.
        fs::create_directories(out_dir);
        const Grid grid = Grid::make(cfg.n_points, cfg.z_min_um, cfg.z_max_um);
        char label[48];
        std::snprintf(label, sizeof(label), "abort_t%08.3fms.csv",
                      e.last_good_frame.time_ms);
        csv_write_frame((fs::path(out_dir) / label).string(), grid, e.last_good_frame);
        throw;
    }
}

}  // namespace gpe
