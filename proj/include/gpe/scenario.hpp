#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpe/analysis.hpp"
#include "gpe/bohmian.hpp"
#include "gpe/grid.hpp"
#include "gpe/potentials.hpp"
#include "gpe/propagator.hpp"
#include "gpe/states.hpp"
#include "gpe/units.hpp"

namespace gpe {

enum class ScenarioMode { free_release, trap };

struct OutputOptions {
    // Any of: density, velocity, trajectories, report, heatmaps, frames,
    // potential.
    std::vector<std::string> artifacts = {"density", "velocity", "trajectories",
                                          "report", "heatmaps"};
    double density_clip_lo = 0.0;
    double density_clip_hi = 0.12;
    double velocity_clip_lo = -1.0;
    double velocity_clip_hi = 1.0;
    int matrix_stride = 1;                  // stored frames per matrix row
    std::vector<double> snapshot_times_ms;  // frame exports + dip reports
};

/// Declarative description of one run. Loaded from a flat JSON document;
/// unknown keys are errors, as are all violated value constraints (every
/// violation is reported, not only the first).
struct ScenarioConfig {
    std::string name = "scenario";
    PhysicalParams physical;
    int n_points = 1024;
    double z_min_um = -51.2;
    double z_max_um = 51.2;
    StepperConfig stepper;
    ScenarioMode mode = ScenarioMode::free_release;
    double r_factor = 1.0;  // sigma0 = r_factor * sigma_eff
    double phi = 0.0;       // rad; fed into physical.phi_rad
    int seed_count = 50;
    double seed_threshold_frac = 0.005;
    double dip_envelope_window_um = 5.0;
    double dip_min_contrast = 0.3;
    double dip_min_envelope_frac = 0.005;
    double flip_probe_z_um = 5.0;
    OutputOptions outputs;

    bool wants(const std::string& artifact) const;
    std::vector<std::string> validate() const;
};

ScenarioConfig load_config(const std::string& json_text, const std::string& name);
ScenarioConfig load_config_file(const std::string& path);
std::string config_to_json(const ScenarioConfig& cfg);

/// Everything derived from the config before stepping.
struct ScenarioSetup {
    Grid grid;
    ScaledParams scaled;      // omega_z_bar forced to 0 in free_release mode
    PotentialField potential; // the potential actually propagated (no lattice)
    Wavefunction psi0;
    double f_eff_hz = 0.0;
    double sigma_eff_um = 0.0;
    double sigma0_um = 0.0;
};
ScenarioSetup prepare_scenario(const ScenarioConfig& cfg);

struct DipSnapshot {
    double time_ms = 0.0;
    DipReport report;
};

/// In-memory result of a full pipeline run.
struct ScenarioResult {
    ScenarioConfig config;
    ScenarioSetup setup;
    FrameSeries series;
    PropagateDiagnostics diagnostics;
    std::optional<TrajectorySet> trajectories;
    std::vector<double> flip_times_ms;
    std::vector<DipSnapshot> dip_snapshots;
};

/// units -> grid/potentials -> states -> propagator -> bohmian -> analysis.
/// Deterministic given the config; no randomness anywhere.
ScenarioResult run_scenario_in_memory(const ScenarioConfig& cfg);

/// Run and write all requested artifacts into out_dir. On a propagation
/// abort the last good frame is dumped there before the error propagates.
ScenarioResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir);

/// Write the artifacts of an existing in-memory result.
void write_artifacts(const ScenarioResult& result, const std::string& out_dir);

/// Velocity (and density) rows for the stored frames, decimated by stride.
std::vector<std::vector<double>> density_matrix(const ScenarioResult& r, int stride);
std::vector<std::vector<double>> velocity_matrix(const ScenarioResult& r, int stride);

// Preset registry (one per reproduced figure panel).
std::vector<std::string> preset_names();
ScenarioConfig preset_config(const std::string& name);

}  // namespace gpe
