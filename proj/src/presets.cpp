#include <cmath>
#include <stdexcept>

#include "gpe/scenario.hpp"

namespace gpe {

namespace {

// Shared laboratory parameters of every reproduced scene.
ScenarioConfig base_config() {
    ScenarioConfig cfg;
    cfg.physical = PhysicalParams{};  // 950 atoms, f_perp 408 Hz, V0/h 850 Hz
    cfg.n_points = 1024;
    cfg.z_min_um = -51.2;
    cfg.z_max_um = 51.2;
    cfg.stepper.dt_ms = 1e-3;
    cfg.stepper.store_every = 10;
    cfg.seed_count = 50;
    cfg.seed_threshold_frac = 0.005;
    return cfg;
}

ScenarioConfig free_release(double ell_um, double r, double phi, double t_ms) {
    ScenarioConfig cfg = base_config();
    cfg.mode = ScenarioMode::free_release;
    cfg.physical.ell_um = ell_um;
    cfg.r_factor = r;
    cfg.phi = phi;
    cfg.physical.phi_rad = wrap_phase(phi);
    cfg.stepper.n_steps = static_cast<long>(std::lround(t_ms / cfg.stepper.dt_ms));
    cfg.outputs.density_clip_lo = 0.0;
    cfg.outputs.density_clip_hi = 0.12;
    cfg.outputs.velocity_clip_lo = -1.0;
    cfg.outputs.velocity_clip_hi = 1.0;
    cfg.outputs.matrix_stride = 1;
    cfg.outputs.artifacts = {"density", "velocity", "trajectories",
                             "report", "heatmaps", "frames"};
    return cfg;
}

ScenarioConfig trap(double ell_um) {
    ScenarioConfig cfg = base_config();
    cfg.mode = ScenarioMode::trap;
    cfg.physical.ell_um = ell_um;
    cfg.r_factor = 1.0;
    cfg.phi = 0.0;
    cfg.stepper.n_steps = 80000;  // 80 ms, four trap periods
    cfg.outputs.density_clip_lo = 0.0;
    cfg.outputs.density_clip_hi = 0.1;
    cfg.outputs.velocity_clip_lo = -5.0;
    cfg.outputs.velocity_clip_hi = 5.0;
    cfg.outputs.matrix_stride = 10;
    cfg.outputs.artifacts = {"density", "velocity", "trajectories",
                             "report", "heatmaps", "frames"};
    cfg.outputs.snapshot_times_ms = {5.00, 35.20, 55.37, 65.50, 75.62};
    return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig1",     "fig2a",    "fig2b",    "fig2c",  "fig3a",  "fig3b",
            "fig3c",    "fig4a_p2", "fig4a_m2", "fig4b",  "fig4d",  "fig4d_p2",
            "fig4d_m2", "fig5a",    "fig5b",    "fig5c",  "fig6a",  "fig6b",
            "fig6c",    "fig7a",    "fig7b"};
}

ScenarioConfig preset_config(const std::string& name) {
    const double pi = M_PI;
    ScenarioConfig cfg;

    if (name == "fig1") {
        // Combined trap + lattice potential; no meaningful propagation.
        cfg = base_config();
        cfg.mode = ScenarioMode::trap;
        cfg.stepper.n_steps = 1;
        cfg.stepper.store_every = 1;
        cfg.outputs.artifacts = {"potential", "report"};
    } else if (name == "fig2a") {
        cfg = free_release(5.7, 1.0, 0.0, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 1.0, 3.0, 5.0};
    } else if (name == "fig2b") {
        cfg = free_release(5.7, 2.5, 0.0, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 1.0, 3.0, 5.0};
    } else if (name == "fig2c") {
        cfg = free_release(5.7, 3.2, 0.0, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 1.0, 3.0, 5.0};
    } else if (name == "fig3a") {
        cfg = free_release(5.7, 1.0, 0.0, 3.0);
        cfg.outputs.snapshot_times_ms = {0.0, 3.0};
    } else if (name == "fig3b") {
        cfg = free_release(5.7, 2.5, 0.0, 3.0);
        cfg.outputs.snapshot_times_ms = {0.0, 3.0};
    } else if (name == "fig3c") {
        cfg = free_release(5.7, 3.2, 0.0, 3.0);
        cfg.outputs.snapshot_times_ms = {0.0, 3.0};
    } else if (name == "fig4a_p2") {
        cfg = free_release(5.7, 1.0, 0.5 * pi, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 5.0};
    } else if (name == "fig4a_m2") {
        cfg = free_release(5.7, 1.0, -0.5 * pi, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 5.0};
    } else if (name == "fig4b") {
        cfg = free_release(5.7, 1.0, pi, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 5.0};
    } else if (name == "fig4d") {
        cfg = free_release(5.7, 3.2, pi, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 5.0};
    } else if (name == "fig4d_p2") {
        cfg = free_release(5.7, 3.2, 0.5 * pi, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 5.0};
    } else if (name == "fig4d_m2") {
        cfg = free_release(5.7, 3.2, -0.5 * pi, 5.0);
        cfg.outputs.snapshot_times_ms = {0.0, 5.0};
    } else if (name == "fig5a" || name == "fig6a" || name == "fig7a") {
        cfg = trap(5.7);
    } else if (name == "fig5b" || name == "fig6b") {
        cfg = trap(15.0);
    } else if (name == "fig5c" || name == "fig6c" || name == "fig7b") {
        cfg = trap(26.0);
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    cfg.name = name;
    return cfg;
}

}  // namespace gpe
