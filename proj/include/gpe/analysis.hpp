#pragma once

#include <vector>

#include "gpe/grid.hpp"

namespace gpe {

/// One detected density dip.
struct Dip {
    double position_um = 0.0;       // parabolic sub-grid refinement
    double depth_fraction = 0.0;    // (envelope - n_min)/envelope, 1 = full dip
    double half_width_um = 0.0;     // width at half depth
};

struct DipReport {
    std::vector<Dip> dips;          // positions strictly increasing
    double mean_spacing_um = 0.0;   // mean adjacent-dip distance (0 if < 2 dips)
    int count() const { return static_cast<int>(dips.size()); }
};

struct DipOptions {
    double envelope_window_um = 5.0;   // moving-median window
    double min_contrast = 0.3;         // depth fraction required to count
    double min_envelope_frac = 0.005;  // of the frame maximum; skips vacuum ripple
};

/// Local minima whose depth below a moving-median envelope exceeds
/// min_contrast. The envelope window is periodic, matching the grid.
DipReport detect_dips(const Grid& grid, const std::vector<double>& dens,
                      const DipOptions& opts = {});

struct FlipOptions {
    double probe_z_um = 5.0;  // half-width of the probed central band
    int persistence = 3;      // frames the new sign must hold
};

/// Times at which the central-band flow reverses. The probed signal is the
/// density-weighted mean of sign(z) * v over |z| < probe_z (net outward flux
/// per particle), which is insensitive to the z = 0 node and to clamped
/// velocities in near-vacuum regions. A flip is a sign change that persists
/// for at least `persistence` frames on both sides.
std::vector<double> velocity_flip_times(const std::vector<double>& times,
                                        const std::vector<std::vector<double>>& velocity,
                                        const std::vector<std::vector<double>>& dens,
                                        const Grid& grid,
                                        const FlipOptions& opts = {});

/// The band signal used by velocity_flip_times, one value per frame.
std::vector<double> band_outflow_signal(const std::vector<std::vector<double>>& velocity,
                                        const std::vector<std::vector<double>>& dens,
                                        const Grid& grid, double probe_z_um);

/// Sign-persistent zero crossings of an arbitrary per-frame signal.
std::vector<double> flips_from_signal(const std::vector<double>& times,
                                      const std::vector<double>& signal,
                                      int persistence = 3);

}  // namespace gpe
