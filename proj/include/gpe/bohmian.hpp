#pragma once

#include <cstdint>
#include <vector>

#include "gpe/grid.hpp"
#include "gpe/propagator.hpp"
#include "gpe/states.hpp"
#include "gpe/units.hpp"

namespace gpe {

/// Regularization used wherever the flux velocity j/n is evaluated: below
/// floor_frac of the current density maximum the velocity is still computed
/// (against the floored density) but clamped to +-v_max and masked.
struct VelocityRegularization {
    double floor_frac = 1e-12;
    double v_max_um_ms = 25.0;
};

/// Flux velocity v = j/n on the grid at one instant.
struct VelocityField {
    std::vector<double> values;  // um/ms
    double time_ms = 0.0;
    std::vector<std::uint8_t> low_density_mask;
};

/// v = (hbar/m) Im(psi* d_z psi)/|psi|^2 with a spectral derivative.
VelocityField velocity_field(const Grid& grid, const Wavefunction& psi,
                             const ScaledParams& s,
                             const VelocityRegularization& reg = {});

/// Bohm quantum potential Q = -(hbar^2/4m)[n''/n - (n'/n)^2 / 2] with
/// spectral derivatives of n, regularized on the low-density mask.
struct QuantumPotentialField {
    std::vector<double> values;  // hbar/ms
    std::vector<std::uint8_t> low_density_mask;
};
QuantumPotentialField quantum_potential(const Grid& grid, const Wavefunction& psi,
                                        const ScaledParams& s,
                                        double floor_frac = 1e-12);

/// m_count seed positions, equidistant in arc length over the union of grid
/// intervals where n(z,0) >= threshold_frac * n_max. Degenerate supports
/// collapse to a single seed. An empty support is an error.
std::vector<double> seed_positions(const Grid& grid, const Wavefunction& psi0,
                                   int m_count, double threshold_frac);

/// Positions of M flux trajectories sampled at the stored frame times.
struct TrajectorySet {
    std::vector<double> times;                // ms
    std::vector<std::vector<double>> positions;  // [time][trajectory], um
    std::vector<std::uint8_t> clamped;        // per trajectory: entered a masked region
    double initial_band = 0.0;                // seed threshold fraction
};

struct TrajectoryOptions {
    VelocityRegularization reg;
    double max_frame_spacing_ms = 0.05;  // refuse sparser field histories
    double seed_threshold_frac = 0.0;    // recorded into TrajectorySet
};

/// Integrate the seeds through the stored field history with an explicit
/// midpoint rule per stored interval. The velocity is evaluated at off-grid
/// positions by exact spectral synthesis of psi (plane-wave sum); the
/// velocity field at the interval midpoint is the average of the bracketing
/// frames' fields. Trajectories entering a masked low-density region get the
/// clamped velocity and are flagged, never dropped.
TrajectorySet integrate_trajectories(const Grid& grid, const FrameSeries& series,
                                     const std::vector<double>& seeds,
                                     const ScaledParams& s,
                                     const TrajectoryOptions& opts = {});

/// Fraction of the total density lying left of x (linear interpolation in
/// the cumulative integral); the transported quantile of a trajectory.
double left_density_fraction(const Grid& grid, const std::vector<double>& dens,
                             double x_um);

}  // namespace gpe
