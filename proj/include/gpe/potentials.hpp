#pragma once

#include "gpe/grid.hpp"
#include "gpe/units.hpp"

namespace gpe {

/// Energy samples on a Grid, in scaled units (hbar/ms).
struct PotentialField {
    std::vector<double> values;
};

/// V(z) = 1/2 m_bar omega_z_bar^2 z^2
PotentialField harmonic_trap(const Grid& grid, const ScaledParams& s);

/// V(z) = V0 cos^2(pi z / ell), with v0_scaled in hbar/ms and ell in um.
/// Used for documentation and for fixing initial-state parameters; it is
/// never switched on during propagation.
PotentialField lattice(const Grid& grid, double v0_scaled, double ell_um);

/// Zero potential (free release).
PotentialField zero_potential(const Grid& grid);

/// Lattice barrier height in scaled units, hbar/ms.
double lattice_v0_scaled(const PhysicalParams& p);

/// Effective frequency of one lattice well, f_eff = omega_eff/(2 pi) with
/// omega_eff = sqrt(2 pi^2 V0 / (m ell^2)). Returns Hz.
double effective_frequency(const PhysicalParams& p);

/// Ground-state width of a harmonic well, sigma = sqrt(hbar/(2 m omega)),
/// for a frequency given in Hz. Returns um.
double effective_width(double f_eff_hz, double mass_kg);

}  // namespace gpe
