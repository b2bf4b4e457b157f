#pragma once

#include <string>
#include <vector>

namespace gpe {

// CODATA 2018 values.
inline constexpr double kPlanckH = 6.62607015e-34;       // J s
inline constexpr double kHbar = 1.0545718176461565e-34;  // J s

/// Laboratory parameters in SI units (plus the relative phase between the
/// two clouds, which is dimensionless and carried along for convenience).
struct PhysicalParams {
    double mass_kg = 1.44e-25;     // atom mass
    double a_s_m = 4.761e-9;       // s-wave scattering length (repulsive)
    int n_atoms = 950;             // atom count
    double f_z_hz = 50.0;          // longitudinal trap frequency
    double f_perp_hz = 408.0;      // transverse trap frequency
    double v0_over_h_hz = 850.0;   // lattice barrier height / h
    double ell_um = 5.7;           // lattice period (peak-to-peak distance)
    double phi_rad = 0.0;          // relative phase, normalized to (-pi, pi]

    /// Returns a list of violated constraints; empty means valid.
    std::vector<std::string> validate() const;
};

/// Working quantities of the micron/millisecond rescaling with hbar = 1.
/// Energies are then measured in hbar/ms, masses in hbar ms/um^2.
struct ScaledParams {
    double hbar_bar = 1.0;
    double m_bar = 0.0;        // mass
    double omega_z_bar = 0.0;  // trap angular frequency, rad/ms
    double g1d_bar = 0.0;      // 1D coupling
    double a_perp_um = 0.0;    // transverse oscillator length, um
};

struct Coupling1D {
    double g1d_si = 0.0;    // kg m^3 / s^2
    double a_perp_m = 0.0;  // m
};

/// Effective 1D coupling g_1D = 2 hbar w_perp a_s N (wavefunction normalized
/// to unity) and transverse oscillator length a_perp = sqrt(hbar/(m w_perp)).
Coupling1D derive_coupling(const PhysicalParams& p);

/// Rescale to micron/millisecond units with hbar = 1.
ScaledParams rescale(const PhysicalParams& p);

/// Inverse of rescale() for the derived quantities (round-trip checks).
struct SiParams {
    double mass_kg = 0.0;
    double omega_z_rad_s = 0.0;
    double g1d_si = 0.0;
};
SiParams to_si(const ScaledParams& s);

/// Wrap an angle to (-pi, pi].
double wrap_phase(double phi);

}  // namespace gpe
