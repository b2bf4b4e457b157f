#pragma once

#include "gpe/grid.hpp"
#include "gpe/states.hpp"
#include "gpe/units.hpp"

namespace gpe {

/// Closed-form linear-case (g = 0) references. These share no stepping code
/// with the solver, so equivalence tests against it are meaningful.
namespace oracle {

/// One free Gaussian packet of the superposition ansatz.
struct LinearGaussianSpec {
    double z0_um = 0.0;
    double sigma0_um = 1.0;
    double phi_rad = 0.0;
};

/// Spreading time scale tau = 2 m sigma0^2 / hbar (scaled units, ms).
double spread_time(double sigma0_um, const ScaledParams& s);

/// sigma_t = sigma0 sqrt(1 + (t/tau)^2).
double spread_width(double sigma0_um, double t_ms, const ScaledParams& s);

/// Freely evolved normalized Gaussian packet (analytic, on the grid).
Wavefunction free_packet(const Grid& grid, const LinearGaussianSpec& spec,
                         double t_ms, const ScaledParams& s);

/// Free two-packet superposition psi_a + e^{i(phi_b - phi_a)} psi_b, analytic
/// and normalized to unit discrete integral on the grid.
Wavefunction free_superposition(const Grid& grid, const LinearGaussianSpec& a,
                                const LinearGaussianSpec& b, double t_ms,
                                const ScaledParams& s);

/// Density of free_superposition (n+ + n- + interference term).
std::vector<double> free_superposition_density(const Grid& grid,
                                               const LinearGaussianSpec& a,
                                               const LinearGaussianSpec& b,
                                               double t_ms,
                                               const ScaledParams& s);

/// Strong-overlap approximation n ~ 4 e^{-z^2/2 sigma_t^2}
/// cos^2(arg/2 - phi/2) for packets at +-ell/2, normalized to unit discrete
/// integral for comparison with the exact form.
std::vector<double> overlapped_density_approximation(const Grid& grid,
                                                     double ell_um,
                                                     double sigma0_um,
                                                     double phi_rad,
                                                     double t_ms,
                                                     const ScaledParams& s);

/// Distance between consecutive interference extrema,
/// exact = 8 pi m sigma0^2 sigma_t^2 / (hbar t ell).
double fringe_spacing_exact(double t_ms, double sigma0_um, double ell_um,
                            const ScaledParams& s);

/// Long-time limit 2 pi hbar t / (m ell), independent of sigma0.
double fringe_spacing_asymptotic(double t_ms, double ell_um,
                                 const ScaledParams& s);

/// Width of the coherent (non-spreading) packet in the trap,
/// sigma_c = sqrt(hbar/(2 m omega_z)). um.
double coherent_width(const ScaledParams& s);

/// Coherent-state wavefunction in the harmonic trap: a Gaussian of constant
/// width sigma_c released from z0, with the exact oscillating phase. The
/// internal width is enforced to sigma_c.
Wavefunction coherent_state(const Grid& grid, double z0_um, double t_ms,
                            const ScaledParams& s);

/// Flux trajectory of the coherent state: z(t) = z(0) - z0 + z0 cos(w t).
double coherent_trajectory(double z_start_um, double z0_um, double t_ms,
                           const ScaledParams& s);

/// Spreading bound inside the trap at t = T/4,
/// sigma_{pi/2} = sqrt(hbar omega_eff / (2 m omega_z^2)). All arguments in
/// scaled units (rad/ms and the scaled mass); returns um.
double quarter_period_width(double omega_eff_rad_ms, double omega_z_rad_ms,
                            double m_bar);

}  // namespace oracle
}  // namespace gpe
