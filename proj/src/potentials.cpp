#include "gpe/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe {

PotentialField harmonic_trap(const Grid& grid, const ScaledParams& s) {
    PotentialField v;
    v.values.resize(grid.n_points);
    const double c = 0.5 * s.m_bar * s.omega_z_bar * s.omega_z_bar;
    for (int j = 0; j < grid.n_points; ++j)
        v.values[j] = c * grid.z[j] * grid.z[j];
    return v;
}

PotentialField lattice(const Grid& grid, double v0_scaled, double ell_um) {
    if (!(ell_um > 0.0)) throw std::invalid_argument("lattice requires ell_um > 0");
    PotentialField v;
    v.values.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double c = std::cos(M_PI * grid.z[j] / ell_um);
        v.values[j] = v0_scaled * c * c;
    }
    return v;
}

PotentialField zero_potential(const Grid& grid) {
    PotentialField v;
    v.values.assign(grid.n_points, 0.0);
    return v;
}

double lattice_v0_scaled(const PhysicalParams& p) {
    // V0 = h * (V0/h); energies divide by hbar and pick up 1e-3 from ms.
    return kPlanckH * p.v0_over_h_hz * 1e-3 / kHbar;  // = 2 pi f * 1e-3
}

double effective_frequency(const PhysicalParams& p) {
    if (!(p.v0_over_h_hz > 0.0))
        throw std::invalid_argument("effective_frequency requires V0 > 0");
    const double v0 = kPlanckH * p.v0_over_h_hz;          // J
    const double ell = p.ell_um * 1e-6;                   // m
    const double omega_eff = std::sqrt(2.0 * M_PI * M_PI * v0 / (p.mass_kg * ell * ell));
    return omega_eff / (2.0 * M_PI);
}

double effective_width(double f_eff_hz, double mass_kg) {
    if (!(f_eff_hz > 0.0))
        throw std::invalid_argument("effective_width requires f_eff > 0");
    const double omega = 2.0 * M_PI * f_eff_hz;
    return std::sqrt(kHbar / (2.0 * mass_kg * omega)) * 1e6;
}

}  // namespace gpe
