#include "gpe/units.hpp"

#include <cmath>

namespace gpe {

std::vector<std::string> PhysicalParams::validate() const {
    std::vector<std::string> errors;
    if (!(mass_kg > 0.0)) errors.push_back("mass_kg must be > 0");
    if (!(a_s_m > 0.0)) errors.push_back("a_s_m must be > 0 (repulsive regime only)");
    if (n_atoms < 1) errors.push_back("n_atoms must be >= 1");
    if (!(f_z_hz >= 0.0)) errors.push_back("f_z_hz must be >= 0");
    if (!(f_perp_hz > 0.0)) errors.push_back("f_perp_hz must be > 0");
    if (!(v0_over_h_hz >= 0.0)) errors.push_back("v0_over_h_hz must be >= 0");
    if (!(ell_um > 0.0)) errors.push_back("ell_um must be > 0");
    if (!std::isfinite(phi_rad)) errors.push_back("phi_rad must be finite");
    return errors;
}

Coupling1D derive_coupling(const PhysicalParams& p) {
    const double omega_perp = 2.0 * M_PI * p.f_perp_hz;
    Coupling1D c;
    c.g1d_si = 2.0 * kHbar * omega_perp * p.a_s_m * static_cast<double>(p.n_atoms);
    c.a_perp_m = std::sqrt(kHbar / (p.mass_kg * omega_perp));
    return c;
}

ScaledParams rescale(const PhysicalParams& p) {
    // Lengths in um, times in ms, both sides of the equation divided by hbar.
    // The natural mass unit is then hbar ms/um^2 = hbar * 1e9 in SI, and the
    // natural energy unit is hbar/ms.
    const Coupling1D c = derive_coupling(p);
    ScaledParams s;
    s.hbar_bar = 1.0;
    s.m_bar = p.mass_kg * 1e-9 / kHbar;
    s.omega_z_bar = 2.0 * M_PI * p.f_z_hz * 1e-3;
    s.g1d_bar = c.g1d_si * 1e3 / kHbar;
    s.a_perp_um = c.a_perp_m * 1e6;
    return s;
}

SiParams to_si(const ScaledParams& s) {
    SiParams p;
    p.mass_kg = s.m_bar * kHbar * 1e9;
    p.omega_z_rad_s = s.omega_z_bar * 1e3;
    p.g1d_si = s.g1d_bar * kHbar * 1e-3;
    return p;
}

double wrap_phase(double phi) {
    double w = std::remainder(phi, 2.0 * M_PI);
    if (w <= -M_PI) w += 2.0 * M_PI;  // remainder yields [-pi, pi]; map -pi to +pi
    return w;
}

}  // namespace gpe
