#include "gpe/linear_oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gpe {
namespace oracle {

namespace {
using cplx = std::complex<double>;

// Normalize a plain density field to unit discrete integral.
void normalize_density(const Grid& grid, std::vector<double>& n) {
    double s = 0.0;
    for (double v : n) s += v;
    s *= grid.dz_um;
    if (!(s > 0.0)) throw std::runtime_error("cannot normalize a null density");
    for (double& v : n) v /= s;
}
}  // namespace

double spread_time(double sigma0_um, const ScaledParams& s) {
    if (!(sigma0_um > 0.0)) throw std::invalid_argument("spread_time requires sigma0 > 0");
    return 2.0 * s.m_bar * sigma0_um * sigma0_um / s.hbar_bar;
}

double spread_width(double sigma0_um, double t_ms, const ScaledParams& s) {
    const double tau = spread_time(sigma0_um, s);
    const double r = t_ms / tau;
    return sigma0_um * std::sqrt(1.0 + r * r);
}

Wavefunction free_packet(const Grid& grid, const LinearGaussianSpec& spec,
                         double t_ms, const ScaledParams& s) {
    const double tau = spread_time(spec.sigma0_um, s);
    const cplx stretch(1.0, t_ms / tau);  // sigma~_t / sigma0
    const cplx amp0 = std::pow(2.0 * M_PI * spec.sigma0_um * spec.sigma0_um, -0.25) /
                      std::sqrt(stretch);
    const cplx phase0(std::cos(spec.phi_rad), std::sin(spec.phi_rad));
    const double q = 1.0 / (4.0 * spec.sigma0_um * spec.sigma0_um);

    Wavefunction psi;
    psi.amp.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double u = grid.z[j] - spec.z0_um;
        psi.amp[j] = amp0 * phase0 * std::exp(-u * u * q / stretch);
    }
    psi.time_ms = t_ms;
    return psi;
}

Wavefunction free_superposition(const Grid& grid, const LinearGaussianSpec& a,
                                const LinearGaussianSpec& b, double t_ms,
                                const ScaledParams& s) {
    const Wavefunction pa = free_packet(grid, a, t_ms, s);
    const Wavefunction pb = free_packet(grid, b, t_ms, s);
    Wavefunction psi;
    psi.amp.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) psi.amp[j] = pa.amp[j] + pb.amp[j];
    psi.time_ms = t_ms;
    normalize(grid, psi);
    return psi;
}

std::vector<double> free_superposition_density(const Grid& grid,
                                               const LinearGaussianSpec& a,
                                               const LinearGaussianSpec& b,
                                               double t_ms,
                                               const ScaledParams& s) {
    return density(free_superposition(grid, a, b, t_ms, s));
}

std::vector<double> overlapped_density_approximation(const Grid& grid,
                                                     double ell_um,
                                                     double sigma0_um,
                                                     double phi_rad,
                                                     double t_ms,
                                                     const ScaledParams& s) {
    const double st = spread_width(sigma0_um, t_ms, s);
    const double st2 = st * st;
    // Same cosine argument as the interference term of the exact density,
    // halved: n ~ 4 exp(-z^2/2 sigma_t^2) cos^2(arg/2 + phi/2).
    const double arg_c = s.hbar_bar * t_ms * ell_um /
                         (8.0 * s.m_bar * sigma0_um * sigma0_um * st2);
    std::vector<double> n(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double z = grid.z[j];
        const double c = std::cos(arg_c * z + 0.5 * phi_rad);
        n[j] = 4.0 * std::exp(-z * z / (2.0 * st2)) * c * c;
    }
    normalize_density(grid, n);
    return n;
}

double fringe_spacing_exact(double t_ms, double sigma0_um, double ell_um,
                            const ScaledParams& s) {
    if (!(t_ms > 0.0)) throw std::invalid_argument("fringe spacing requires t > 0");
    const double st = spread_width(sigma0_um, t_ms, s);
    return 8.0 * M_PI * s.m_bar * sigma0_um * sigma0_um * st * st /
           (s.hbar_bar * t_ms * ell_um);
}

double fringe_spacing_asymptotic(double t_ms, double ell_um,
                                 const ScaledParams& s) {
    if (!(t_ms > 0.0)) throw std::invalid_argument("fringe spacing requires t > 0");
    return 2.0 * M_PI * s.hbar_bar * t_ms / (s.m_bar * ell_um);
}

double coherent_width(const ScaledParams& s) {
    if (!(s.omega_z_bar > 0.0))
        throw std::invalid_argument("coherent_width requires omega_z > 0");
    return std::sqrt(s.hbar_bar / (2.0 * s.m_bar * s.omega_z_bar));
}

Wavefunction coherent_state(const Grid& grid, double z0_um, double t_ms,
                            const ScaledParams& s) {
    const double w = s.omega_z_bar;
    const double sigma = coherent_width(s);
    const double zc = z0_um * std::cos(w * t_ms);
    const double q = 1.0 / (4.0 * sigma * sigma);
    const double mw = s.m_bar * w / (4.0 * s.hbar_bar);
    const double sin_wt = std::sin(w * t_ms);
    const double sin_2wt = std::sin(2.0 * w * t_ms);

    Wavefunction psi;
    psi.amp.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double z = grid.z[j];
        const double u = z - zc;
        const double env = std::exp(-u * u * q);
        const double theta = -0.5 * w * t_ms -
                             mw * (4.0 * z * z0_um * sin_wt - z0_um * z0_um * sin_2wt);
        psi.amp[j] = env * cplx(std::cos(theta), std::sin(theta));
    }
    psi.time_ms = t_ms;
    normalize(grid, psi);
    return psi;
}

double coherent_trajectory(double z_start_um, double z0_um, double t_ms,
                           const ScaledParams& s) {
    return z_start_um - z0_um + z0_um * std::cos(s.omega_z_bar * t_ms);
}

double quarter_period_width(double omega_eff_rad_ms, double omega_z_rad_ms,
                            double m_bar) {
    if (!(omega_eff_rad_ms > 0.0) || !(omega_z_rad_ms > 0.0))
        throw std::invalid_argument("quarter_period_width requires positive frequencies");
    return std::sqrt(omega_eff_rad_ms /
                     (2.0 * m_bar * omega_z_rad_ms * omega_z_rad_ms));
}

}  // namespace oracle
}  // namespace gpe
