#include "gpe/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpe {

double norm_integral(const Grid& grid, const Wavefunction& psi) {
    double s = 0.0;
    for (const auto& a : psi.amp) s += std::norm(a);
    return s * grid.dz_um;
}

void normalize(const Grid& grid, Wavefunction& psi) {
    const double n = norm_integral(grid, psi);
    if (!(n > 0.0)) throw std::runtime_error("cannot normalize a null wavefunction");
    const double scale = 1.0 / std::sqrt(n);
    for (auto& a : psi.amp) a *= scale;
}

Wavefunction gaussian_superposition(const Grid& grid, double ell_um,
                                    double sigma0_um, double phi_rad) {
    if (!(sigma0_um > 0.0))
        throw std::invalid_argument("gaussian_superposition requires sigma0 > 0");
    const double c = 0.5 * ell_um;
    if (c + 5.0 * sigma0_um >= grid.z_max_um || -c - 5.0 * sigma0_um <= grid.z_min_um)
        throw std::invalid_argument(
            "gaussian_superposition: clouds overflow the domain "
            "(|ell/2| + 5 sigma0 must fit inside the grid)");

    const std::complex<double> ph(std::cos(phi_rad), std::sin(phi_rad));
    Wavefunction psi;
    psi.amp.resize(grid.n_points);
    const double q = 1.0 / (4.0 * sigma0_um * sigma0_um);
    for (int j = 0; j < grid.n_points; ++j) {
        const double zp = grid.z[j] - c;
        const double zm = grid.z[j] + c;
        psi.amp[j] = std::exp(-zp * zp * q) + ph * std::exp(-zm * zm * q);
    }
    psi.time_ms = 0.0;
    normalize(grid, psi);
    return psi;
}

Wavefunction gaussian_packet(const Grid& grid, double z0_um, double sigma0_um,
                             double k_rad_um) {
    if (!(sigma0_um > 0.0))
        throw std::invalid_argument("gaussian_packet requires sigma0 > 0");
    Wavefunction psi;
    psi.amp.resize(grid.n_points);
    const double q = 1.0 / (4.0 * sigma0_um * sigma0_um);
    for (int j = 0; j < grid.n_points; ++j) {
        const double u = grid.z[j] - z0_um;
        const double env = std::exp(-u * u * q);
        psi.amp[j] = env * std::complex<double>(std::cos(k_rad_um * grid.z[j]),
                                                std::sin(k_rad_um * grid.z[j]));
    }
    psi.time_ms = 0.0;
    normalize(grid, psi);
    return psi;
}

double overlap_ratio(const Grid& grid, const Wavefunction& psi) {
    const int j0 = grid.index_near(0.0);
    const std::vector<double> n = density(psi);
    const double n_max = *std::max_element(n.begin(), n.end());
    if (!(n_max > 0.0)) throw std::runtime_error("overlap_ratio: empty density");
    return n[j0] / n_max;
}

double healing_length(double n0_per_um, double g_bar, const ScaledParams& s) {
    return s.hbar_bar / std::sqrt(s.m_bar * n0_per_um * g_bar);
}

double sound_speed(double n0_per_um, double g_bar, const ScaledParams& s) {
    return std::sqrt(n0_per_um * g_bar / s.m_bar);
}

Wavefunction dark_soliton_profile(const Grid& grid, double n0_per_um,
                                  double g_bar, const ScaledParams& s,
                                  double v_um_ms, double t_ms) {
    if (!(n0_per_um > 0.0))
        throw std::invalid_argument("dark_soliton_profile requires n0 > 0");
    const double c = sound_speed(n0_per_um, g_bar, s);
    if (std::abs(v_um_ms) > c)
        throw std::invalid_argument("dark_soliton_profile requires |v| <= c");
    const double beta = std::sqrt(1.0 - (v_um_ms / c) * (v_um_ms / c));
    const double chi = healing_length(n0_per_um, g_bar, s);
    const double mu = n0_per_um * g_bar;
    const double amp0 = std::sqrt(n0_per_um);
    const std::complex<double> rot(std::cos(mu * t_ms / s.hbar_bar),
                                   -std::sin(mu * t_ms / s.hbar_bar));

    Wavefunction psi;
    psi.amp.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double u = beta * (grid.z[j] - v_um_ms * t_ms) / chi;
        psi.amp[j] = amp0 * rot *
                     std::complex<double>(beta * std::tanh(u), v_um_ms / c);
    }
    psi.time_ms = t_ms;
    return psi;
}

std::vector<double> density(const Wavefunction& psi) {
    std::vector<double> n(psi.amp.size());
    for (std::size_t j = 0; j < psi.amp.size(); ++j) n[j] = std::norm(psi.amp[j]);
    return n;
}

PhaseProfile phase(const Wavefunction& psi) {
    const std::size_t n_pts = psi.amp.size();
    PhaseProfile out;
    out.theta.resize(n_pts);
    out.branch_flag.assign(n_pts, 0);
    if (n_pts == 0) return out;

    const std::vector<double> n = density(psi);
    const double n_max = *std::max_element(n.begin(), n.end());
    const double floor = 1e-12 * n_max;

    out.theta[0] = std::arg(psi.amp[0]);
    for (std::size_t j = 1; j < n_pts; ++j) {
        // Increment by the wrapped phase difference; across near-zero density
        // the branch is ill-defined, so the point is flagged instead of the
        // value being trusted.
        const std::complex<double> ratio = psi.amp[j] * std::conj(psi.amp[j - 1]);
        const double d = std::arg(ratio);
        out.theta[j] = out.theta[j - 1] + d;
        if (n[j] < floor || n[j - 1] < floor) out.branch_flag[j] = 1;
    }
    return out;
}

}  // namespace gpe
