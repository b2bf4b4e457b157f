#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gpe/grid.hpp"
#include "gpe/units.hpp"

namespace gpe {

/// Complex order parameter sampled on a Grid (units um^(-1/2), scaled),
/// plus its timestamp in ms.
struct Wavefunction {
    std::vector<std::complex<double>> amp;
    double time_ms = 0.0;
};

/// Discrete norm integral dz * sum |psi|^2 on the periodic grid.
double norm_integral(const Grid& grid, const Wavefunction& psi);

/// Rescale amplitudes so that norm_integral() == 1.
void normalize(const Grid& grid, Wavefunction& psi);

/// Coherent superposition of two identical Gaussians centered at +-ell/2,
/// psi ~ exp(-(z-ell/2)^2/4 sigma0^2) + e^{i phi} exp(-(z+ell/2)^2/4 sigma0^2),
/// numerically normalized to unity. Throws if the clouds would overflow the
/// domain (|ell/2| + 5 sigma0 must stay inside both edges).
Wavefunction gaussian_superposition(const Grid& grid, double ell_um,
                                    double sigma0_um, double phi_rad);

/// Single normalized Gaussian centered at z0 with width sigma0 (density
/// standard deviation), optional plane-wave factor e^{i k z}.
Wavefunction gaussian_packet(const Grid& grid, double z0_um, double sigma0_um,
                             double k_rad_um = 0.0);

/// Ratio S = n(0,0) / n_max, the initial overlap measure.
double overlap_ratio(const Grid& grid, const Wavefunction& psi);

/// Analytic dark-soliton reference profile on a constant background n0:
/// psi = sqrt(n0) e^{-i mu t} [beta tanh(beta (z - v t)/chi) + i v/c],
/// with mu = n0 g, c = sqrt(n0 g / m), beta = sqrt(1-(v/c)^2) and
/// chi = hbar/sqrt(m n0 g). Returned unnormalized; |v| > c is rejected.
Wavefunction dark_soliton_profile(const Grid& grid, double n0_per_um,
                                  double g_bar, const ScaledParams& s,
                                  double v_um_ms, double t_ms);

/// Healing length chi = hbar/sqrt(m n0 g) in um.
double healing_length(double n0_per_um, double g_bar, const ScaledParams& s);

/// Bogoliubov speed of sound c = sqrt(n0 g / m) in um/ms.
double sound_speed(double n0_per_um, double g_bar, const ScaledParams& s);

/// n = |psi|^2.
std::vector<double> density(const Wavefunction& psi);

/// Local phase unwrapped left-to-right. Grid intervals crossing densities
/// below 1e-12 of the frame maximum are branch-ambiguous; the flag marks the
/// right-hand point of every such interval.
struct PhaseProfile {
    std::vector<double> theta;
    std::vector<std::uint8_t> branch_flag;
};
PhaseProfile phase(const Wavefunction& psi);

}  // namespace gpe
