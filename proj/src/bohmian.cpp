#include "gpe/bohmian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpe/fft.hpp"

namespace gpe {

namespace {
using cplx = std::complex<double>;

double clamp_mag(double v, double v_max) {
    if (v > v_max) return v_max;
    if (v < -v_max) return -v_max;
    return v;
}
}  // namespace

VelocityField velocity_field(const Grid& grid, const Wavefunction& psi,
                             const ScaledParams& s,
                             const VelocityRegularization& reg) {
    const int n = grid.n_points;
    Fft fft(n);
    std::vector<cplx> spec(n), dpsi(n);
    fft.forward(psi.amp.data(), spec.data());
    for (int j = 0; j < n; ++j) spec[j] *= cplx(0.0, grid.k[j]);
    fft.inverse(spec.data(), dpsi.data());

    const std::vector<double> dens = density(psi);
    const double n_max = *std::max_element(dens.begin(), dens.end());
    const double floor = reg.floor_frac * n_max;
    const double c = s.hbar_bar / s.m_bar;

    VelocityField out;
    out.values.resize(n);
    out.low_density_mask.assign(n, 0);
    out.time_ms = psi.time_ms;
    for (int j = 0; j < n; ++j) {
        const double d = std::max(dens[j], floor);
        double v = c * std::imag(std::conj(psi.amp[j]) * dpsi[j]) / d;
        if (dens[j] < floor) {
            v = clamp_mag(v, reg.v_max_um_ms);
            out.low_density_mask[j] = 1;
        }
        out.values[j] = v;
    }
    return out;
}

QuantumPotentialField quantum_potential(const Grid& grid, const Wavefunction& psi,
                                        const ScaledParams& s, double floor_frac) {
    const int n = grid.n_points;
    Fft fft(n);
    const std::vector<double> dens = density(psi);
    const double n_max = *std::max_element(dens.begin(), dens.end());
    const double floor = floor_frac * n_max;

    std::vector<cplx> nc(n), spec(n), d1(n), d2(n);
    for (int j = 0; j < n; ++j) nc[j] = {dens[j], 0.0};
    fft.forward(nc.data(), spec.data());
    std::vector<cplx> spec1(n);
    for (int j = 0; j < n; ++j) spec1[j] = spec[j] * cplx(0.0, grid.k[j]);
    fft.inverse(spec1.data(), d1.data());
    for (int j = 0; j < n; ++j) spec1[j] = -spec[j] * grid.k[j] * grid.k[j];
    fft.inverse(spec1.data(), d2.data());

    const double c = -s.hbar_bar * s.hbar_bar / (4.0 * s.m_bar);
    QuantumPotentialField out;
    out.values.resize(n);
    out.low_density_mask.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        const double d = std::max(dens[j], floor);
        const double r1 = d1[j].real() / d;
        const double r2 = d2[j].real() / d;
        out.values[j] = c * (r2 - 0.5 * r1 * r1);
        if (dens[j] < floor) out.low_density_mask[j] = 1;
    }
    return out;
}

std::vector<double> seed_positions(const Grid& grid, const Wavefunction& psi0,
                                   int m_count, double threshold_frac) {
    if (m_count < 1) throw std::invalid_argument("seed_positions requires m_count >= 1");
    if (!(threshold_frac > 0.0) || !(threshold_frac <= 1.0))
        throw std::invalid_argument("seed_positions requires 0 < threshold_frac <= 1");

    const std::vector<double> dens = density(psi0);
    const double n_max = *std::max_element(dens.begin(), dens.end());
    const double thr = threshold_frac * n_max;

    // Bands of consecutive grid points at or above the threshold.
    struct Band {
        double lo, hi;
    };
    std::vector<Band> bands;
    const int n = grid.n_points;
    int j = 0;
    while (j < n) {
        if (dens[j] >= thr) {
            int j0 = j;
            while (j < n && dens[j] >= thr) ++j;
            bands.push_back({grid.z[j0], grid.z[j - 1]});
        } else {
            ++j;
        }
    }
    if (bands.empty()) throw std::runtime_error("seed_positions: empty support region");

    double total = 0.0;
    for (const Band& b : bands) total += b.hi - b.lo;
    if (total <= 0.0) {
        // Degenerate support (single grid point): one seed at the maximum.
        return {bands.front().lo};
    }

    // Equidistant in arc length over the union, endpoints included.
    std::vector<double> seeds;
    seeds.reserve(m_count);
    for (int i = 0; i < m_count; ++i) {
        const double frac = (m_count == 1) ? 0.5
                                           : static_cast<double>(i) / (m_count - 1);
        double arc = frac * total;
        bool placed = false;
        for (const Band& b : bands) {
            const double len = b.hi - b.lo;
            if (arc <= len) {
                seeds.push_back(b.lo + arc);
                placed = true;
                break;
            }
            arc -= len;
        }
        if (!placed) seeds.push_back(bands.back().hi);  // rounding spill-over
    }
    return seeds;
}

namespace {

// Spectrum of one frame prepared for plane-wave synthesis of psi and
// d_z psi at arbitrary positions.
struct SynthesisSpectrum {
    std::vector<cplx> c;    // FFT coefficients / n
    std::vector<cplx> dc;   // i k * c
    double n_floor = 0.0;   // regularization floor for this frame
};

SynthesisSpectrum make_spectrum(const Grid& grid, const Fft& fft,
                                const Wavefunction& psi, double floor_frac) {
    SynthesisSpectrum sp;
    const int n = grid.n_points;
    sp.c.resize(n);
    sp.dc.resize(n);
    fft.forward(psi.amp.data(), sp.c.data());
    const double inv_n = 1.0 / n;
    for (int j = 0; j < n; ++j) {
        sp.c[j] *= inv_n;
        sp.dc[j] = sp.c[j] * cplx(0.0, grid.k[j]);
    }
    const std::vector<double> dens = density(psi);
    sp.n_floor = floor_frac * *std::max_element(dens.begin(), dens.end());
    return sp;
}

// Evaluate psi and d_z psi at x by summing the plane-wave basis. The phase
// factor e^{i k_j (x - z_min)} is iterated as a geometric progression over
// the FFT index; modes in the negative-frequency half carry the extra
// factor e^{-i N dk (x - z_min)}.
void synthesize(const Grid& grid, const SynthesisSpectrum& sp, double x,
                cplx& psi_out, cplx& dpsi_out) {
    const int n = grid.n_points;
    const double u = x - grid.z_min_um;
    const double dk = 2.0 * M_PI / (n * grid.dz_um);
    const cplx w(std::cos(dk * u), std::sin(dk * u));
    const double nu = n * dk * u;
    const cplx wrap(std::cos(nu), -std::sin(nu));

    cplx p(1.0, 0.0);
    cplx acc_psi(0.0, 0.0), acc_dpsi(0.0, 0.0);
    const int half = n / 2;
    for (int j = 0; j < n; ++j) {
        const cplx ph = (j < half) ? p : p * wrap;
        acc_psi += sp.c[j] * ph;
        acc_dpsi += sp.dc[j] * ph;
        p *= w;
    }
    psi_out = acc_psi;
    dpsi_out = acc_dpsi;
}

double wrap_position(const Grid& grid, double x) {
    const double len = grid.z_max_um - grid.z_min_um;
    double u = std::fmod(x - grid.z_min_um, len);
    if (u < 0.0) u += len;
    return grid.z_min_um + u;
}

}  // namespace

TrajectorySet integrate_trajectories(const Grid& grid, const FrameSeries& series,
                                     const std::vector<double>& seeds,
                                     const ScaledParams& s,
                                     const TrajectoryOptions& opts) {
    if (series.frames.size() < 2)
        throw std::invalid_argument("integrate_trajectories needs at least 2 frames");
    const double spacing = series.frame_spacing_ms();
    if (spacing > opts.max_frame_spacing_ms)
        throw std::invalid_argument(
            "integrate_trajectories: stored frames too sparse for trajectory work");

    const int m = static_cast<int>(seeds.size());
    TrajectorySet out;
    out.times = series.times;
    out.positions.assign(series.times.size(), std::vector<double>(m));
    out.clamped.assign(m, 0);
    out.initial_band = opts.seed_threshold_frac;
    out.positions[0] = seeds;

    Fft fft(grid.n_points);
    const double c = s.hbar_bar / s.m_bar;

    auto velocity_at = [&](const SynthesisSpectrum& sp, double x, bool& clamped) {
        cplx psi, dpsi;
        synthesize(grid, sp, wrap_position(grid, x), psi, dpsi);
        const double dens = std::norm(psi);
        const double d = std::max(dens, sp.n_floor);
        double v = (d > 0.0) ? c * std::imag(std::conj(psi) * dpsi) / d : 0.0;
        if (dens < sp.n_floor) {
            v = clamp_mag(v, opts.reg.v_max_um_ms);
            clamped = true;
        }
        return v;
    };

    SynthesisSpectrum sp_cur =
        make_spectrum(grid, fft, series.frames[0], opts.reg.floor_frac);
    std::vector<double> x = seeds;

    for (std::size_t i = 0; i + 1 < series.frames.size(); ++i) {
        const SynthesisSpectrum sp_next =
            make_spectrum(grid, fft, series.frames[i + 1], opts.reg.floor_frac);
        const double dt = series.times[i + 1] - series.times[i];

        for (int t = 0; t < m; ++t) {
            bool clamped = false;
            const double v1 = velocity_at(sp_cur, x[t], clamped);
            const double x_mid = x[t] + 0.5 * dt * v1;
            // Midpoint velocity: mean of the bracketing frames' fields at x_mid.
            const double v2a = velocity_at(sp_cur, x_mid, clamped);
            const double v2b = velocity_at(sp_next, x_mid, clamped);
            x[t] = wrap_position(grid, x[t] + dt * 0.5 * (v2a + v2b));
            if (clamped) out.clamped[t] = 1;
        }
        out.positions[i + 1] = x;
        sp_cur = sp_next;
    }
    return out;
}

double left_density_fraction(const Grid& grid, const std::vector<double>& dens,
                             double x_um) {
    // Riemann cumulative: each sample owns the cell [z_j, z_j + dz).
    const int n = grid.n_points;
    double total = 0.0;
    for (double d : dens) total += d;
    total *= grid.dz_um;
    if (!(total > 0.0)) return 0.0;

    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double cell_lo = grid.z[j];
        const double cell_hi = grid.z[j] + grid.dz_um;
        if (x_um <= cell_lo) break;
        const double covered = std::min(x_um, cell_hi) - cell_lo;
        acc += dens[j] * covered;
    }
    return acc / total;
}

}  // namespace gpe
