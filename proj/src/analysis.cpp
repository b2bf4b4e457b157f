#include "gpe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpe {

namespace {

// Moving median over a periodic window of half-size hw points.
std::vector<double> moving_median_periodic(const std::vector<double>& x, int hw) {
    const int n = static_cast<int>(x.size());
    std::vector<double> out(n);
    std::vector<double> window;
    window.reserve(2 * hw + 1);
    for (int j = 0; j < n; ++j) {
        window.clear();
        for (int d = -hw; d <= hw; ++d) {
            int idx = (j + d) % n;
            if (idx < 0) idx += n;
            window.push_back(x[idx]);
        }
        const std::size_t mid = window.size() / 2;
        std::nth_element(window.begin(), window.begin() + mid, window.end());
        out[j] = window[mid];
    }
    return out;
}

// Vertex of the parabola through (j-1, a), (j, b), (j+1, c); offset in cells.
double parabolic_offset(double a, double b, double c) {
    const double denom = a - 2.0 * b + c;
    if (denom == 0.0) return 0.0;
    double d = 0.5 * (a - c) / denom;
    if (d > 0.5) d = 0.5;
    if (d < -0.5) d = -0.5;
    return d;
}

}  // namespace

DipReport detect_dips(const Grid& grid, const std::vector<double>& dens,
                      const DipOptions& opts) {
    const int n = grid.n_points;
    if (static_cast<int>(dens.size()) != n)
        throw std::invalid_argument("detect_dips: density size does not match grid");
    for (double v : dens)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("detect_dips: density must be finite and nonnegative");

    DipReport report;
    const double n_max = *std::max_element(dens.begin(), dens.end());
    if (!(n_max > 0.0)) return report;

    int hw = static_cast<int>(std::lround(0.5 * opts.envelope_window_um / grid.dz_um));
    hw = std::max(hw, 1);
    const std::vector<double> env = moving_median_periodic(dens, hw);
    const double env_floor = opts.min_envelope_frac * n_max;

    for (int j = 1; j + 1 < n; ++j) {
        if (!(dens[j] < dens[j - 1] && dens[j] <= dens[j + 1])) continue;
        if (env[j] < env_floor) continue;
        const double depth = (env[j] - dens[j]) / env[j];
        if (depth < opts.min_contrast) continue;

        Dip dip;
        dip.position_um =
            grid.z[j] + parabolic_offset(dens[j - 1], dens[j], dens[j + 1]) * grid.dz_um;
        dip.depth_fraction = depth;

        // Width at half depth: scan for the crossings of (env + n_min)/2.
        const double level = 0.5 * (env[j] + dens[j]);
        double left = grid.z[j], right = grid.z[j];
        for (int l = j; l > 0; --l) {
            if (dens[l - 1] >= level) {
                const double f = (level - dens[l]) / (dens[l - 1] - dens[l]);
                left = grid.z[l] - f * grid.dz_um;
                break;
            }
            left = grid.z[l - 1];
        }
        for (int r = j; r + 1 < n; ++r) {
            if (dens[r + 1] >= level) {
                const double f = (level - dens[r]) / (dens[r + 1] - dens[r]);
                right = grid.z[r] + f * grid.dz_um;
                break;
            }
            right = grid.z[r + 1];
        }
        dip.half_width_um = right - left;
        report.dips.push_back(dip);
    }

    if (report.dips.size() >= 2) {
        double acc = 0.0;
        for (std::size_t i = 1; i < report.dips.size(); ++i)
            acc += report.dips[i].position_um - report.dips[i - 1].position_um;
        report.mean_spacing_um = acc / (report.dips.size() - 1);
    }
    return report;
}

std::vector<double> band_outflow_signal(const std::vector<std::vector<double>>& velocity,
                                        const std::vector<std::vector<double>>& dens,
                                        const Grid& grid, double probe_z_um) {
    if (velocity.size() != dens.size())
        throw std::invalid_argument("band_outflow_signal: row counts differ");
    std::vector<double> signal(velocity.size(), 0.0);
    for (std::size_t i = 0; i < velocity.size(); ++i) {
        double num = 0.0, den = 0.0;
        for (int j = 0; j < grid.n_points; ++j) {
            const double z = grid.z[j];
            if (std::abs(z) >= probe_z_um || z == 0.0) continue;
            const double sgn = (z > 0.0) ? 1.0 : -1.0;
            num += sgn * dens[i][j] * velocity[i][j];
            den += dens[i][j];
        }
        signal[i] = (den > 0.0) ? num / den : 0.0;
    }
    return signal;
}

std::vector<double> flips_from_signal(const std::vector<double>& times,
                                      const std::vector<double>& signal,
                                      int persistence) {
    if (times.size() != signal.size())
        throw std::invalid_argument("flips_from_signal: times/signal mismatch");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("flips_from_signal: times must increase");

    double s_max = 0.0;
    for (double v : signal) s_max = std::max(s_max, std::abs(v));
    if (!(s_max > 0.0)) return {};
    const double eps = 1e-6 * s_max;

    auto sgn = [&](double v) { return (v > eps) ? 1 : (v < -eps ? -1 : 0); };

    std::vector<double> flips;
    const int nf = static_cast<int>(signal.size());
    const int p = std::max(persistence, 1);
    int state = 0;
    int state_since = 0;
    for (int i = 0; i < nf; ++i) {
        const int si = sgn(signal[i]);
        if (si == 0 || si == state) continue;
        // Candidate change of sign: require the new sign to persist.
        bool holds = true;
        for (int j = i; j < std::min(i + p, nf); ++j)
            if (sgn(signal[j]) == -si) { holds = false; break; }
        if (!holds) continue;
        if (state != 0 && i - state_since >= p) flips.push_back(times[i]);
        state = si;
        state_since = i;
    }
    return flips;
}

std::vector<double> velocity_flip_times(const std::vector<double>& times,
                                        const std::vector<std::vector<double>>& velocity,
                                        const std::vector<std::vector<double>>& dens,
                                        const Grid& grid, const FlipOptions& opts) {
    if (times.size() != velocity.size())
        throw std::invalid_argument("velocity_flip_times: times/rows mismatch");
    const std::vector<double> signal =
        band_outflow_signal(velocity, dens, grid, opts.probe_z_um);
    return flips_from_signal(times, signal, opts.persistence);
}

}  // namespace gpe
