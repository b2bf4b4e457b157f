#include "gpe/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gpe {

std::vector<std::string> StepperConfig::validate() const {
    std::vector<std::string> errors;
    if (!(dt_ms > 0.0)) errors.push_back("dt_ms must be > 0");
    if (n_steps < 1) errors.push_back("n_steps must be >= 1");
    if (store_every < 1) errors.push_back("store_every must be >= 1");
    return errors;
}

double FrameSeries::frame_spacing_ms() const {
    if (times.size() < 2) return 0.0;
    return times[1] - times[0];
}

SplitStepper::SplitStepper(const Grid& grid, const PotentialField& pot,
                           const ScaledParams& s, double dt_ms)
    : grid_(grid), s_(s), dt_(dt_ms), pot_(pot.values), fft_(grid.n_points) {
    if (static_cast<int>(pot_.size()) != grid.n_points)
        throw std::invalid_argument("potential size does not match grid");
    kin_half_.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double k = grid.k[j];
        const double phase = -s_.hbar_bar * k * k * dt_ / (4.0 * s_.m_bar);
        kin_half_[j] = {std::cos(phase), std::sin(phase)};
    }
    work_.resize(grid.n_points);
    work2_.resize(grid.n_points);
}

void SplitStepper::step_inplace(Wavefunction& psi) {
    const int n = grid_.n_points;

    fft_.forward(psi.amp.data(), work_.data());
    for (int j = 0; j < n; ++j) work_[j] *= kin_half_[j];
    fft_.inverse(work_.data(), psi.amp.data());

    const double c = -dt_ / s_.hbar_bar;
    for (int j = 0; j < n; ++j) {
        const double dens = std::norm(psi.amp[j]);
        const double phase = c * (pot_[j] + s_.g1d_bar * dens);
        psi.amp[j] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }

    fft_.forward(psi.amp.data(), work_.data());
    for (int j = 0; j < n; ++j) work_[j] *= kin_half_[j];
    fft_.inverse(work_.data(), psi.amp.data());

    psi.time_ms += dt_;
}

double SplitStepper::energy(const Wavefunction& psi) {
    const int n = grid_.n_points;
    fft_.forward(psi.amp.data(), work_.data());
    for (int j = 0; j < n; ++j)
        work_[j] *= std::complex<double>(0.0, grid_.k[j]);
    fft_.inverse(work_.data(), work2_.data());

    const double kin_c = s_.hbar_bar * s_.hbar_bar / (2.0 * s_.m_bar);
    double e = 0.0;
    for (int j = 0; j < n; ++j) {
        const double dens = std::norm(psi.amp[j]);
        e += kin_c * std::norm(work2_[j]) + pot_[j] * dens +
             0.5 * s_.g1d_bar * dens * dens;
    }
    return e * grid_.dz_um;
}

Wavefunction step(const Wavefunction& psi, const PotentialField& pot,
                  const ScaledParams& s, const Grid& grid, double dt_ms) {
    SplitStepper stepper(grid, pot, s, dt_ms);
    Wavefunction out = psi;
    stepper.step_inplace(out);
    return out;
}

namespace {

bool all_finite(const Wavefunction& psi) {
    for (const auto& a : psi.amp)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    return true;
}

}  // namespace

FrameSeries propagate(const Wavefunction& psi0, const PotentialField& pot,
                      const ScaledParams& s, const Grid& grid,
                      const StepperConfig& cfg, const PropagateOptions& opts,
                      PropagateDiagnostics* diag_out) {
    {
        const auto errors = cfg.validate();
        if (!errors.empty())
            throw std::invalid_argument("invalid StepperConfig: " + errors.front());
    }
    if (static_cast<int>(psi0.amp.size()) != grid.n_points)
        throw std::invalid_argument("wavefunction size does not match grid");

    SplitStepper stepper(grid, pot, s, cfg.dt_ms);
    FrameSeries series;
    const long total_frames = cfg.n_steps / cfg.store_every + 2;
    series.times.reserve(total_frames);
    series.frames.reserve(total_frames);
    series.norms.reserve(total_frames);
    series.energies.reserve(total_frames);

    PropagateDiagnostics diag;
    const double e0 = stepper.energy(psi0);
    double boundary_warned_at = -1.0;

    auto store = [&](const Wavefunction& psi) {
        const double nrm = norm_integral(grid, psi);
        const double e = stepper.energy(psi);
        series.times.push_back(psi.time_ms);
        series.frames.push_back(psi);
        series.norms.push_back(nrm);
        series.energies.push_back(e);

        diag.max_norm_drift = std::max(diag.max_norm_drift, std::abs(nrm - 1.0));
        const double e_drift = std::abs(e - e0) / std::max(std::abs(e0), 1e-300);
        diag.max_energy_drift = std::max(diag.max_energy_drift, e_drift);

        const std::vector<double> dens = density(psi);
        const double n_max = *std::max_element(dens.begin(), dens.end());
        const double edge = std::max(dens.front(), dens.back());
        if (edge > opts.boundary_warn_frac * n_max && boundary_warned_at < 0.0) {
            boundary_warned_at = psi.time_ms;
            diag.boundary_warning = true;
            diag.boundary_warning_t_ms = psi.time_ms;
            if (opts.warnings_to_stderr)
                std::fprintf(stderr,
                             "[gpe] warning: boundary density %.3e of max at t=%.3f ms\n",
                             edge / n_max, psi.time_ms);
        }
    };

    Wavefunction psi = psi0;
    store(psi);

    for (long i = 1; i <= cfg.n_steps; ++i) {
        stepper.step_inplace(psi);
        if (!all_finite(psi))
            throw PropagationError("non-finite amplitudes at step " + std::to_string(i),
                                   series.frames.back(), i);
        if (i % cfg.store_every == 0 || i == cfg.n_steps) store(psi);
    }

    if (diag.max_norm_drift > opts.norm_warn_tol) {
        diag.norm_warning = true;
        if (opts.warnings_to_stderr)
            std::fprintf(stderr, "[gpe] warning: norm drift %.3e exceeds %.1e\n",
                         diag.max_norm_drift, opts.norm_warn_tol);
    }
    if (diag.max_energy_drift > opts.energy_warn_tol) {
        diag.energy_warning = true;
        if (opts.warnings_to_stderr)
            std::fprintf(stderr, "[gpe] warning: energy drift %.3e exceeds %.1e\n",
                         diag.max_energy_drift, opts.energy_warn_tol);
    }
    if (diag_out) *diag_out = diag;
    return series;
}

double continuity_residual(const FrameSeries& series, const Grid& grid,
                           const ScaledParams& s) {
    const std::size_t nf = series.frames.size();
    if (nf < 3)
        throw std::invalid_argument("continuity_residual needs at least 3 frames");
    const double dt = series.times[1] - series.times[0];
    for (std::size_t i = 1; i + 1 < series.times.size(); ++i) {
        const double d = series.times[i + 1] - series.times[i];
        if (std::abs(d - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw std::invalid_argument("continuity_residual needs uniform frame times");
    }

    Fft fft(grid.n_points);
    const int n = grid.n_points;
    std::vector<std::complex<double>> spec(n), dpsi(n);
    const double c = s.hbar_bar / s.m_bar;

    // Flux j = (hbar/m) Im(psi* d_z psi) per frame, derivative spectral.
    auto flux = [&](const Wavefunction& psi) {
        fft.forward(psi.amp.data(), spec.data());
        for (int j = 0; j < n; ++j) spec[j] *= std::complex<double>(0.0, grid.k[j]);
        fft.inverse(spec.data(), dpsi.data());
        std::vector<double> out(n);
        for (int j = 0; j < n; ++j)
            out[j] = c * std::imag(std::conj(psi.amp[j]) * dpsi[j]);
        return out;
    };

    std::vector<std::complex<double>> jc(n), djc(n);
    double max_res = 0.0;
    for (std::size_t i = 1; i + 1 < nf; ++i) {
        const std::vector<double> n_prev = density(series.frames[i - 1]);
        const std::vector<double> n_next = density(series.frames[i + 1]);
        const std::vector<double> j_mid = flux(series.frames[i]);

        for (int j = 0; j < n; ++j) jc[j] = {j_mid[j], 0.0};
        fft.forward(jc.data(), spec.data());
        for (int j = 0; j < n; ++j) spec[j] *= std::complex<double>(0.0, grid.k[j]);
        fft.inverse(spec.data(), djc.data());

        for (int j = 0; j < n; ++j) {
            const double dn_dt = (n_next[j] - n_prev[j]) / (2.0 * dt);
            const double res = std::abs(dn_dt + djc[j].real());
            max_res = std::max(max_res, res);
        }
    }
    return max_res;
}

}  // namespace gpe
