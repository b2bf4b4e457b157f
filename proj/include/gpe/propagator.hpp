#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpe/fft.hpp"
#include "gpe/grid.hpp"
#include "gpe/potentials.hpp"
#include "gpe/states.hpp"
#include "gpe/units.hpp"

namespace gpe {

struct StepperConfig {
    double dt_ms = 1e-3;
    long n_steps = 1;
    int store_every = 10;

    std::vector<std::string> validate() const;
};

/// Decimated propagation history with per-frame diagnostics.
struct FrameSeries {
    std::vector<double> times;        // ms, strictly increasing
    std::vector<Wavefunction> frames;
    std::vector<double> norms;        // discrete norm integral per frame
    std::vector<double> energies;     // GP energy functional per frame

    double frame_spacing_ms() const;  // spacing of the stored frames
};

/// Thrown when the field develops non-finite amplitudes; carries the last
/// good frame so callers can dump it for diagnosis.
class PropagationError : public std::runtime_error {
public:
    PropagationError(std::string what, Wavefunction last_good, long step_index)
        : std::runtime_error(std::move(what)),
          last_good_frame(std::move(last_good)),
          step(step_index) {}
    Wavefunction last_good_frame;
    long step;
};

/// Strang-split stepper: half kinetic step in wavenumber space, full
/// potential + nonlinear step in position space, half kinetic step.
/// The density entering the potential factor is the one reached after the
/// first half kinetic step; the factor itself leaves |psi|^2 unchanged.
class SplitStepper {
public:
    SplitStepper(const Grid& grid, const PotentialField& pot,
                 const ScaledParams& s, double dt_ms);

    double dt_ms() const { return dt_; }

    /// Advance psi by one step of dt; timestamp advances accordingly.
    void step_inplace(Wavefunction& psi);

    /// GP energy functional E[psi] with a spectral gradient:
    /// integral of (hbar^2/2m)|d_z psi|^2 + V |psi|^2 + (g/2)|psi|^4.
    double energy(const Wavefunction& psi);

private:
    const Grid& grid_;
    ScaledParams s_;
    double dt_;
    std::vector<double> pot_;
    std::vector<std::complex<double>> kin_half_;  // exp(-i hbar k^2 dt / 4m)
    Fft fft_;
    std::vector<std::complex<double>> work_;
    std::vector<std::complex<double>> work2_;
};

/// Single split-operator step (one-off convenience wrapper).
Wavefunction step(const Wavefunction& psi, const PotentialField& pot,
                  const ScaledParams& s, const Grid& grid, double dt_ms);

struct PropagateOptions {
    double norm_warn_tol = 1e-6;
    double energy_warn_tol = 1e-4;     // relative drift
    double boundary_warn_frac = 1e-8;  // of the frame density maximum
    bool warnings_to_stderr = true;
};

struct PropagateDiagnostics {
    double max_norm_drift = 0.0;       // max |norm - 1| over stored frames
    double max_energy_drift = 0.0;     // max relative energy drift
    bool boundary_warning = false;     // density at the domain edge too high
    double boundary_warning_t_ms = 0.0;
    bool norm_warning = false;
    bool energy_warning = false;
};

/// Propagate under the split-operator scheme, storing every store_every-th
/// step (plus the initial and final states) with norm and energy per frame.
/// Norm is never renormalized during propagation; drift is a diagnostic.
FrameSeries propagate(const Wavefunction& psi0, const PotentialField& pot,
                      const ScaledParams& s, const Grid& grid,
                      const StepperConfig& cfg,
                      const PropagateOptions& opts = {},
                      PropagateDiagnostics* diag_out = nullptr);

/// Max-norm residual of the continuity equation dn/dt + dj/dz over the
/// interior stored frames: central differences in time against a spectral
/// space derivative of the flux. Requires at least 3 uniformly spaced frames.
double continuity_residual(const FrameSeries& series, const Grid& grid,
                           const ScaledParams& s);

}  // namespace gpe
