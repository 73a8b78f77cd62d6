#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "matterlight/model.hpp"

namespace mlt {

enum class OpticalSolver { QuasiStatic, ReducedC };
enum class CondensateMode { Frozen, Dynamic };
enum class ProbeBoundary { Absorbing, Periodic };

struct IntegratorConfig {
    double dt = 0.0;  // sim units; 0 selects T_Rabi/400
    OpticalSolver solver = OpticalSolver::QuasiStatic;
    double reduced_c_factor = 4.0e-9;  // c_eff = factor * c
    CondensateMode condensate = CondensateMode::Frozen;
    ProbeBoundary probe_boundary = ProbeBoundary::Absorbing;
    std::vector<double> snapshot_times;  // sim units
    double boundary_guard = 1e-6;  // relative beam amplitude at the domain edge
    int guard_stride = 25;
    int substeps_per_transit = 4;  // reduced-c advection subcycling
    double mode_occupation = 1.0;  // occupation of the tracked mode (condensate source)
};

/// Per-run scalar time series plus the quanta bookkeeping tallies.
struct Diagnostics {
    std::vector<double> t;
    std::vector<double> atom_norm;     // integral |psi|^2 dx
    std::vector<double> probe_norm;    // integral |E|^2 dx, physical normalization
    std::vector<double> outflux_cum;   // quanta leaving through the right edge
    std::vector<double> absorbed_cum;  // quanta taken by the absorbing mask
    std::vector<double> flux_mid;      // c |E|^2 at the station midpoint

    // Raman-window exposures for the loss budget: time integrals of the
    // station-windowed beam density and of |phi|^2 |E|^2.
    double beam_exposure_send = 0, beam_exposure_recv = 0;
    double probe_exposure_send = 0, probe_exposure_recv = 0;

    double quanta_total(Index i) const {
        return atom_norm[i] + probe_norm[i] + outflux_cum[i] + absorbed_cum[i];
    }
};

struct EvolveResult {
    SystemState state;
    std::vector<SystemState> snapshots;
    Diagnostics diag;
};

/// N3 estimate from the adiabatic elimination: (Omega23/Delta)^2 * atom number
/// plus the probe branch g13^2 |E|^2 |phi|^2 / Delta^2.
double excited_population(const SystemState& s, const CouplingProfile& p, const SimContext& ctx);

/// Split-step integrator for the coupled beam/probe/condensate envelopes.
/// One instance owns its state exclusively during a run; spectral workspaces
/// are per-instance, so independent runs may execute on separate threads.
class Integrator {
  public:
    Integrator(const SimContext& ctx, CouplingProfile coupling, IntegratorConfig cfg,
               const Grid1D& grid);

    double dt() const { return dt_; }
    const CouplingProfile& coupling() const { return coupling_; }

    /// Advance one step of dt.
    void step(SystemState& s);

    /// Repeated stepping with snapshot capture and diagnostics recording.
    EvolveResult evolve(SystemState s, double t_final);

    /// Probe slaved to the current beam (dE/dt = 0), physical normalization.
    ComplexField quasi_static_probe(const SystemState& s) const;

    double outflux_total() const { return outflux_cum_; }
    double absorbed_total() const { return absorbed_cum_; }

  private:
    void validate() const;
    void prepare_tables();
    void step_quasistatic(SystemState& s);
    void step_reduced_c(SystemState& s);
    void step_condensate(SystemState& s);
    void rebuild_coupling(const SystemState& s);
    void coupling_rhs(const ArrayXcd& psi, ArrayXcd& out, double& edge_flux) const;
    void solve_probe_envelope(const ArrayXcd& psi, ArrayXcd& E) const;
    void check_guards(const SystemState& s, bool force = false);

    SimContext ctx_;
    CouplingProfile coupling_;
    IntegratorConfig cfg_;
    Grid1D grid_;
    double dt_ = 0;
    double c_eff_ = 0;          // transport speed used by the active solver
    double probe_rescale_ = 1;  // |E_physical|^2 = probe_rescale_ * |E_stored|^2
    int substeps_ = 1;

    mutable SpectralWorkspace ws_;
    ArrayXcd half_kinetic_;       // beam envelope half-step phase
    ArrayXcd probe_shift_half_;   // reduced-c half advection phase
    ArrayXr theta_probe_;         // integral of u_probe/c along x (quasi-static)
    ArrayXcd eitheta_, emitheta_;
    ArrayXr absorb_mask_;
    // cached pointwise rotation for the reduced-c local step
    ArrayXcd rot_pp_, rot_pe_, rot_ep_, rot_ee_;
    // condensate split-step tables
    ArrayXcd phi_half_phase_send_, phi_half_phase_recv_, phi_kinetic_;
    ArrayXr chi_send_, chi_recv_;  // normalized station windows
    // scratch
    mutable ArrayXcd scr1_, scr2_, scr3_, scr4_, scr5_;

    double outflux_cum_ = 0, absorbed_cum_ = 0;
    int steps_taken_ = 0;
};

}  // namespace mlt
