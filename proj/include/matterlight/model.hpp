#pragma once

#include <cmath>

#include "matterlight/grid.hpp"
#include "matterlight/params.hpp"

namespace mlt {

/// Nondimensional model constants shared by the dynamics and metrics layers.
/// Lengths are in trap oscillator units x0, times in 1/omega_t, rates in
/// omega_t. Kinetic energy is k^2/2 in these units by construction.
struct SimContext {
    SimScaling scale;
    double k0 = 0;        // optical wavevector, sim
    double v_atom = 0;    // beam group velocity = 2*k0, sim
    double c_light = 0;   // sim
    double Delta = 0;     // sim
    double g13 = 0;       // sim, s^-1 m^(1/2) scaled
    double Omega23_send = 0;  // sim (ratio applied)
    double Omega23_recv = 0;  // sim
    double x_send = 0;    // sim
    double x_recv = 0;    // sim
    double N_send = 0;    // condensate atom numbers after the delta_n split
    double N_recv = 0;
    double n0 = 0;        // input pulse mean atom number
    double delta_n = 0;   // number difference ratio delta/N

    double atom_carrier() const { return 2.0 * k0; }
    double probe_carrier() const { return 3.0 * k0; }
};

/// Beam envelope, probe envelope, and the two condensate mean fields on one
/// shared grid (sender and receiver treated as a single cascaded domain).
struct SystemState {
    ComplexField psi;       // atomic beam envelope, carrier 2*k0
    ComplexField E;         // optical probe envelope, carrier 3*k0
    ComplexField phi_send;  // condensate mean field, carrier 0
    ComplexField phi_recv;
    double t = 0;           // sim time
};

/// Spatial coupling and potential profiles entering the envelope equations.
///
/// Omega_C(x) = phi(x) * conj(Omega23) * g13 / Delta per station. The uniform
/// control light shift -|Omega23|^2/Delta and the carrier kinetic constant
/// 2*k0^2 (sim) are absorbed into a common rotating frame; detuning_const is
/// the probe-side constant that makes the momentum-matched transfer
/// stationary in the original envelope frame (reported, not applied when the
/// per-station controls are retuned, which is the default).
struct CouplingProfile {
    ArrayXcd omega_c;           // combined, sim rate
    ArrayXcd omega_c_send;      // per-station pieces
    ArrayXcd omega_c_recv;
    ArrayXr light_shift_probe;  // -g13^2 |phi|^2 / Delta, sim rate
    double light_shift_atom = 0;     // -|Omega23_send|^2 / Delta, uniform, sim rate
    double detuning_const = 0;       // resonance value of the probe constant
    bool retuned = true;
    ArrayXr u_atom;             // net in-frame atom diagonal
    ArrayXr u_probe;            // net in-frame probe diagonal
    double omega_c_peak = 0;    // max |Omega_C|, sim rate
};

inline SimContext make_context(const PhysicalConfig& cfg, double delta_n = 0.0,
                               double Omega23_si = 0.0) {
    SimContext ctx;
    ctx.scale = nondimensionalize(cfg);
    const auto& C = cfg.consts;
    ctx.k0 = ctx.scale.wavenumber_to_sim(cfg.beam.k0);
    ctx.v_atom = ctx.scale.velocity_to_sim(derive_beam_velocity(cfg.species, cfg.beam.k0, C));
    ctx.c_light = ctx.scale.velocity_to_sim(C.c);
    ctx.Delta = ctx.scale.rate_to_sim(cfg.optical.Delta);
    const double omega_k = C.c * cfg.beam.k0;
    ctx.g13 = ctx.scale.coupling_to_sim(coupling_g13(cfg.species, omega_k, cfg.optical.waist, C));
    ctx.x_send = ctx.scale.length_to_sim(cfg.trap.x_send);
    ctx.x_recv = ctx.scale.length_to_sim(cfg.trap.x_recv);
    ctx.n0 = cfg.beam.n0;
    ctx.delta_n = delta_n;
    if (std::abs(delta_n) >= 1.0)
        throw ConfigError("make_context: |delta_n| must be < 1");
    // N1 = (N + delta)/2, N2 = (N - delta)/2 with delta = delta_n * N, N = 2*N0.
    ctx.N_send = cfg.trap.N0 * (1.0 + delta_n);
    ctx.N_recv = cfg.trap.N0 * (1.0 - delta_n);
    const double o23 = ctx.scale.rate_to_sim(Omega23_si);
    ctx.Omega23_send = o23 * cfg.optical.rabi_ratio_send;
    ctx.Omega23_recv = o23 * cfg.optical.rabi_ratio_recv;
    return ctx;
}

/// Control Rabi frequency (SI rad/s) for optimal transfer at equal numbers:
/// the two-velocity conversion angle integral Omega_C dx / sqrt(v_atom*c)
/// across the condensate equals pi/2, so a pulse crossing the station
/// converts fully within one quarter Rabi period T_Rabi/4 = x0/v.
/// control_trim carries the numerically refined correction to the analytic
/// Gaussian-profile value.
inline double calibrate_control(const PhysicalConfig& cfg) {
    const auto& C = cfg.consts;
    const double x0 = oscillator_length(cfg.species, cfg.trap.omega_t, C);
    const double v = derive_beam_velocity(cfg.species, cfg.beam.k0, C);
    if (v <= 0) throw ConfigError("calibrate_control: beam velocity must be > 0");
    const double omega_c_peak = cfg.optical.control_trim * (kPi / 2.0) *
                                std::sqrt(v * C.c) / (std::sqrt(2.0 * kPi) * x0);
    const double phi_peak = std::sqrt(cfg.trap.N0 / (std::sqrt(kPi) * x0));
    const double g = coupling_g13(cfg.species, C.c * cfg.beam.k0, cfg.optical.waist, C);
    const double omega23 = omega_c_peak * cfg.optical.Delta / (phi_peak * g);
    const double ratio_max = std::max(cfg.optical.rabi_ratio_send, cfg.optical.rabi_ratio_recv);
    if (std::abs(omega23 * ratio_max / cfg.optical.Delta) >= 0.25)
        throw ConfigError(
            "calibrate_control: Omega23/Delta violates adiabaticity; increase Delta");
    return omega23;
}

/// Harmonic-trap ground-state condensate pair scaled to the delta_n split.
inline std::pair<ComplexField, ComplexField> build_condensates(const Grid1D& grid,
                                                               const SimContext& ctx) {
    if (ctx.x_recv - ctx.x_send < 12.0)
        throw ConfigError("build_condensates: stations too close (overlapping phi supports)");
    ComplexField phi_s = gaussian_envelope(grid, ctx.x_send, 1.0, std::sqrt(ctx.N_send),
                                           FieldKind::Condensate, 0.0);
    ComplexField phi_r = gaussian_envelope(grid, ctx.x_recv, 1.0, std::sqrt(ctx.N_recv),
                                           FieldKind::Condensate, 0.0);
    return {phi_s, phi_r};
}

inline CouplingProfile build_coupling(const ComplexField& phi_send, const ComplexField& phi_recv,
                                      const SimContext& ctx, bool retune = true) {
    if (phi_send.grid != phi_recv.grid)
        throw NumericsError("build_coupling: phi fields on different grids");
    CouplingProfile p;
    const double gd = ctx.g13 / ctx.Delta;
    p.omega_c_send = phi_send.values * (ctx.Omega23_send * gd);
    p.omega_c_recv = phi_recv.values * (ctx.Omega23_recv * gd);
    p.omega_c = p.omega_c_send + p.omega_c_recv;
    p.light_shift_probe =
        -(phi_send.values.abs2() + phi_recv.values.abs2()) * (ctx.g13 * ctx.g13 / ctx.Delta);
    p.light_shift_atom = -ctx.Omega23_send * ctx.Omega23_send / ctx.Delta;
    // Two-photon resonance: probe constant matching the beam diagonal at the
    // matched momentum (carrier kinetic constant plus uniform light shift).
    p.detuning_const = 2.0 * ctx.k0 * ctx.k0 + p.light_shift_atom;
    p.retuned = retune;
    const Index n = p.omega_c.size();
    p.u_atom = ArrayXr::Zero(n);
    p.u_probe = p.light_shift_probe;
    if (!retune) {
        // Fixed control frequencies: the receiver keeps its light-shift
        // mismatch relative to the sender's resonance as a real detuning.
        const double mismatch =
            (ctx.Omega23_send * ctx.Omega23_send - ctx.Omega23_recv * ctx.Omega23_recv) / ctx.Delta;
        const Grid1D& g = phi_send.grid;
        const double midpoint = 0.5 * (ctx.x_send + ctx.x_recv);
        for (Index i = 0; i < n; ++i)
            if (g.x(i) > midpoint) p.u_atom[i] = mismatch;
    }
    p.omega_c_peak = p.omega_c.abs().maxCoeff();
    return p;
}

/// Initial cascaded state: ground-state condensates, input pulse of sqrt(n0)
/// amplitude approaching the sender, empty probe.
inline SystemState build_initial_state(const Grid1D& grid, const SimContext& ctx,
                                       double pulse_center, double pulse_width) {
    SystemState s;
    auto [phi_s, phi_r] = build_condensates(grid, ctx);
    s.phi_send = std::move(phi_s);
    s.phi_recv = std::move(phi_r);
    s.psi = gaussian_envelope(grid, pulse_center, pulse_width, std::sqrt(ctx.n0),
                              FieldKind::AtomicBeam, ctx.atom_carrier());
    s.E = ComplexField(grid, FieldKind::OpticalProbe, ctx.probe_carrier());
    s.t = 0.0;
    return s;
}

}  // namespace mlt
