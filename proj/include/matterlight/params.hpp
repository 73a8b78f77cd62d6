#pragma once

#include <cmath>
#include <string>

#include "matterlight/constants.hpp"
#include "matterlight/ini.hpp"
#include "matterlight/types.hpp"

namespace mlt {

struct AtomSpecies {
    std::string name;
    double mass = 0.0;     // kg
    double d13 = 0.0;      // C m, dipole moment of the optical transition
    double a_scatt = 0.0;  // m, s-wave scattering length (phase-diffusion estimate only)
};

/// Load one species from the shipped data table (data/species.cfg).
AtomSpecies load_species(const std::string& name, const std::string& data_dir = MATTERLIGHT_DATA_DIR);

struct TrapConfig {
    double omega_t = 5.0;   // rad/s trap angular frequency
    double N0 = 1.0e6;      // atoms per condensate (equal split reference)
    double x_send = -5e-4;  // m
    double x_recv = +5e-4;  // m
};

struct BeamConfig {
    double n0 = 5.0e3;              // mean atom number of the input pulse
    double k0 = 8.0e6;              // 1/m optical wavevector; atomic carrier is 2*k0
    double envelope_center = 0.0;   // m (0 = auto placement left of the sender)
    bool center_auto = true;
    double envelope_width = 0.0;    // m, exp(-x^2/2w^2) width (0 = auto, 5.5*x0)
    bool width_auto = true;
    double V_X = 0.14;              // input quadrature variances, vacuum = 1
    double V_Y = 7.39;
};

struct OpticalConfig {
    double Omega23 = 0.0;        // rad/s control Rabi frequency (0 = calibrate)
    bool omega23_auto = true;
    double Delta = 2.0 * kPi * 1.0e9;  // rad/s single-photon detuning
    double waist = 1.0e-4;       // m control laser waist, A = pi*waist^2/2
    double rabi_ratio_send = 1.0;
    double rabi_ratio_recv = 1.0;
    double control_trim = 1.0;   // numeric trim on the analytic calibration
};

struct PhysicalConfig {
    PhysicalConstants consts;
    AtomSpecies species;
    TrapConfig trap;
    BeamConfig beam;
    OpticalConfig optical;
};

// ---- Derived scales --------------------------------------------------------
// All pure and deterministic; angular frequencies throughout.

/// Two-photon recoil velocity 2*hbar*k0/m of the outcoupled beam.
inline double derive_beam_velocity(const AtomSpecies& sp, double k0,
                                   const PhysicalConstants& c = {}) {
    if (k0 < 0) throw ConfigError("derive_beam_velocity: k0 must be >= 0");
    return 2.0 * c.hbar * k0 / sp.mass;
}

/// Trap oscillator length sqrt(hbar/(m*omega_t)); also the condensate width.
inline double oscillator_length(const AtomSpecies& sp, double omega_t,
                                const PhysicalConstants& c = {}) {
    if (omega_t <= 0) throw ConfigError("oscillator_length: omega_t must be > 0");
    return std::sqrt(c.hbar / (sp.mass * omega_t));
}

/// T_Rabi = 4*sqrt(hbar/(m*omega_t)) * m/(2*hbar*k0) = 4*x0/v: four condensate
/// crossing times of the beam. The quarter cycle x0/v is the transfer window.
inline double derive_rabi_period(const AtomSpecies& sp, double omega_t, double k0,
                                 const PhysicalConstants& c = {}) {
    if (omega_t <= 0 || k0 <= 0)
        throw ConfigError("derive_rabi_period: omega_t and k0 must be > 0");
    return 4.0 * oscillator_length(sp, omega_t, c) / derive_beam_velocity(sp, k0, c);
}

/// Atom-light coupling g13 = (d13/hbar)*sqrt(hbar*omega_k/(2*eps0*A)) with the
/// effective cross-section A = pi*waist^2/2. Units s^-1 m^(1/2) in 1D.
inline double coupling_g13(const AtomSpecies& sp, double omega_k, double waist,
                           const PhysicalConstants& c = {}) {
    if (omega_k <= 0) throw ConfigError("coupling_g13: omega_k must be > 0");
    if (waist <= 0) throw ConfigError("coupling_g13: waist must be > 0");
    const double area = kPi * waist * waist / 2.0;
    return (sp.d13 / c.hbar) * std::sqrt(c.hbar * omega_k / (2.0 * c.eps0 * area));
}

/// Free-space spontaneous rate gamma = k0^3 |d13|^2 / (3 pi hbar eps0).
inline double spontaneous_rate(const AtomSpecies& sp, double k0,
                               const PhysicalConstants& c = {}) {
    if (k0 <= 0) throw ConfigError("spontaneous_rate: k0 must be > 0");
    return k0 * k0 * k0 * sp.d13 * sp.d13 / (3.0 * kPi * c.hbar * c.eps0);
}

// ---- Nondimensionalization -------------------------------------------------
// Simulation units: lengths in x0 = sqrt(hbar/(m*omega_t)), times in t0 =
// 1/omega_t, rates in omega_t. Fields carry an extra sqrt(x0) so that
// sum |psi|^2 dx stays a particle number in both systems.

struct SimScaling {
    double x0 = 0.0;  // m per sim length unit
    double t0 = 0.0;  // s per sim time unit

    double length_to_sim(double x_si) const { return x_si / x0; }
    double length_to_si(double x_sim) const { return x_sim * x0; }
    double time_to_sim(double t_si) const { return t_si / t0; }
    double time_to_si(double t_sim) const { return t_sim * t0; }
    double rate_to_sim(double w_si) const { return w_si * t0; }
    double rate_to_si(double w_sim) const { return w_sim / t0; }
    double wavenumber_to_sim(double k_si) const { return k_si * x0; }
    double wavenumber_to_si(double k_sim) const { return k_sim / x0; }
    double velocity_to_sim(double v_si) const { return v_si * t0 / x0; }
    double velocity_to_si(double v_sim) const { return v_sim * x0 / t0; }
    // field amplitude: psi_sim = psi_si * sqrt(x0)
    double field_to_sim(double a_si) const { return a_si * std::sqrt(x0); }
    double field_to_si(double a_sim) const { return a_sim / std::sqrt(x0); }
    // coupling g13 (s^-1 m^(1/2)): g_sim = g_si * t0 / sqrt(x0)
    double coupling_to_sim(double g_si) const { return g_si * t0 / std::sqrt(x0); }
    double coupling_to_si(double g_sim) const { return g_sim * std::sqrt(x0) / t0; }
};

inline SimScaling nondimensionalize(const PhysicalConfig& cfg) {
    if (cfg.species.mass <= 0 || cfg.species.d13 <= 0)
        throw ConfigError("nondimensionalize: species mass and d13 must be > 0");
    if (cfg.trap.omega_t <= 0 || cfg.trap.N0 <= 0)
        throw ConfigError("nondimensionalize: trap omega_t and N0 must be > 0");
    if (cfg.trap.x_recv <= cfg.trap.x_send)
        throw ConfigError("nondimensionalize: x_recv must be > x_send");
    if (cfg.beam.n0 <= 0 || cfg.beam.k0 <= 0)
        throw ConfigError("nondimensionalize: beam n0 and k0 must be > 0");
    if (cfg.beam.V_X <= 0 || cfg.beam.V_Y <= 0 || cfg.beam.V_X * cfg.beam.V_Y < 1.0 - 1e-12)
        throw ConfigError("nondimensionalize: quadrature variances must be > 0 with V_X*V_Y >= 1");
    if (cfg.optical.Delta <= 0 || cfg.optical.waist <= 0)
        throw ConfigError("nondimensionalize: Delta and waist must be > 0");
    SimScaling s;
    s.x0 = oscillator_length(cfg.species, cfg.trap.omega_t, cfg.consts);
    s.t0 = 1.0 / cfg.trap.omega_t;
    return s;
}

}  // namespace mlt
