#pragma once

#include <stdexcept>

namespace qnd {

/// Fixed geometry and mirror quality of the science cavity.
/// All angular frequencies in this library are rad/s; plain-Hz values only
/// appear at the configuration boundary.
struct CavitySpec {
    double length = 0.0;      ///< mirror spacing, m
    double finesse = 0.0;     ///< dimensionless, > 1
    double mode_waist = 0.0;  ///< TEM00 mode radius at the atoms, m
    double g_max = 0.0;       ///< peak atom-cavity coupling, rad/s

    void validate() const;
};

/// Quantities derived from CavitySpec by closed forms.
struct DerivedCavity {
    double fsr = 0.0;      ///< free spectral range, Hz
    double hwhm = 0.0;     ///< half linewidth, Hz
    double tau_cav = 0.0;  ///< intracavity intensity 1/e lifetime, s
    double kappa = 0.0;    ///< angular half linewidth, rad/s
};

/// Probe laser parameters. Detunings are measured from the optical
/// transitions of the two clock states and carry their sign.
struct ProbeSpec {
    double delta_lower = 0.0;     ///< detuning from the lower clock state's transition, rad/s
    double delta_upper = 0.0;     ///< detuning from the upper clock state's transition, rad/s
    double input_power = 0.0;     ///< W
    double wavelength = 0.0;      ///< m
    double eta_in = 1.0;          ///< input-coupling/calibration efficiency, [0,1]
    double linewidth_gamma = 0.0; ///< atomic natural linewidth, rad/s

    void validate(double hyperfine_splitting, double tolerance_frac) const;
};

/// Intracavity photon numbers for one drive setting.
struct PhotonDrive {
    double n_ss = 0.0;   ///< steady-state intracavity photon number
    double n_bar = 0.0;  ///< time-averaged photon number over a pulse
};

/// FSR, linewidth and photon lifetime from length and finesse.
/// Throws std::invalid_argument on non-positive length or finesse <= 1.
DerivedCavity derive_cavity(const CavitySpec& spec);

/// Dispersive shift rate per unit J_z: g_max^2 (1/delta_upper - 1/delta_lower).
/// Signed; antisymmetric under swapping the two detunings.
double dispersive_shift_rate(double g_max, double delta_lower, double delta_upper);

/// Rate of the atom-number-proportional phase term:
/// g_max^2 (1/delta_upper + 1/delta_lower). The collective phase offset per
/// unit time is (N/2) times this.
double number_shift_rate(double g_max, double delta_lower, double delta_upper);

/// Steady-state photon number eta_in * P / (hbar * omega_L * kappa).
double steady_state_photons(const ProbeSpec& probe, const DerivedCavity& cav);

/// Time average of n_ss (1 - e^{-t/(2 tau_cav)})^2 over a pulse of length
/// pulse_duration, in closed form. Models the intracavity intensity buildup
/// as single-pole field relaxation at rate 1/(2 tau_cav).
double time_averaged_photons(double n_ss, double pulse_duration, double tau_cav);

/// Photon-time integral of the buildup transient over [0, T]:
/// integral of (1 - e^{-t/(2 tau)})^2 dt. time_averaged_photons is
/// n_ss * buildup_time_integral / T.
double buildup_time_integral(double pulse_duration, double tau_cav);

} // namespace qnd
