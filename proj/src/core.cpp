#include "qnd/core.hpp"

#include "qnd/constants.hpp"

#include <cmath>

namespace qnd {

void CavitySpec::validate() const {
    if (!(length > 0.0))
        throw std::invalid_argument("cavity length must be positive");
    if (!(finesse > 1.0))
        throw std::invalid_argument("cavity finesse must exceed 1");
    if (!(mode_waist > 0.0))
        throw std::invalid_argument("cavity mode waist must be positive");
    if (g_max < 0.0)
        throw std::invalid_argument("g_max must be non-negative");
}

void ProbeSpec::validate(double hyperfine_splitting, double tolerance_frac) const {
    if (delta_lower == 0.0 || delta_upper == 0.0)
        throw std::invalid_argument("probe detunings must be non-zero");
    if (input_power < 0.0)
        throw std::invalid_argument("probe input power must be non-negative");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("probe wavelength must be positive");
    if (eta_in < 0.0 || eta_in > 1.0)
        throw std::invalid_argument("eta_in must lie in [0,1]");
    if (hyperfine_splitting > 0.0) {
        const double split = std::abs(delta_lower - delta_upper);
        if (std::abs(split - hyperfine_splitting) > tolerance_frac * hyperfine_splitting)
            throw std::invalid_argument(
                "detuning difference does not match the clock hyperfine splitting");
    }
}

DerivedCavity derive_cavity(const CavitySpec& spec) {
    spec.validate();
    DerivedCavity d;
    d.fsr = constants::speed_of_light / (2.0 * spec.length);
    d.hwhm = d.fsr / (2.0 * spec.finesse);
    d.kappa = constants::two_pi * d.hwhm;
    d.tau_cav = 1.0 / (2.0 * d.kappa);
    return d;
}

double dispersive_shift_rate(double g_max, double delta_lower, double delta_upper) {
    if (delta_lower == 0.0 || delta_upper == 0.0)
        throw std::invalid_argument("detunings must be non-zero");
    return g_max * g_max * (1.0 / delta_upper - 1.0 / delta_lower);
}

double number_shift_rate(double g_max, double delta_lower, double delta_upper) {
    if (delta_lower == 0.0 || delta_upper == 0.0)
        throw std::invalid_argument("detunings must be non-zero");
    return g_max * g_max * (1.0 / delta_upper + 1.0 / delta_lower);
}

double steady_state_photons(const ProbeSpec& probe, const DerivedCavity& cav) {
    if (probe.input_power < 0.0)
        throw std::invalid_argument("input power must be non-negative");
    if (!(probe.wavelength > 0.0))
        throw std::invalid_argument("wavelength must be positive");
    const double omega_laser =
        constants::two_pi * constants::speed_of_light / probe.wavelength;
    return probe.eta_in * probe.input_power /
           (constants::hbar * omega_laser * cav.kappa);
}

double buildup_time_integral(double pulse_duration, double tau_cav) {
    if (pulse_duration < 0.0)
        throw std::invalid_argument("pulse duration must be non-negative");
    if (!(tau_cav > 0.0))
        throw std::invalid_argument("tau_cav must be positive");
    // integral of (1 - 2 e^{-t/2tau} + e^{-t/tau}); expm1 keeps T << tau accurate
    const double t = pulse_duration;
    return t + 4.0 * tau_cav * std::expm1(-t / (2.0 * tau_cav)) -
           tau_cav * std::expm1(-t / tau_cav);
}

double time_averaged_photons(double n_ss, double pulse_duration, double tau_cav) {
    if (!(pulse_duration > 0.0))
        throw std::invalid_argument("pulse duration must be positive");
    return n_ss * buildup_time_integral(pulse_duration, tau_cav) / pulse_duration;
}

} // namespace qnd
