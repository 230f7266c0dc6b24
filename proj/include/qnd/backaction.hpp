#pragma once

#include <cstdint>

namespace qnd {

/// Gaussian summary of the collective pseudospin. j_length is N/2; the
/// transverse second moments (var_y, var_z, cov_yz) live in the frame that
/// follows the mean spin direction.
struct SpinMoments {
    double j_length = 0.0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double mean_z = 0.0;
    double var_y = 0.0;
    double var_z = 0.0;
    double cov_yz = 0.0;
    double contrast = 1.0;

    /// Coherent spin state polarized along +x: means (J, 0, 0), isotropic
    /// transverse variance N/4.
    static SpinMoments coherent(std::uint64_t n_atoms);
};

enum class VarianceMode { Short, Leaky };

/// Conditional variance result; the flag marks a short-mode call outside
/// its n Omega^2 t^2 < 0.1 validity bound (reported, not fatal).
struct ConditionalVariance {
    double value = 0.0;
    bool short_time_bound_exceeded = false;
};

/// Shot-noise penalty of spontaneous emission over one probe interval.
struct ScatteringReport {
    double p_scatter = 0.0;          ///< per-atom scattering probability
    double expected_scattered = 0.0; ///< N * p
    double added_phase_variance = 0.0; ///< rad^2, unaccountable phase noise
    double contrast_multiplier = 1.0;  ///< 1 - p
};

/// Probe phase imprint j_z * omega * t.
double probe_phase(double j_z, double omega_bar, double t);

/// Conditional J_z variance after a probe interval of length t.
/// Short mode: (N/4)(1 + N n Omega^2 t^2 / 2)^{-1}, valid for
/// n Omega^2 t^2 << 1 (coherent interaction, no cavity leakage).
/// Leaky mode: (N/4)(1 + N n_bar Omega^2 t tau_cav / sqrt(2))^{-1}, the
/// per-photon-lifetime projection model.
ConditionalVariance conditional_variance(std::uint64_t n_atoms, double n_photons,
                                         double omega, double t, double tau_cav,
                                         VarianceMode mode);

/// Backaction growth of the conjugate component,
/// (N/4)(1 + N n_bar Omega^2 t tau_cav / sqrt(2)). Exactly the reciprocal
/// partner of the leaky conditional variance: their product is (N/4)^2.
double antisqueezed_variance(std::uint64_t n_atoms, double n_bar, double omega,
                             double t, double tau_cav);

/// Far-detuned two-level scattering over a probe interval:
/// p = n_bar * g_sq * gamma * t / delta^2 per atom, with g_sq the
/// coupling-weighted mean squared single-photon coupling and delta the
/// dominant detuning. Scattered atoms drop out of the coherent signal and
/// leave an unaccountable phase variance N p (omega_bar t)^2 / 4.
ScatteringReport scattering_probability(double n_bar, double g_sq_weighted,
                                        double gamma, double delta, double t,
                                        std::uint64_t n_atoms, double omega_bar);

/// Wineland-style metrological squeezing in dB:
/// 10 log10[(var_z / (N/4)) / contrast^2]. Negative means squeezed.
double metrological_squeezing_db(double var_z, double contrast,
                                 std::uint64_t n_atoms);

} // namespace qnd
