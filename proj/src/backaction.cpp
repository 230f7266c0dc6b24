#include "qnd/backaction.hpp"

#include <cmath>
#include <stdexcept>

namespace qnd {

SpinMoments SpinMoments::coherent(std::uint64_t n_atoms) {
    SpinMoments m;
    m.j_length = static_cast<double>(n_atoms) / 2.0;
    m.mean_x = m.j_length;
    m.var_y = static_cast<double>(n_atoms) / 4.0;
    m.var_z = m.var_y;
    return m;
}

double probe_phase(double j_z, double omega_bar, double t) {
    if (t < 0.0)
        throw std::invalid_argument("interaction time must be non-negative");
    return j_z * omega_bar * t;
}

ConditionalVariance conditional_variance(std::uint64_t n_atoms, double n_photons,
                                         double omega, double t, double tau_cav,
                                         VarianceMode mode) {
    if (n_atoms < 1)
        throw std::invalid_argument("n_atoms must be at least 1");
    if (t < 0.0)
        throw std::invalid_argument("interaction time must be non-negative");
    if (n_photons < 0.0)
        throw std::invalid_argument("photon number must be non-negative");

    const double quarter_n = static_cast<double>(n_atoms) / 4.0;
    ConditionalVariance out;
    if (mode == VarianceMode::Short) {
        const double bound = n_photons * omega * omega * t * t;
        out.short_time_bound_exceeded = bound > 0.1;
        const double q = static_cast<double>(n_atoms) * bound / 2.0;
        out.value = quarter_n / (1.0 + q);
    } else {
        if (!(tau_cav > 0.0))
            throw std::invalid_argument("tau_cav must be positive");
        const double q = static_cast<double>(n_atoms) * n_photons * omega * omega *
                         t * tau_cav / std::sqrt(2.0);
        out.value = quarter_n / (1.0 + q);
    }
    return out;
}

double antisqueezed_variance(std::uint64_t n_atoms, double n_bar, double omega,
                             double t, double tau_cav) {
    if (n_atoms < 1)
        throw std::invalid_argument("n_atoms must be at least 1");
    if (t < 0.0)
        throw std::invalid_argument("interaction time must be non-negative");
    if (!(tau_cav > 0.0))
        throw std::invalid_argument("tau_cav must be positive");
    const double q = static_cast<double>(n_atoms) * n_bar * omega * omega * t *
                     tau_cav / std::sqrt(2.0);
    return static_cast<double>(n_atoms) / 4.0 * (1.0 + q);
}

ScatteringReport scattering_probability(double n_bar, double g_sq_weighted,
                                        double gamma, double delta, double t,
                                        std::uint64_t n_atoms, double omega_bar) {
    if (delta == 0.0)
        throw std::invalid_argument("detuning must be non-zero");
    if (std::abs(delta) < 10.0 * gamma)
        throw std::invalid_argument("scattering model requires |delta| >> gamma");
    if (n_bar < 0.0 || t < 0.0)
        throw std::invalid_argument("photon number and time must be non-negative");

    ScatteringReport r;
    r.p_scatter = n_bar * g_sq_weighted * gamma * t / (delta * delta);
    if (r.p_scatter > 1.0)
        r.p_scatter = 1.0;
    const double n = static_cast<double>(n_atoms);
    r.expected_scattered = n * r.p_scatter;
    const double phase = omega_bar * t;
    r.added_phase_variance = n * r.p_scatter * phase * phase / 4.0;
    r.contrast_multiplier = 1.0 - r.p_scatter;
    return r;
}

double metrological_squeezing_db(double var_z, double contrast,
                                 std::uint64_t n_atoms) {
    if (!(var_z > 0.0))
        throw std::invalid_argument("var_z must be positive");
    if (!(contrast > 0.0) || contrast > 1.0)
        throw std::invalid_argument("contrast must lie in (0,1]");
    const double quarter_n = static_cast<double>(n_atoms) / 4.0;
    return 10.0 * std::log10(var_z / quarter_n / (contrast * contrast));
}

} // namespace qnd
