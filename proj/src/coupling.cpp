#include "qnd/coupling.hpp"

#include "qnd/constants.hpp"
#include "qnd/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qnd {

double coupling_reduction_factor(double r_a, double r_c) {
    if (!(r_c > 0.0))
        throw std::invalid_argument("mode radius r_c must be positive");
    if (r_a < 0.0)
        throw std::invalid_argument("cloud radius r_a must be non-negative");
    const double k = (r_a / r_c) * (r_a / r_c);
    return 2.0 * (k + 1.0);
}

double effective_projection_variance(std::uint64_t n_atoms, double omega_max,
                                     double r_a, double r_c) {
    if (n_atoms < 1)
        throw std::invalid_argument("n_atoms must be at least 1");
    if (!(r_c > 0.0))
        throw std::invalid_argument("mode radius r_c must be positive");
    const double k = (r_a / r_c) * (r_a / r_c);
    return static_cast<double>(n_atoms) / 16.0 * omega_max * omega_max /
           (2.0 * k + 1.0);
}

double weighted_prior_variance(std::uint64_t n_atoms, double r_a, double r_c) {
    const double k = (r_a / r_c) * (r_a / r_c);
    return static_cast<double>(n_atoms) / 4.0 * (k + 1.0) * (k + 1.0) /
           (2.0 * k + 1.0);
}

AtomEnsemble sample_ensemble(std::uint64_t n_atoms, double r_a, double temperature,
                             std::uint64_t seed, double drift_velocity,
                             double node_spacing, double atom_mass) {
    if (n_atoms < 1)
        throw std::invalid_argument("n_atoms must be at least 1");
    if (!(r_a > 0.0))
        throw std::invalid_argument("cloud radius must be positive");
    if (temperature < 0.0)
        throw std::invalid_argument("temperature must be non-negative");
    if (atom_mass <= 0.0)
        atom_mass = constants::rb87_mass;

    const double sigma_pos = r_a / std::sqrt(2.0); // per-axis, density ~ exp(-rho^2/r_a^2)
    const double sigma_v =
        temperature > 0.0 ? std::sqrt(constants::k_boltzmann * temperature / atom_mass)
                          : 0.0;

    AtomEnsemble ens;
    ens.n_atoms = n_atoms;
    ens.cloud_radius = r_a;
    ens.temperature = temperature;
    ens.drift_velocity = drift_velocity;
    ens.expansion_velocity = sigma_v;
    ens.atoms.resize(n_atoms);

    Rng rng(seed);
    for (auto& a : ens.atoms) {
        a.x = rng.normal(0.0, sigma_pos);
        a.y = rng.normal(0.0, sigma_pos);
        a.z_axial = rng.uniform() * node_spacing;
        a.vx = sigma_v > 0.0 ? rng.normal(0.0, sigma_v) : 0.0;
        a.vy = sigma_v > 0.0 ? rng.normal(0.0, sigma_v) : 0.0;
        a.vz = sigma_v > 0.0 ? rng.normal(0.0, sigma_v) : 0.0;
    }
    return ens;
}

double coupling_weight(const Atom& atom, double omega_max, double r_c) {
    return omega_max * 0.5 * std::exp(-atom.rho_sq() / (r_c * r_c));
}

Atom drift_atom(const Atom& atom, double dt, double drift_velocity) {
    Atom moved = atom;
    moved.x += atom.vx * dt;
    moved.y += (atom.vy - drift_velocity) * dt;
    moved.z_axial += atom.vz * dt;
    return moved;
}

double coupling_drift(const Atom& atom, double dt, double r_c,
                      double drift_velocity) {
    if (dt < 0.0)
        throw std::invalid_argument("dt must be non-negative");
    const Atom moved = drift_atom(atom, dt, drift_velocity);
    // omega_max cancels in the ratio
    return std::exp((atom.rho_sq() - moved.rho_sq()) / (r_c * r_c)) - 1.0;
}

CouplingStats closed_form_coupling_stats(std::uint64_t n_atoms, double omega_max,
                                         double r_a, double r_c) {
    CouplingStats s;
    s.reduction_factor = coupling_reduction_factor(r_a, r_c);
    s.omega_mean = omega_max / s.reduction_factor;
    const double k = (r_a / r_c) * (r_a / r_c);
    s.omega_sq_mean = omega_max * omega_max / 4.0 / (2.0 * k + 1.0);
    s.effective_projection_variance =
        effective_projection_variance(n_atoms, omega_max, r_a, r_c);
    return s;
}

CouplingStats empirical_coupling_stats(const AtomEnsemble& ensemble,
                                       double omega_max, double r_c) {
    if (ensemble.atoms.empty())
        throw std::invalid_argument("ensemble has no materialized atoms");
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& a : ensemble.atoms) {
        const double w = coupling_weight(a, omega_max, r_c);
        sum += w;
        sum_sq += w * w;
    }
    const double n = static_cast<double>(ensemble.atoms.size());
    CouplingStats s;
    s.omega_mean = sum / n;
    s.omega_sq_mean = sum_sq / n;
    s.reduction_factor = omega_max / s.omega_mean;
    // independent j_i = +/-1/2 make Var(sum_i Omega_i j_i) = sum_i Omega_i^2 / 4
    s.effective_projection_variance = sum_sq / 4.0;
    return s;
}

} // namespace qnd
