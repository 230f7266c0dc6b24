#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace qnd {

/// Deterministic random stream for one shot.
///
/// std::normal_distribution and friends are implementation-defined, which
/// would break byte-identical output across compilers and standard
/// libraries. The engine is mt19937_64 (fully specified); the
/// distributions below are spelled out so a (master_seed, stream_index)
/// pair produces the same draws everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream seeded from a master seed and a counter (one stream per shot).
    static Rng for_stream(std::uint64_t master_seed, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                          static_cast<std::uint32_t>(master_seed >> 32),
                          static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(index >> 32)};
        Rng r(0);
        r.engine_.seed(seq);
        return r;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Draws are cached in pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Binomial(n, p). Exact CDF inversion for small n*p spread, normal
    /// approximation (rounded, clamped) once the count is large enough that
    /// the discrete correction is far below sampling noise.
    std::uint64_t binomial(std::uint64_t n, double p);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline std::uint64_t Rng::binomial(std::uint64_t n, double p) {
    if (n == 0 || p <= 0.0)
        return 0;
    if (p >= 1.0)
        return n;
    const double nd = static_cast<double>(n);
    const double np = nd * p;
    const double var = np * (1.0 - p);
    if (var > 10000.0) {
        const double x = std::round(normal(np, std::sqrt(var)));
        if (x <= 0.0)
            return 0;
        if (x >= nd)
            return n;
        return static_cast<std::uint64_t>(x);
    }
    // Exact inversion: zig-zag outward from the mode using pmf ratio
    // recurrences, so a draw costs O(sqrt(var)) multiplies.
    const std::uint64_t mode =
        static_cast<std::uint64_t>(std::min(nd, std::floor((nd + 1.0) * p)));
    const double log_pmf_mode =
        std::lgamma(nd + 1.0) - std::lgamma(static_cast<double>(mode) + 1.0) -
        std::lgamma(static_cast<double>(n - mode) + 1.0) +
        static_cast<double>(mode) * std::log(p) +
        static_cast<double>(n - mode) * std::log1p(-p);
    double u = uniform() - std::exp(log_pmf_mode);
    if (u < 0.0)
        return mode;
    std::uint64_t lo = mode, hi = mode;
    double p_lo = std::exp(log_pmf_mode), p_hi = p_lo;
    const double odds = p / (1.0 - p);
    while (lo > 0 || hi < n) {
        if (hi < n) {
            p_hi *= static_cast<double>(n - hi) / static_cast<double>(hi + 1) * odds;
            ++hi;
            u -= p_hi;
            if (u < 0.0)
                return hi;
        }
        if (lo > 0) {
            p_lo *= static_cast<double>(lo) / (static_cast<double>(n - lo + 1) * odds);
            --lo;
            u -= p_lo;
            if (u < 0.0)
                return lo;
        }
    }
    return mode;
}

} // namespace qnd
