#pragma once

#include "qnd/backaction.hpp"
#include "qnd/coupling.hpp"
#include "qnd/core.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qnd {

enum class SegmentKind { ProbeOn, ProbeOff, Microwave };

struct PulseSegment {
    SegmentKind kind = SegmentKind::ProbeOff;
    double duration = 0.0;       ///< s
    double rotation_angle = 0.0; ///< rad, microwave only
    double axis_phase = 0.0;     ///< rad, microwave only (0 = mean-spin axis)

    static PulseSegment probe_on(double duration);
    static PulseSegment probe_off(double duration);
    static PulseSegment microwave(double duration, double angle,
                                  double axis_phase = 0.0);
};

struct SequenceError {
    std::size_t segment_index;
    std::string message;
};

class SequenceValidationError : public std::runtime_error {
public:
    explicit SequenceValidationError(std::vector<SequenceError> errors);
    const std::vector<SequenceError>& errors() const { return errors_; }

private:
    std::vector<SequenceError> errors_;
};

/// An ordered pulse program. Probe-on segments may not be adjacent (light
/// never switches on twice without an off/microwave boundary), and the
/// total duration must respect the atom transit limit.
struct PulseSequence {
    std::vector<PulseSegment> segments;

    double total_duration() const;
    std::vector<SequenceError> check(double transit_limit = 3e-3) const;
    /// Throws SequenceValidationError if check() reports anything.
    void validate(double transit_limit = 3e-3) const;

    /// (segment index, absolute start time) of every probe-on segment.
    std::vector<std::pair<std::size_t, double>> probe_on_segments() const;
    /// Index into segments of the first microwave with |angle - pi| < tol,
    /// or npos.
    std::size_t echo_pulse_index(double tol = 0.15) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Parse/serialize the sequence-file format: a JSON array of
/// {"kind": "probe_on"|"probe_off"|"microwave", "duration_us": number,
///  "angle_rad": number?, "axis_phase_rad": number?}.
/// Parse errors carry the offending segment index.
PulseSequence parse_sequence_json(const std::string& text);
std::string sequence_to_json(const PulseSequence& seq);

/// Ideal instantaneous rotation of the Gaussian moments by theta about an
/// equatorial axis at axis_phase from the mean-spin (x) axis. Means follow
/// the full Bloch rotation; the (y,z) covariance transforms as the 2x2
/// quadratic form of an in-plane rotation, exact for rotations about the
/// mean-spin axis. Contrast is untouched.
SpinMoments rotate_moments(const SpinMoments& m, double theta, double axis_phase);

struct RotationCurveParams {
    double var_z = 0.0;   ///< squeezed variance, J_z^2 units
    double var_y = 0.0;   ///< antisqueezed variance
    double v_floor = 0.0; ///< no-atom noise floor, same units
};

/// V(theta) = var_z cos^2 + var_y sin^2 + v_floor for each requested angle.
std::vector<std::pair<double, double>>
rotation_noise_curve(const RotationCurveParams& params,
                     const std::vector<double>& thetas);

/// Dephasing context for contrast estimates: peak shift rate, mode radius,
/// ensemble drift, and the scattering loss accrued by the squeezing pulses.
struct ContrastModel {
    double omega_max = 0.0;
    double r_c = 0.0;
    double p_scatter = 0.0; ///< total over the preparation pulses
};

/// Coupling-weighted echo contrast of the spin-echo sequence:
/// |sum_i w_i exp(i(phi2_i - phi1_i))| / sum_i w_i * (1 - p_scatter), with
/// phi_i^(k) = n_bar * Omega_i(t_k) * tau_k the differential Stark phase of
/// squeezing pulse k, Omega_i re-evaluated at each pulse midpoint after
/// ballistic motion, and w_i = Omega_i at readout.
/// Requires a pi microwave pulse between the two probe pulses.
double echo_contrast(const AtomEnsemble& ensemble, const PhotonDrive& drive,
                     const PulseSequence& seq, const ContrastModel& model);

/// Contrast of an arbitrary probe program without requiring an echo pulse:
/// per-atom Stark phases accumulate with sign +1 before a pi pulse and -1
/// after. A single probe pulse gives the plain inhomogeneous dephasing;
/// with an echo this reduces to echo_contrast.
double sequence_contrast(const AtomEnsemble& ensemble, const PhotonDrive& drive,
                         const PulseSequence& seq, const ContrastModel& model);

/// Half-open time window [t_start, t_end) over a phase trace.
struct Window {
    double t_start = 0.0;
    double t_end = 0.0;
};

using PhaseTrace = std::vector<std::pair<double, double>>; // (time, phase)

/// Mean of samples in window_b minus mean of samples in window_a.
/// Throws std::invalid_argument if either window contains no samples.
double difference_of_means(const PhaseTrace& trace, const Window& window_a,
                           const Window& window_b);

struct AtomNumberReadout {
    double mean_phase = 0.0; ///< rad, average of the two window phases
    double n_estimate = 0.0; ///< atoms, from the number-proportional shift
};

/// Average of the phases measured in the two probe windows that straddle
/// the echo pulse. The J_z contributions cancel by the echo sign flip,
/// leaving the atom-number-proportional offset
/// (N/2) * omega_number * tau_cav.
AtomNumberReadout atom_number_readout(double phase_window_1,
                                      double phase_window_2,
                                      double omega_number_bar, double tau_cav);

} // namespace qnd
