#pragma once

// Bloch-vector representation of a dissipative two-level system and the
// primitive channels acting on it: y-axis pseudo-spin rotation, exponential
// transverse dephasing, the complete-dephasing measurement pulse, and
// projective readout of Q = |e><e| - |g><g|.
//
// Basis convention: z = +1 is the excited state |e>, z = -1 is the ground
// state |g>, so <Q> equals the z component. Every channel here maps physical
// states (x^2 + y^2 + z^2 <= 1) to physical states.

namespace lgsim {

/// Absolute slack allowed on the Bloch-ball norm when deciding physicality.
inline constexpr double physicality_slack = 1e-12;

struct BlochState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
};

/// True when the state lies inside the Bloch ball, up to `slack`.
bool is_physical(const BlochState& s, double slack = physicality_slack);

constexpr BlochState ground_state() { return {0.0, 0.0, -1.0}; }

/// Expectation of Q = |e><e| - |g><g| in state `s`.
constexpr double q_expectation(const BlochState& s) { return s.z; }

/// Pseudo-spin rotation about the y axis:
///   x' = x cos(theta) + z sin(theta),  y' = y,  z' = z cos(theta) - x sin(theta).
/// With this sense, rotate(ground_state(), pi/2) = (-1, 0, 0).
/// Throws std::invalid_argument for non-finite angles.
BlochState rotate(const BlochState& s, double theta);

/// Transverse relaxation for a wait of `t` seconds with coherence time
/// `t2`: scales (x, y) by exp(-t/t2), leaves z untouched. `t2` may be
/// +infinity, in which case the state is returned unchanged exactly.
/// Throws std::invalid_argument for t < 0 or non-positive finite t2.
BlochState dephase(const BlochState& s, double t, double t2);

/// The measurement pulse: complete dephasing, (x, y, z) -> (0, 0, z).
BlochState measurement_pulse(const BlochState& s);

struct MeasurementOutcome {
    int value = 0;                  ///< +1 or -1
    double probability = 0.0;
    BlochState post_state{};        ///< collapsed state, x = y = 0
};

/// Both branches of a projective Q measurement.
struct ProjectiveBranches {
    MeasurementOutcome plus;
    MeasurementOutcome minus;
};

/// Projective measurement of Q: P(+1) = (1+z)/2 with post state (0,0,+1),
/// P(-1) = (1-z)/2 with post state (0,0,-1). The probability-weighted
/// average of the branches equals measurement_pulse(s).
/// Throws std::invalid_argument for unphysical input states.
ProjectiveBranches measure_projective(const BlochState& s);

}  // namespace lgsim
