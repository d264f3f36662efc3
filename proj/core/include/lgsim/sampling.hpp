#pragma once

// Finite-shot emulation of the protocol and a two-sample z test for the
// non-disturbance condition d = 0. Estimates use the normal approximation,
// which is adequate for the shot counts this tool targets (>= a few hundred
// per arm); below ~100 shots the reported p-values are only indicative.

#include <cstdint>

#include "lgsim/protocol.hpp"

namespace lgsim {

/// Counts of +1/-1 outcomes from one ensemble arm.
/// estimate = (n_plus - n_minus) / shots, std_error = sqrt((1 - estimate^2)/shots).
struct ShotRecord {
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;

    std::uint64_t shots() const { return n_plus + n_minus; }
};

/// Builds a record from raw counts. Throws when both counts are zero.
ShotRecord make_shot_record(std::uint64_t n_plus, std::uint64_t n_minus,
                            std::uint64_t seed = 0);

/// Draws `shots` Q3 outcomes from the exact distribution of the requested
/// ensemble. Identical (params, with_pulse, shots, seed) give bit-identical
/// records. Throws std::invalid_argument when shots == 0.
ShotRecord sample_protocol(const ProtocolParams& params, bool with_pulse,
                           std::uint64_t shots, std::uint64_t seed);

/// Two-sample z test of d = 0.
struct NdcTest {
    double d_hat = 0.0;     ///< estimate_no_pulse - estimate_with_pulse
    double se_d = 0.0;      ///< sqrt(se_G^2 + se_no_pulse^2)
    double z_score = 0.0;
    double p_value = 1.0;   ///< two-sided normal p-value
};

/// When both standard errors vanish the test is degenerate: p = 1 for equal
/// estimates, p = 0 otherwise.
NdcTest ndc_test(const ShotRecord& with_pulse, const ShotRecord& no_pulse);

/// Deterministic per-stream seed derivation (splitmix-style mixer), so that
/// independent arms or trials can share one base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace lgsim
