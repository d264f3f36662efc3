#pragma once

// Classical macrorealist oracle: a two-state telegraph process with definite
// values q1, q2, q3 at the three times. With invasive_flip = 0 the t2
// measurement merely reads the current value (non-invasive measurability),
// so performing or omitting it cannot change the t3 statistics and d = 0
// holds exactly. A positive invasive_flip makes the measurement kick the
// state afterward with that probability -- the simplest classical mechanism
// that breaks the non-disturbance condition while keeping definite values at
// all times.

#include <cstdint>

#include "lgsim/protocol.hpp"

namespace lgsim {

struct TelegraphModel {
    double p_init = 0.0;       ///< P(q1 = +1)
    double p_flip_12 = 0.0;    ///< flip probability between t1 and t2
    double p_flip_23 = 0.0;    ///< flip probability between t2 and t3
    double invasive_flip = 0.0;///< P(state flips right after a t2 measurement)

    void validate() const;
};

/// Exact expectations and correlators by summing the (at most eight)
/// trajectories with their probabilities. All correlators are populated for
/// both arms -- in a hidden-variable model q2 exists whether or not it is
/// read out. With invasive_flip = 0 the two arms are identical term by term.
EnsembleStats enumerate_exact(const TelegraphModel& model, bool measure_at_t2);

/// Monte Carlo estimate over `shots` trajectories; identical seeds give
/// identical results. Throws std::invalid_argument when shots == 0.
EnsembleStats sample(const TelegraphModel& model, bool measure_at_t2,
                     std::uint64_t shots, std::uint64_t seed);

}  // namespace lgsim
