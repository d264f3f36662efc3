#include "lgsim/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgsim {

bool is_physical(const BlochState& s, double slack) {
    return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z) &&
           s.norm2() <= 1.0 + slack;
}

BlochState rotate(const BlochState& s, double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotate: angle must be finite");
    }
    const double c = std::cos(theta);
    const double k = std::sin(theta);
    return {s.x * c + s.z * k, s.y, s.z * c - s.x * k};
}

BlochState dephase(const BlochState& s, double t, double t2) {
    if (std::isnan(t) || t < 0.0 || !std::isfinite(t)) {
        throw std::invalid_argument("dephase: wait time must be finite and >= 0");
    }
    if (std::isnan(t2) || t2 <= 0.0) {
        throw std::invalid_argument("dephase: coherence time must be positive or infinite");
    }
    if (std::isinf(t2)) {
        return s;  // identity, exactly
    }
    const double gamma = std::exp(-t / t2);
    return {s.x * gamma, s.y * gamma, s.z};
}

BlochState measurement_pulse(const BlochState& s) {
    return {0.0, 0.0, s.z};
}

ProjectiveBranches measure_projective(const BlochState& s) {
    if (!is_physical(s)) {
        throw std::invalid_argument("measure_projective: state lies outside the Bloch ball");
    }
    // the physicality slack admits |z| marginally above 1; keep probabilities in range
    const auto clamp01 = [](double p) { return std::min(1.0, std::max(0.0, p)); };
    return {
        {+1, clamp01(0.5 * (1.0 + s.z)), {0.0, 0.0, +1.0}},
        {-1, clamp01(0.5 * (1.0 - s.z)), {0.0, 0.0, -1.0}},
    };
}

}  // namespace lgsim
