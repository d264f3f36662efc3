#include "lgsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace lgsim {

ShotRecord make_shot_record(std::uint64_t n_plus, std::uint64_t n_minus,
                            std::uint64_t seed) {
    const std::uint64_t shots = n_plus + n_minus;
    if (shots == 0) {
        throw std::invalid_argument("shot record needs at least one outcome");
    }
    ShotRecord rec;
    rec.n_plus = n_plus;
    rec.n_minus = n_minus;
    rec.seed = seed;
    const double n = static_cast<double>(shots);
    rec.estimate = (static_cast<double>(n_plus) - static_cast<double>(n_minus)) / n;
    rec.std_error = std::sqrt(std::max(0.0, 1.0 - rec.estimate * rec.estimate) / n);
    return rec;
}

ShotRecord sample_protocol(const ProtocolParams& params, bool with_pulse,
                           std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample_protocol: shots must be >= 1");
    }
    const double p_plus = 0.5 * (1.0 + run_ensemble(params, with_pulse).q3);

    std::mt19937_64 gen(seed);
    std::uint64_t n_plus = 0;
    for (std::uint64_t i = 0; i < shots; ++i) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        n_plus += u < p_plus ? 1 : 0;
    }
    return make_shot_record(n_plus, shots - n_plus, seed);
}

NdcTest ndc_test(const ShotRecord& with_pulse, const ShotRecord& no_pulse) {
    if (with_pulse.shots() == 0 || no_pulse.shots() == 0) {
        throw std::invalid_argument("ndc_test: both records must be nonempty");
    }
    NdcTest t;
    t.d_hat = no_pulse.estimate - with_pulse.estimate;
    t.se_d = std::hypot(with_pulse.std_error, no_pulse.std_error);
    if (t.se_d > 0.0) {
        t.z_score = t.d_hat / t.se_d;
        t.p_value = std::erfc(std::abs(t.z_score) / std::sqrt(2.0));
    } else if (t.d_hat == 0.0) {
        t.z_score = 0.0;
        t.p_value = 1.0;
    } else {
        t.z_score = std::copysign(std::numeric_limits<double>::infinity(), t.d_hat);
        t.p_value = 0.0;
    }
    return t;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace lgsim
