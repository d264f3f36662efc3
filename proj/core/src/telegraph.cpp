#include "lgsim/telegraph.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace lgsim {

namespace {

void check_probability(double p, const char* name) {
    if (std::isnan(p) || p < 0.0 || p > 1.0) {
        throw std::invalid_argument(std::string("telegraph: ") + name +
                                    " must lie in [0, 1]");
    }
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

void TelegraphModel::validate() const {
    check_probability(p_init, "p_init");
    check_probability(p_flip_12, "p_flip_12");
    check_probability(p_flip_23, "p_flip_23");
    check_probability(invasive_flip, "invasive_flip");
}

EnsembleStats enumerate_exact(const TelegraphModel& model, bool measure_at_t2) {
    model.validate();

    EnsembleStats stats;
    stats.ensemble = measure_at_t2 ? Ensemble::with_pulse : Ensemble::no_pulse;

    double q2e = 0.0, q3e = 0.0, c12 = 0.0, c13 = 0.0, c23 = 0.0;
    for (const int q1 : {+1, -1}) {
        const double p1 = q1 > 0 ? model.p_init : 1.0 - model.p_init;
        for (const int q2 : {+1, -1}) {
            const double p2 = q2 != q1 ? model.p_flip_12 : 1.0 - model.p_flip_12;
            // state carried into the last interval; a measurement at t2 may
            // kick it to -q2 with probability invasive_flip
            for (const int carried : {+1, -1}) {
                double pc;
                if (measure_at_t2) {
                    pc = carried == q2 ? 1.0 - model.invasive_flip
                                       : model.invasive_flip;
                } else {
                    pc = carried == q2 ? 1.0 : 0.0;
                }
                if (pc == 0.0) continue;
                for (const int q3 : {+1, -1}) {
                    const double p3 =
                        q3 != carried ? model.p_flip_23 : 1.0 - model.p_flip_23;
                    const double w = p1 * p2 * pc * p3;
                    q2e += w * q2;
                    q3e += w * q3;
                    c12 += w * q1 * q2;
                    c13 += w * q1 * q3;
                    c23 += w * q2 * q3;
                }
            }
        }
    }

    stats.q3 = q3e;
    stats.q2 = q2e;
    stats.corr_q1q2 = c12;
    stats.corr_q1q3 = c13;
    stats.corr_q2q3 = c23;
    return stats;
}

EnsembleStats sample(const TelegraphModel& model, bool measure_at_t2,
                     std::uint64_t shots, std::uint64_t seed) {
    model.validate();
    if (shots == 0) {
        throw std::invalid_argument("telegraph sample: shots must be >= 1");
    }

    std::mt19937_64 gen(seed);
    auto coin = [&gen](double p) { return uniform01(gen) < p; };

    std::int64_t q2s = 0, q3s = 0, s12 = 0, s13 = 0, s23 = 0;
    for (std::uint64_t i = 0; i < shots; ++i) {
        const int q1 = coin(model.p_init) ? +1 : -1;
        const int q2 = coin(model.p_flip_12) ? -q1 : q1;
        int carried = q2;
        if (measure_at_t2 && coin(model.invasive_flip)) carried = -q2;
        const int q3 = coin(model.p_flip_23) ? -carried : carried;
        q2s += q2;
        q3s += q3;
        s12 += q1 * q2;
        s13 += q1 * q3;
        s23 += q2 * q3;
    }

    const double n = static_cast<double>(shots);
    EnsembleStats stats;
    stats.ensemble = measure_at_t2 ? Ensemble::with_pulse : Ensemble::no_pulse;
    stats.q3 = static_cast<double>(q3s) / n;
    stats.q2 = static_cast<double>(q2s) / n;
    stats.corr_q1q2 = static_cast<double>(s12) / n;
    stats.corr_q1q3 = static_cast<double>(s13) / n;
    stats.corr_q2q3 = static_cast<double>(s23) / n;
    stats.shots = shots;
    return stats;
}

}  // namespace lgsim
