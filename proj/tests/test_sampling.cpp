#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "lgsim/sampling.hpp"
#include "support/generators.hpp"

using namespace lgsim;
using std::numbers::pi;

namespace {

ProtocolParams quarter_turns() {
    ProtocolParams p;
    p.theta1 = pi / 2;
    p.theta2 = pi / 2;
    return p;  // default 18 ns wait, 10 ns T2
}

}  // namespace

TEST_CASE("sample_protocol: a deterministic arm yields only -1") {
    ProtocolParams p;  // theta1 = theta2 = 0 keeps the ground state
    const ShotRecord rec = sample_protocol(p, true, 5000, 11);
    CHECK(rec.n_minus == 5000);
    CHECK(rec.n_plus == 0);
    CHECK(rec.estimate == -1.0);
    CHECK(rec.std_error == 0.0);
}

TEST_CASE("sample_protocol: reruns with one seed are bit-identical") {
    const ShotRecord a = sample_protocol(quarter_turns(), false, 20000, 77);
    const ShotRecord b = sample_protocol(quarter_turns(), false, 20000, 77);
    CHECK(a.n_plus == b.n_plus);
    CHECK(a.estimate == b.estimate);

    const ShotRecord c = sample_protocol(quarter_turns(), false, 20000, 78);
    CHECK(a.n_plus != c.n_plus);  // different stream
}

TEST_CASE("sample_protocol: estimates concentrate around the exact value") {
    const std::uint64_t shots = 100000;
    const ShotRecord rec = sample_protocol(quarter_turns(), true, shots, 5);
    CHECK(std::abs(rec.estimate) < 5.0 / std::sqrt(double(shots)));
}

TEST_CASE("sample_protocol rejects zero shots") {
    CHECK_THROWS_AS(sample_protocol(quarter_turns(), true, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("make_shot_record arithmetic") {
    const ShotRecord rec = make_shot_record(65, 35);
    CHECK(rec.shots() == 100);
    CHECK(rec.estimate == doctest::Approx(0.3));
    CHECK(rec.std_error == doctest::Approx(std::sqrt((1.0 - 0.09) / 100.0)));
    CHECK_THROWS_AS(make_shot_record(0, 0), std::invalid_argument);
}

TEST_CASE("ndc_test: identical records give z = 0, p = 1") {
    const ShotRecord rec = make_shot_record(600, 400);
    const NdcTest t = ndc_test(rec, rec);
    CHECK(t.d_hat == 0.0);
    CHECK(t.z_score == 0.0);
    CHECK(t.p_value == 1.0);
}

TEST_CASE("ndc_test: the strong-disturbance example is decisively rejected") {
    // 10^4 shots per arm, estimates 0 and ~0.1653: z lands near 11.9
    const ShotRecord pulsed = make_shot_record(5000, 5000);
    const ShotRecord plain = make_shot_record(5827, 4173);
    const NdcTest t = ndc_test(pulsed, plain);
    CHECK(t.d_hat == doctest::Approx(0.1654));
    CHECK(t.z_score > 11.0);
    CHECK(t.z_score < 13.0);
    CHECK(t.p_value < 1e-20);
}

TEST_CASE("ndc_test: degenerate zero-variance records") {
    const ShotRecord all_minus = make_shot_record(0, 1000);
    const ShotRecord all_plus = make_shot_record(1000, 0);
    const NdcTest same = ndc_test(all_minus, all_minus);
    CHECK(same.p_value == 1.0);
    const NdcTest differ = ndc_test(all_minus, all_plus);
    CHECK(differ.p_value == 0.0);
    CHECK(std::isinf(differ.z_score));
}

TEST_CASE("ndc_test: tiny samples stay inconclusive") {
    const ShotRecord a = sample_protocol(quarter_turns(), true, 10, 21);
    const ShotRecord b = sample_protocol(quarter_turns(), true, 10, 22);
    const NdcTest t = ndc_test(a, b);
    CHECK(t.p_value > 0.05);
}

TEST_CASE("property: the estimator is unbiased") {
    const ProtocolParams p = quarter_turns();
    const std::uint64_t shots = 4096;
    const int runs = 1000;
    const double exact = run_ensemble(p, false).q3;

    double mean = 0.0;
    for (int i = 0; i < runs; ++i) {
        mean += sample_protocol(p, false, shots, mix_seed(0xabc, i)).estimate;
    }
    mean /= runs;

    const double se_single = std::sqrt((1.0 - exact * exact) / double(shots));
    const double se_mean = se_single / std::sqrt(double(runs));
    CHECK(std::abs(mean - exact) < 4.0 * se_mean);
}

TEST_CASE("property: null p-values reject at roughly the nominal rate") {
    // both arms drawn from the same pulse ensemble: d = 0 by construction
    const ProtocolParams p = quarter_turns();
    const int trials = 500;
    const std::uint64_t shots = 2000;
    int rejections = 0;
    for (int i = 0; i < trials; ++i) {
        const ShotRecord a = sample_protocol(p, true, shots, mix_seed(0x9a11, 2 * i));
        const ShotRecord b =
            sample_protocol(p, true, shots, mix_seed(0x9a11, 2 * i + 1));
        if (ndc_test(a, b).p_value < 0.05) ++rejections;
    }
    const double rate = double(rejections) / trials;
    CHECK(rate > 0.02);
    CHECK(rate < 0.09);
}

TEST_CASE("mix_seed separates streams") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
    CHECK(mix_seed(7, 3) == mix_seed(7, 3));
}
