#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "lgsim/bloch.hpp"
#include "support/density_oracle.hpp"
#include "support/generators.hpp"

using namespace lgsim;
using std::numbers::pi;

TEST_CASE("ground state is the -1 eigenstate of Q") {
    const BlochState g = ground_state();
    CHECK(g.x == 0.0);
    CHECK(g.y == 0.0);
    CHECK(g.z == -1.0);
    CHECK(q_expectation(g) == -1.0);
}

TEST_CASE("rotate: identity, half turn, quarter turn") {
    const BlochState g = ground_state();

    const BlochState same = rotate(g, 0.0);
    CHECK(same.x == doctest::Approx(0.0));
    CHECK(same.z == doctest::Approx(-1.0));

    const BlochState flipped = rotate(g, pi);
    CHECK(flipped.z == doctest::Approx(1.0));

    const BlochState quarter = rotate(g, pi / 2);
    CHECK(quarter.x == doctest::Approx(-1.0));
    CHECK(quarter.y == doctest::Approx(0.0));
    CHECK(quarter.z == doctest::Approx(0.0));
}

TEST_CASE("rotate rejects non-finite angles") {
    CHECK_THROWS_AS(rotate(ground_state(), std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(rotate(ground_state(), INFINITY), std::invalid_argument);
}

TEST_CASE("dephase scales the transverse components by exp(-t/T2)") {
    const BlochState s{1.0, 0.0, 0.0};

    const BlochState untouched = dephase(s, 0.0, 10e-9);
    CHECK(untouched.x == 1.0);

    const BlochState decayed = dephase(s, 18e-9, 10e-9);
    CHECK(decayed.x == doctest::Approx(std::exp(-1.8)).epsilon(1e-12));
    CHECK(decayed.x == doctest::Approx(0.165299).epsilon(1e-5));
    CHECK(decayed.z == 0.0);
}

TEST_CASE("dephase with infinite T2 is the identity, exactly") {
    const BlochState s{0.5, 0.5, 0.2};
    for (const double t : {0.0, 1e-9, 18e-9, 1.0}) {
        const BlochState out = dephase(s, t, t2_infinite);
        CHECK(out.x == s.x);
        CHECK(out.y == s.y);
        CHECK(out.z == s.z);
    }
}

TEST_CASE("dephase rejects bad times") {
    const BlochState s{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(dephase(s, -1e-9, 10e-9), std::invalid_argument);
    CHECK_THROWS_AS(dephase(s, 1e-9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dephase(s, 1e-9, -10e-9), std::invalid_argument);
    CHECK_THROWS_AS(dephase(s, std::nan(""), 10e-9), std::invalid_argument);
    CHECK_THROWS_AS(dephase(s, 1e-9, std::nan("")), std::invalid_argument);
}

TEST_CASE("measurement pulse erases the transverse components") {
    const BlochState out = measurement_pulse({0.7, -0.2, 0.1});
    CHECK(out.x == 0.0);
    CHECK(out.y == 0.0);
    CHECK(out.z == 0.1);

    // idempotent
    const BlochState twice = measurement_pulse(out);
    CHECK(twice.x == out.x);
    CHECK(twice.z == out.z);

    // Q eigenstates are fixed points
    const BlochState g = measurement_pulse(ground_state());
    CHECK(g.z == -1.0);
}

TEST_CASE("projective measurement probabilities and post states") {
    const ProjectiveBranches mixed = measure_projective({0.0, 0.0, 0.0});
    CHECK(mixed.plus.probability == doctest::Approx(0.5));
    CHECK(mixed.minus.probability == doctest::Approx(0.5));

    const ProjectiveBranches pure = measure_projective(ground_state());
    CHECK(pure.minus.probability == 1.0);
    CHECK(pure.plus.probability == 0.0);

    const ProjectiveBranches tilted = measure_projective({0.6, 0.0, 0.3});
    CHECK(tilted.plus.probability == doctest::Approx(0.65));
    CHECK(tilted.minus.probability == doctest::Approx(0.35));
    CHECK(tilted.plus.post_state.x == 0.0);
    CHECK(tilted.plus.post_state.z == 1.0);
    CHECK(tilted.minus.post_state.z == -1.0);
}

TEST_CASE("projective measurement rejects unphysical states") {
    CHECK_THROWS_AS(measure_projective({1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(measure_projective({0.0, 0.0, 1.1}), std::invalid_argument);
}

TEST_CASE("property: channels preserve physicality") {
    gen::Rng rng(0xb10c4);
    for (int i = 0; i < 10000; ++i) {
        const BlochState s = rng.state();
        REQUIRE(is_physical(s));
        CHECK(is_physical(rotate(s, rng.angle())));
        CHECK(is_physical(dephase(s, rng.wait(), rng.coherence())));
        CHECK(is_physical(measurement_pulse(s)));
        const ProjectiveBranches b = measure_projective(s);
        CHECK(is_physical(b.plus.post_state));
        CHECK(is_physical(b.minus.post_state));
        CHECK(b.plus.probability >= 0.0);
        CHECK(b.minus.probability >= 0.0);
        CHECK(b.plus.probability + b.minus.probability == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("property: branch average of a measurement equals the pulse") {
    gen::Rng rng(0xa7e4a6e);
    for (int i = 0; i < 2000; ++i) {
        const BlochState s = rng.state();
        const ProjectiveBranches b = measure_projective(s);
        const BlochState pulsed = measurement_pulse(s);
        const double avg_x = b.plus.probability * b.plus.post_state.x +
                             b.minus.probability * b.minus.post_state.x;
        const double avg_y = b.plus.probability * b.plus.post_state.y +
                             b.minus.probability * b.minus.post_state.y;
        const double avg_z = b.plus.probability * b.plus.post_state.z +
                             b.minus.probability * b.minus.post_state.z;
        CHECK(std::abs(avg_x - pulsed.x) < 1e-14);
        CHECK(std::abs(avg_y - pulsed.y) < 1e-14);
        CHECK(std::abs(avg_z - pulsed.z) < 1e-14);
    }
}

TEST_CASE("property: rotations compose additively") {
    gen::Rng rng(0xc0305e);
    for (int i = 0; i < 2000; ++i) {
        const BlochState s = rng.state();
        const double a = rng.angle();
        const double b = rng.angle();
        const BlochState two_step = rotate(rotate(s, a), b);
        const BlochState one_step = rotate(s, a + b);
        CHECK(std::abs(two_step.x - one_step.x) < 1e-12);
        CHECK(std::abs(two_step.y - one_step.y) < 1e-12);
        CHECK(std::abs(two_step.z - one_step.z) < 1e-12);
    }
}

TEST_CASE("property: channels agree with the density-matrix picture") {
    gen::Rng rng(0xdead11);
    for (int i = 0; i < 2000; ++i) {
        const BlochState s = rng.state();
        const oracle::Mat2 rho = oracle::from_bloch(s.x, s.y, s.z);

        const double theta = rng.angle();
        const BlochState rotated = rotate(s, theta);
        const auto [rx, ry, rz] = oracle::to_bloch(oracle::rotate(rho, theta));
        CHECK(std::abs(rotated.x - rx) < 1e-14);
        CHECK(std::abs(rotated.y - ry) < 1e-14);
        CHECK(std::abs(rotated.z - rz) < 1e-14);

        const double t = rng.wait();
        const double t2 = rng.coherence();
        const BlochState relaxed = dephase(s, t, t2);
        const auto [dx, dy, dz] = oracle::to_bloch(oracle::dephase(rho, t, t2));
        CHECK(std::abs(relaxed.x - dx) < 1e-14);
        CHECK(std::abs(relaxed.y - dy) < 1e-14);
        CHECK(std::abs(relaxed.z - dz) < 1e-14);

        const ProjectiveBranches b = measure_projective(s);
        CHECK(std::abs(b.plus.probability -
                       oracle::trace_real(oracle::project(rho, +1))) < 1e-14);
        CHECK(std::abs(b.minus.probability -
                       oracle::trace_real(oracle::project(rho, -1))) < 1e-14);
    }
}
