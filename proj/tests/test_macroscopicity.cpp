#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lgsim/macroscopicity.hpp"
#include "lgsim/units.hpp"
#include "support/generators.hpp"

using namespace lgsim;

TEST_CASE("extensive difference at the default operating point") {
    const MacroParams p = MacroParams::flux_qubit_defaults();
    const double dm = extensive_difference(p);

    // direct arithmetic, written out independently
    const double by_hand = 2.0 * 170e-9 * 7e-12 / 9.2740100783e-24;
    CHECK(dm == doctest::Approx(by_hand).epsilon(1e-12));

    // about twice 130,000, within 3 percent
    CHECK(std::abs(dm - 2.0 * 130000.0) / (2.0 * 130000.0) < 0.03);
}

TEST_CASE("the overlap factor scales the moment difference exactly") {
    MacroParams p = MacroParams::flux_qubit_defaults();
    const double full = extensive_difference(p);
    p.overlap = 0.7;
    const double reduced = extensive_difference(p);
    CHECK(reduced == 0.7 * full);  // bitwise: same product, same order
    CHECK(reduced == doctest::Approx(1.796e5).epsilon(1e-3));
}

TEST_CASE("disconnectivity at the default operating point") {
    const MacroParams p = MacroParams::flux_qubit_defaults();
    const double dn = disconnectivity(p);
    const double by_hand =
        6.0 * (4.0 * std::sqrt(7e-12)) * 170e-9 / (4.0 * 1.602176634e-19 * 2.03e6);
    CHECK(dn == doctest::Approx(by_hand).epsilon(1e-12));
    CHECK(dn > 7.5);
    CHECK(dn < 8.5);
}

TEST_CASE("both figures are linear and monotone in the current") {
    MacroParams p = MacroParams::flux_qubit_defaults();
    const MacroReport base = macro_report(p);
    p.persistent_current *= 2.0;
    const MacroReport doubled = macro_report(p);
    CHECK(doubled.delta_m_bohr == 2.0 * base.delta_m_bohr);
    CHECK(doubled.delta_n == 2.0 * base.delta_n);

    gen::Rng rng(0xacc);
    for (int i = 0; i < 200; ++i) {
        MacroParams a = MacroParams::flux_qubit_defaults();
        a.persistent_current = rng.uniform(1e-9, 1e-6);
        MacroParams b = a;
        b.persistent_current *= rng.uniform(1.01, 10.0);
        CHECK(extensive_difference(b) > extensive_difference(a));
        CHECK(disconnectivity(b) > disconnectivity(a));
    }
}

TEST_CASE("doubling the circumference doubles the disconnectivity") {
    MacroParams p = MacroParams::flux_qubit_defaults();
    const double base = disconnectivity(p);
    p.circumference *= 2.0;
    CHECK(disconnectivity(p) == 2.0 * base);
}

TEST_CASE("parameter validation") {
    MacroParams p = MacroParams::flux_qubit_defaults();
    p.persistent_current = 0.0;
    CHECK_THROWS_AS(extensive_difference(p), std::invalid_argument);

    p = MacroParams::flux_qubit_defaults();
    p.loop_area = -1.0;
    CHECK_THROWS_AS(extensive_difference(p), std::invalid_argument);

    p = MacroParams::flux_qubit_defaults();
    p.overlap = 1.2;
    CHECK_THROWS_AS(extensive_difference(p), std::invalid_argument);

    p = MacroParams::flux_qubit_defaults();
    p.fermi_velocity = std::nan("");
    CHECK_THROWS_AS(disconnectivity(p), std::invalid_argument);
}

TEST_CASE("suffixed and bare SI entries produce the same numbers") {
    using namespace lgsim::units;
    CHECK(parse_current("170nA") == doctest::Approx(170e-9).epsilon(1e-15));
    CHECK(parse_area("7um2") == doctest::Approx(7e-12).epsilon(1e-15));
    CHECK(parse_length("10.58um") == doctest::Approx(10.58e-6).epsilon(1e-15));
    CHECK(parse_duration("18ns") == doctest::Approx(18e-9).epsilon(1e-15));

    MacroParams suffixed = MacroParams::flux_qubit_defaults();
    suffixed.persistent_current = parse_current("170nA");
    suffixed.loop_area = parse_area("7um2");
    MacroParams bare = MacroParams::flux_qubit_defaults();
    bare.persistent_current = parse_current("1.7e-7");
    bare.loop_area = parse_area("7e-12");
    CHECK(extensive_difference(suffixed) ==
          doctest::Approx(extensive_difference(bare)).epsilon(1e-14));
    CHECK(disconnectivity(suffixed) ==
          doctest::Approx(disconnectivity(bare)).epsilon(1e-14));
}

TEST_CASE("unit parsing accepts the documented spellings and rejects junk") {
    using namespace lgsim::units;
    CHECK(parse_duration("1.5us") == doctest::Approx(1.5e-6));
    CHECK(parse_duration("2") == 2.0);
    CHECK(std::isinf(parse_duration_or_infinite("inf")));
    CHECK(std::isinf(parse_duration_or_infinite("infinity")));
    CHECK(parse_duration_or_infinite("10ns") == doctest::Approx(10e-9));
    CHECK(parse_area("7um^2") == doctest::Approx(7e-12));
    CHECK(parse_length("5mm") == doctest::Approx(5e-3));
    CHECK(parse_current("2uA") == doctest::Approx(2e-6));

    CHECK_THROWS_AS(parse_duration("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("10xs"), std::invalid_argument);
    CHECK_THROWS_AS(parse_current("10ns"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("inf"), std::invalid_argument);
    CHECK_THROWS_AS(parse_number("7um"), std::invalid_argument);
}
