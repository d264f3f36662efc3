#pragma once

// Parsing for quantities with SI suffixes as they appear on the command line
// and in config files ("18ns", "170nA", "7um2", "10.58um"). Bare numbers are
// taken as base SI units. Parsers throw std::invalid_argument on malformed
// input or an unknown suffix.

#include <numbers>
#include <string_view>

namespace lgsim::units {

/// Seconds; suffixes s, ms, us, ns, ps.
double parse_duration(std::string_view text);

/// Like parse_duration, but "inf" / "infinity" yield +infinity (for T2).
double parse_duration_or_infinite(std::string_view text);

/// Amperes; suffixes A, mA, uA, nA, pA.
double parse_current(std::string_view text);

/// Metres; suffixes m, mm, um, nm.
double parse_length(std::string_view text);

/// Square metres; suffixes m2, mm2, um2, nm2 (also the ^2 spellings).
double parse_area(std::string_view text);

/// Plain number with no suffix allowed.
double parse_number(std::string_view text);

constexpr double radians(double degrees) {
    return degrees * std::numbers::pi / 180.0;
}

constexpr double degrees(double rad) {
    return rad * 180.0 / std::numbers::pi;
}

}  // namespace lgsim::units
