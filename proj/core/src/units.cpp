#include "lgsim/units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace lgsim::units {

namespace {

using Suffix = std::pair<std::string_view, double>;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_suffixed(std::string_view text, std::initializer_list<Suffix> table,
                      const char* what) {
    const std::string_view t = trim(text);
    if (t.empty()) {
        throw std::invalid_argument(std::string("empty ") + what);
    }
    double value = 0.0;
    const auto [rest, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || !std::isfinite(value)) {
        throw std::invalid_argument("cannot parse " + std::string(what) + ": '" +
                                    std::string(t) + "'");
    }
    const std::string_view suffix = trim({rest, static_cast<std::size_t>(
                                                    t.data() + t.size() - rest)});
    if (suffix.empty()) {
        return value;  // bare number: base SI unit
    }
    for (const Suffix& s : table) {
        if (suffix == s.first) {
            return value * s.second;
        }
    }
    throw std::invalid_argument("unknown " + std::string(what) + " unit '" +
                                std::string(suffix) + "' in '" + std::string(t) + "'");
}

}  // namespace

double parse_duration(std::string_view text) {
    return parse_suffixed(
        text,
        {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}},
        "duration");
}

double parse_duration_or_infinite(std::string_view text) {
    const std::string_view t = trim(text);
    if (t == "inf" || t == "infinity" || t == "Inf" || t == "INF") {
        return std::numeric_limits<double>::infinity();
    }
    return parse_duration(t);
}

double parse_current(std::string_view text) {
    return parse_suffixed(
        text,
        {{"A", 1.0}, {"mA", 1e-3}, {"uA", 1e-6}, {"nA", 1e-9}, {"pA", 1e-12}},
        "current");
}

double parse_length(std::string_view text) {
    return parse_suffixed(
        text, {{"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}}, "length");
}

double parse_area(std::string_view text) {
    return parse_suffixed(text,
                          {{"m2", 1.0},
                           {"m^2", 1.0},
                           {"mm2", 1e-6},
                           {"mm^2", 1e-6},
                           {"um2", 1e-12},
                           {"um^2", 1e-12},
                           {"nm2", 1e-18},
                           {"nm^2", 1e-18}},
                          "area");
}

double parse_number(std::string_view text) {
    return parse_suffixed(text, {}, "number");
}

}  // namespace lgsim::units
