#include "lgsim/macroscopicity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lgsim {

namespace {

void check_positive(double v, const char* name) {
    if (std::isnan(v) || !(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("macroscopicity: ") + name +
                                    " must be finite and > 0");
    }
}

}  // namespace

void MacroParams::validate() const {
    check_positive(persistent_current, "persistent current");
    check_positive(loop_area, "loop area");
    check_positive(circumference, "circumference");
    check_positive(fermi_velocity, "Fermi velocity");
    check_positive(overlap, "overlap");
    if (overlap > 1.0) {
        throw std::invalid_argument("macroscopicity: overlap must be <= 1");
    }
}

MacroParams MacroParams::flux_qubit_defaults() {
    MacroParams p;
    p.persistent_current = 170e-9;
    p.loop_area = 7e-12;
    p.circumference = 4.0 * std::sqrt(p.loop_area);
    p.fermi_velocity = 2.03e6;
    p.overlap = 1.0;
    return p;
}

double extensive_difference(const MacroParams& p) {
    p.validate();
    return p.overlap *
           (2.0 * p.persistent_current * p.loop_area / constants::bohr_magneton);
}

double disconnectivity(const MacroParams& p) {
    p.validate();
    return 6.0 * p.circumference * p.persistent_current /
           (4.0 * constants::elementary_charge * p.fermi_velocity);
}

MacroReport macro_report(const MacroParams& p) {
    return {extensive_difference(p), disconnectivity(p)};
}

}  // namespace lgsim
