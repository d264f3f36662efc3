#include "lgsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lgsim {

namespace {

void check_correlator(double c, const char* name) {
    if (std::isnan(c) || std::abs(c) > 1.0 + lg_violation_slack) {
        throw std::invalid_argument(std::string("evaluate_lg: ") + name +
                                    " must lie in [-1, 1]");
    }
}

void check_assignment(int q, const char* name) {
    if (q != +1 && q != -1) {
        throw std::invalid_argument(std::string(name) + " must be +1 or -1");
    }
}

}  // namespace

void ProtocolParams::validate() const {
    if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
        throw std::invalid_argument("protocol: rotation angles must be finite");
    }
    if (std::isnan(wait) || wait < 0.0 || !std::isfinite(wait)) {
        throw std::invalid_argument("protocol: wait time must be finite and >= 0");
    }
    if (std::isnan(coherence_time) || coherence_time <= 0.0) {
        throw std::invalid_argument("protocol: T2 must be positive or infinite");
    }
    check_assignment(q1_value, "protocol: q1_value");
}

std::string_view to_string(Ensemble e) {
    return e == Ensemble::with_pulse ? "G" : "no_pulse";
}

EnsembleStats run_ensemble(const ProtocolParams& params, bool with_pulse,
                           bool selective) {
    params.validate();
    if (selective && !with_pulse) {
        throw std::invalid_argument(
            "run_ensemble: selective readout requires the pulse; "
            "the no-pulse ensemble has no t2 outcome");
    }

    EnsembleStats stats;
    stats.ensemble = with_pulse ? Ensemble::with_pulse : Ensemble::no_pulse;
    stats.params = params;

    const BlochState prepared = rotate(ground_state(), params.theta1);

    if (!with_pulse) {
        const BlochState relaxed =
            dephase(prepared, params.wait, params.coherence_time);
        stats.q3 = q_expectation(rotate(relaxed, params.theta2));
    } else if (!selective) {
        stats.q3 = q_expectation(rotate(measurement_pulse(prepared), params.theta2));
    } else {
        const ProjectiveBranches branches = measure_projective(prepared);
        double q3 = 0.0, q2 = 0.0, c23 = 0.0;
        for (const MeasurementOutcome* b : {&branches.plus, &branches.minus}) {
            const double z3 = q_expectation(rotate(b->post_state, params.theta2));
            q3 += b->probability * z3;
            q2 += b->probability * b->value;
            c23 += b->probability * b->value * z3;
        }
        stats.q3 = q3;
        stats.q2 = q2;
        stats.corr_q2q3 = c23;
        stats.corr_q1q2 = params.q1_value * q2;
    }

    stats.corr_q1q3 = params.q1_value * stats.q3;
    return stats;
}

double closed_form_q3(double theta1, double theta2, double t, double t2,
                      bool with_pulse) {
    ProtocolParams p{theta1, theta2, t, t2, -1};
    p.validate();
    const double base = -std::cos(theta1) * std::cos(theta2);
    if (with_pulse) {
        return base;
    }
    const double gamma = std::isinf(t2) ? 1.0 : std::exp(-t / t2);
    return base + gamma * std::sin(theta1) * std::sin(theta2);
}

double compute_d(const EnsembleStats& with_pulse_stats,
                 const EnsembleStats& no_pulse_stats) {
    if (with_pulse_stats.params && no_pulse_stats.params &&
        !(*with_pulse_stats.params == *no_pulse_stats.params)) {
        throw std::invalid_argument(
            "compute_d: ensembles were produced with different protocol parameters");
    }
    return no_pulse_stats.q3 - with_pulse_stats.q3;
}

std::string_view to_string(LgInequality q) {
    switch (q) {
        case LgInequality::lg1: return "LG1'";
        case LgInequality::lg2: return "LG2'";
        case LgInequality::lg3: return "LG3'";
        case LgInequality::lg4: return "LG4'";
    }
    return "?";
}

std::vector<LgInequality> LgValues::violated() const {
    std::vector<LgInequality> out;
    for (int i = 0; i < 4; ++i) {
        if (value[i] < lg_bound - lg_violation_slack) {
            out.push_back(static_cast<LgInequality>(i));
        }
    }
    return out;
}

double LgValues::min() const {
    double m = value[0];
    for (double v : value) m = std::min(m, v);
    return m;
}

LgValues evaluate_lg(double corr_q1q2, double corr_q1q3, double corr_q2q3) {
    check_correlator(corr_q1q2, "corr_q1q2");
    check_correlator(corr_q1q3, "corr_q1q3");
    check_correlator(corr_q2q3, "corr_q2q3");
    return {{
        corr_q1q2 + corr_q1q3 + corr_q2q3,
        corr_q1q2 - corr_q1q3 - corr_q2q3,
        -corr_q1q2 + corr_q1q3 - corr_q2q3,
        -corr_q1q2 - corr_q1q3 + corr_q2q3,
    }};
}

LGReport lg_report(const ProtocolParams& params, int q1, int q2) {
    check_assignment(q1, "lg_report: q1");
    check_assignment(q2, "lg_report: q2");

    const EnsembleStats pulsed = run_ensemble(params, true);
    const EnsembleStats plain = run_ensemble(params, false);

    LGReport report;
    report.q1 = q1;
    report.q2 = q2;
    report.q3_with_pulse = pulsed.q3;
    report.q3_no_pulse = plain.q3;
    report.d = compute_d(pulsed, plain);
    report.lg = evaluate_lg(static_cast<double>(q1 * q2), q1 * plain.q3,
                            q2 * pulsed.q3);
    report.violated = report.lg.violated();
    report.epsilon_adroit = adroitness(params);
    return report;
}

double adroitness(const ProtocolParams& params) {
    const double q3_pulsed = run_ensemble(params, true).q3;
    const double q3_plain = run_ensemble(params, false).q3;
    const double p_plus_pulsed = 0.5 * (1.0 + q3_pulsed);
    const double p_plus_plain = 0.5 * (1.0 + q3_plain);
    // total variation over the two-outcome distributions
    return 0.5 * (std::abs(p_plus_plain - p_plus_pulsed) +
                  std::abs((1.0 - p_plus_plain) - (1.0 - p_plus_pulsed)));
}

std::string_view to_string(DConstraint c) {
    return c == DConstraint::non_negative ? "d>=0" : "d<=0";
}

std::array<LogicTableRow, 8> verify_logic_table() {
    // sign pattern (s12, s13, s23) of each inequality's correlators
    constexpr int signs[4][3] = {
        {+1, +1, +1},  // lg1
        {+1, -1, -1},  // lg2
        {-1, +1, -1},  // lg3
        {-1, -1, +1},  // lg4
    };
    constexpr std::pair<int, int> assignments[4] = {
        {+1, -1}, {+1, +1}, {-1, +1}, {-1, -1}};
    constexpr LgInequality scan_order[4] = {
        LgInequality::lg2, LgInequality::lg1, LgInequality::lg3, LgInequality::lg4};

    std::array<LogicTableRow, 8> table{};
    int row = 0;
    for (const auto& [q1, q2] : assignments) {
        for (const LgInequality q : scan_order) {
            const int* s = signs[static_cast<int>(q)];
            // substituted LHS: s12*q1*q2 + (s13*q1)*<Q3>_no_pulse + (s23*q2)*<Q3>_pulse
            if (s[0] * q1 * q2 != -1) continue;      // constant term must cancel the bound
            if (s[1] * q1 != -s[2] * q2) continue;   // residual must be a multiple of d
            const int k = s[1] * q1;                 // LHS - (-1) = k * d
            table[row++] = {q1, q2, q,
                            k > 0 ? DConstraint::non_negative
                                  : DConstraint::non_positive};
        }
    }
    return table;
}

ViolationChoice select_violation(double d) {
    if (std::isnan(d)) {
        throw std::invalid_argument("select_violation: d must be a number");
    }
    // At (q1, q2) = (1, -1): lg1 = -1 + d and lg2 = -1 - d.
    return {+1, -1, d >= 0.0 ? LgInequality::lg2 : LgInequality::lg1};
}

}  // namespace lgsim
