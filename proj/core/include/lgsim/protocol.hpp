#pragma once

// The simplified two-ensemble Leggett-Garg protocol on a dephasing qubit.
//
// One run is the channel chain
//
//   ground -> rotate(theta1) -> [measurement pulse | dephase(t, T2)]
//          -> rotate(theta2) -> Q readout,
//
// giving the closed forms
//
//   <Q3>_pulse    = -cos(theta1) cos(theta2)
//   <Q3>_no_pulse = -cos(theta1) cos(theta2) + exp(-t/T2) sin(theta1) sin(theta2).
//
// Q1 is a deterministic preparation label (no readout happens at t1).
// The disturbance is d = <Q3>_no_pulse - <Q3>_with_pulse; this sign is the
// one under which each fixed (q1, q2) assignment turns one inequality of the
// LG1'..LG4' family into d >= 0 and a partner into d <= 0 (see
// verify_logic_table), so the pair jointly forces d = 0.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "lgsim/bloch.hpp"

namespace lgsim {

inline constexpr double t2_infinite = std::numeric_limits<double>::infinity();

struct ProtocolParams {
    double theta1 = 0.0;              ///< first rotation angle, radians
    double theta2 = 0.0;              ///< second rotation angle, radians
    double wait = 18e-9;              ///< dephasing period between rotations, seconds
    double coherence_time = 10e-9;    ///< T2; may be t2_infinite
    int q1_value = -1;                ///< deterministic preparation label, +1 or -1

    /// Throws std::invalid_argument when any field is out of range.
    void validate() const;

    friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

enum class Ensemble {
    with_pulse,  ///< measurement pulse applied at t2 (ensemble G)
    no_pulse,    ///< plain dephasing between the rotations (ensemble 2-bar)
};

std::string_view to_string(Ensemble e);

/// Expectations and correlators of one ensemble. For the quantum protocol the
/// Q2-dependent fields are only populated when the pulse ensemble is run with
/// selective readout; the classical telegraph oracle fills all of them.
/// `shots == nullopt` marks exact (infinite-shot) statistics.
struct EnsembleStats {
    Ensemble ensemble = Ensemble::with_pulse;
    double q3 = 0.0;                       ///< <Q3>
    std::optional<double> q2;              ///< <Q2>
    std::optional<double> corr_q1q2;       ///< <Q1 Q2>
    std::optional<double> corr_q2q3;       ///< <Q2 Q3>
    double corr_q1q3 = 0.0;                ///< <Q1 Q3>
    std::optional<std::uint64_t> shots;
    std::optional<ProtocolParams> params;  ///< generating parameters, when known
};

/// Exact statistics of one protocol run. With `selective` the pulse is
/// resolved into its projective branches so that <Q2> and <Q2 Q3> are
/// available; requesting selective readout without the pulse is an error
/// (there is no t2 outcome in the no-pulse ensemble).
EnsembleStats run_ensemble(const ProtocolParams& params, bool with_pulse,
                           bool selective = false);

/// Closed-form <Q3> for the same chain. Accepts the same (t, T2) domain as
/// dephase().
double closed_form_q3(double theta1, double theta2, double t, double t2,
                      bool with_pulse);

/// Disturbance d = <Q3>_no_pulse - <Q3>_with_pulse. Rejects stats whose
/// recorded protocol parameters differ.
double compute_d(const EnsembleStats& with_pulse_stats,
                 const EnsembleStats& no_pulse_stats);

enum class LgInequality { lg1, lg2, lg3, lg4 };

std::string_view to_string(LgInequality q);

/// A value below lg_bound - lg_violation_slack counts as a violation.
inline constexpr double lg_bound = -1.0;
inline constexpr double lg_violation_slack = 1e-12;

/// Left-hand sides of the four inequalities for one correlator triple.
struct LgValues {
    std::array<double, 4> value{};  ///< indexed by LgInequality

    double operator[](LgInequality q) const { return value[static_cast<int>(q)]; }
    std::vector<LgInequality> violated() const;
    double min() const;
};

/// lg1 = c12 + c13 + c23, lg2 = c12 - c13 - c23,
/// lg3 = -c12 + c13 - c23, lg4 = -c12 - c13 + c23.
/// Each input must lie in [-1, 1]; the four values sum to zero identically.
LgValues evaluate_lg(double corr_q1q2, double corr_q1q3, double corr_q2q3);

struct LGReport {
    LgValues lg;
    double d = 0.0;
    int q1 = +1;                           ///< fixed assignment used
    int q2 = -1;
    std::vector<LgInequality> violated;
    double epsilon_adroit = 0.0;
    double q3_with_pulse = 0.0;
    double q3_no_pulse = 0.0;
};

/// Runs both ensembles and evaluates the inequality family under the fixed
/// assignment (q1, q2): c12 = q1*q2, c13 = q1*<Q3>_no_pulse,
/// c23 = q2*<Q3>_with_pulse.
LGReport lg_report(const ProtocolParams& params, int q1, int q2);

/// Smallest change a pulse insertion can be claimed to make: the total
/// variation distance between the final Q3 outcome distributions with and
/// without the pulse. Equals |d| / 2.
double adroitness(const ProtocolParams& params);

enum class DConstraint { non_negative, non_positive };

std::string_view to_string(DConstraint c);

struct LogicTableRow {
    int q1 = 0;
    int q2 = 0;
    LgInequality inequality{};
    DConstraint constraint{};

    friend bool operator==(const LogicTableRow&, const LogicTableRow&) = default;
};

/// Symbolically reduces each inequality under every fixed (q1, q2)
/// assignment. An inequality is applicable when its constant term q1*q2
/// contribution equals -1 and the two <Q3> coefficients are opposite; the
/// residual then reads k*d >= 0 with k = +/-1. Exactly two inequalities apply
/// per assignment, yielding eight rows; the two rows of an assignment always
/// carry opposite constraints, so together they imply d = 0.
std::array<LogicTableRow, 8> verify_logic_table();

struct ViolationChoice {
    int q1 = +1;
    int q2 = -1;
    LgInequality inequality = LgInequality::lg1;
};

/// Assignment and inequality that witness a nonzero d: for d > 0 the (1, -1)
/// assignment drives lg2 to -1 - d; for d < 0 it drives lg1 to -1 + d.
ViolationChoice select_violation(double d);

}  // namespace lgsim
