#pragma once

// Three-time Leggett-Garg test with four ensembles: G measures Q at t1, t2
// and t3; no_t1 / no_t2 / no_t3 each omit exactly one measurement. Each time
// slot whose measurement is omitted becomes a dephasing wait with its own
// (t, T2); rotations theta_a, theta_b, theta_c act before t1, between t1 and
// t2, and between t2 and t3.
//
// Control disturbances compare the same correlator across ensembles that
// differ in one measurement:
//
//   dc1 = <Q2Q3>_G - <Q2Q3>_no_t1
//   dc2 = <Q1Q3>_G - <Q1Q3>_no_t2
//   dc3 = <Q1Q2>_G - <Q1Q2>_no_t3
//
// and the corrected three-time inequality reads
//
//   <Q1Q2>_no_t3 + <Q1Q3>_no_t2 + <Q2Q3>_no_t1 >= -1 - dc1 - dc2 - dc3.

#include <optional>

#include "lgsim/protocol.hpp"

namespace lgsim {

enum class FullEnsemble { g, no_t1, no_t2, no_t3 };

std::string_view to_string(FullEnsemble e);

/// Dephasing applied at a time slot when its measurement is omitted.
struct IntervalNoise {
    double wait = 0.0;
    double coherence_time = t2_infinite;

    friend bool operator==(const IntervalNoise&, const IntervalNoise&) = default;
};

struct FullProtocolParams {
    double theta_a = 0.0;     ///< rotation before t1, radians
    double theta_b = 0.0;     ///< rotation between t1 and t2
    double theta_c = 0.0;     ///< rotation between t2 and t3
    IntervalNoise t1_noise{};                 ///< used by ensemble no_t1
    IntervalNoise t2_noise{18e-9, 10e-9};     ///< used by ensemble no_t2
    FullEnsemble ensemble = FullEnsemble::g;

    void validate() const;

    /// Equality of the physical settings, ignoring the ensemble tag.
    bool same_physics(const FullProtocolParams& other) const;

    friend bool operator==(const FullProtocolParams&, const FullProtocolParams&) = default;
};

/// Pairwise correlators among the measured times of one ensemble. Accessors
/// throw std::logic_error when the correlator involves an unmeasured time.
struct FullCorrelators {
    FullProtocolParams params{};
    std::optional<double> c12;
    std::optional<double> c13;
    std::optional<double> c23;

    double corr12() const;
    double corr13() const;
    double corr23() const;
};

/// Exact statistics by branching over the projective outcomes of every
/// measured slot (at most four branches; the t3 readout enters through its
/// expectation value).
FullCorrelators run_full(const FullProtocolParams& params);

struct ControlDisturbances {
    double dc1 = 0.0;
    double dc2 = 0.0;
    double dc3 = 0.0;

    double sum() const { return dc1 + dc2 + dc3; }
};

/// Runs all four ensembles with the same physical settings.
ControlDisturbances control_disturbances(const FullProtocolParams& shared);

/// Same computation from pre-computed per-ensemble correlators; rejects
/// inputs whose physical settings disagree or whose ensemble tags are not
/// (g, no_t1, no_t2, no_t3).
ControlDisturbances control_disturbances(const FullCorrelators& g,
                                         const FullCorrelators& no_t1,
                                         const FullCorrelators& no_t2,
                                         const FullCorrelators& no_t3);

struct CorrectedLgi {
    double lhs = 0.0;
    double bound = -1.0;
    bool satisfied = true;
};

/// Evaluates the corrected inequality from the three single-omission
/// correlators and the control disturbances.
CorrectedLgi corrected_lgi(double corr12_no_t3, double corr13_no_t2,
                           double corr23_no_t1, const ControlDisturbances& dc);

struct FullLGReport {
    FullCorrelators g;
    FullCorrelators no_t1;
    FullCorrelators no_t2;
    FullCorrelators no_t3;
    ControlDisturbances dc;
    CorrectedLgi lgi;
};

/// Complete four-ensemble run: correlators, control disturbances, and the
/// corrected inequality.
FullLGReport full_report(const FullProtocolParams& shared);

}  // namespace lgsim
