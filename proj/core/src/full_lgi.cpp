#include "lgsim/full_lgi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgsim {

std::string_view to_string(FullEnsemble e) {
    switch (e) {
        case FullEnsemble::g: return "G";
        case FullEnsemble::no_t1: return "no_t1";
        case FullEnsemble::no_t2: return "no_t2";
        case FullEnsemble::no_t3: return "no_t3";
    }
    return "?";
}

namespace {

void check_noise(const IntervalNoise& n, const char* slot) {
    if (std::isnan(n.wait) || n.wait < 0.0 || !std::isfinite(n.wait)) {
        throw std::invalid_argument(std::string("full protocol: ") + slot +
                                    " wait must be finite and >= 0");
    }
    if (std::isnan(n.coherence_time) || n.coherence_time <= 0.0) {
        throw std::invalid_argument(std::string("full protocol: ") + slot +
                                    " T2 must be positive or infinite");
    }
}

}  // namespace

void FullProtocolParams::validate() const {
    if (!std::isfinite(theta_a) || !std::isfinite(theta_b) || !std::isfinite(theta_c)) {
        throw std::invalid_argument("full protocol: rotation angles must be finite");
    }
    check_noise(t1_noise, "t1");
    check_noise(t2_noise, "t2");
}

bool FullProtocolParams::same_physics(const FullProtocolParams& other) const {
    FullProtocolParams a = *this;
    FullProtocolParams b = other;
    a.ensemble = b.ensemble = FullEnsemble::g;
    return a == b;
}

double FullCorrelators::corr12() const {
    if (!c12) {
        throw std::logic_error("corr12 unavailable: ensemble " +
                               std::string(to_string(params.ensemble)) +
                               " does not measure both t1 and t2");
    }
    return *c12;
}

double FullCorrelators::corr13() const {
    if (!c13) {
        throw std::logic_error("corr13 unavailable: ensemble " +
                               std::string(to_string(params.ensemble)) +
                               " does not measure both t1 and t3");
    }
    return *c13;
}

double FullCorrelators::corr23() const {
    if (!c23) {
        throw std::logic_error("corr23 unavailable: ensemble " +
                               std::string(to_string(params.ensemble)) +
                               " does not measure both t2 and t3");
    }
    return *c23;
}

FullCorrelators run_full(const FullProtocolParams& params) {
    params.validate();

    const bool measure_t1 = params.ensemble != FullEnsemble::no_t1;
    const bool measure_t2 = params.ensemble != FullEnsemble::no_t2;
    const bool measure_t3 = params.ensemble != FullEnsemble::no_t3;

    struct Branch {
        double prob;
        BlochState state;
        int q1;
        int q2;
    };

    std::vector<Branch> branches;
    branches.push_back({1.0, rotate(ground_state(), params.theta_a), 0, 0});

    auto split_at = [](std::vector<Branch>& in, auto assign) {
        std::vector<Branch> out;
        out.reserve(in.size() * 2);
        for (const Branch& br : in) {
            const ProjectiveBranches m = measure_projective(br.state);
            for (const MeasurementOutcome* o : {&m.plus, &m.minus}) {
                if (o->probability == 0.0) continue;
                Branch next = br;
                next.prob *= o->probability;
                next.state = o->post_state;
                assign(next, o->value);
                out.push_back(next);
            }
        }
        in = std::move(out);
    };

    if (measure_t1) {
        split_at(branches, [](Branch& b, int v) { b.q1 = v; });
    } else {
        for (Branch& b : branches) {
            b.state = dephase(b.state, params.t1_noise.wait,
                              params.t1_noise.coherence_time);
        }
    }
    for (Branch& b : branches) b.state = rotate(b.state, params.theta_b);

    if (measure_t2) {
        split_at(branches, [](Branch& b, int v) { b.q2 = v; });
    } else {
        for (Branch& b : branches) {
            b.state = dephase(b.state, params.t2_noise.wait,
                              params.t2_noise.coherence_time);
        }
    }
    for (Branch& b : branches) b.state = rotate(b.state, params.theta_c);

    FullCorrelators out;
    out.params = params;
    double c12 = 0.0, c13 = 0.0, c23 = 0.0;
    for (const Branch& b : branches) {
        const double z3 = q_expectation(b.state);
        if (measure_t1 && measure_t2) c12 += b.prob * b.q1 * b.q2;
        if (measure_t1 && measure_t3) c13 += b.prob * b.q1 * z3;
        if (measure_t2 && measure_t3) c23 += b.prob * b.q2 * z3;
    }
    if (measure_t1 && measure_t2) out.c12 = c12;
    if (measure_t1 && measure_t3) out.c13 = c13;
    if (measure_t2 && measure_t3) out.c23 = c23;
    return out;
}

ControlDisturbances control_disturbances(const FullProtocolParams& shared) {
    auto run_as = [&shared](FullEnsemble e) {
        FullProtocolParams p = shared;
        p.ensemble = e;
        return run_full(p);
    };
    return control_disturbances(run_as(FullEnsemble::g), run_as(FullEnsemble::no_t1),
                                run_as(FullEnsemble::no_t2), run_as(FullEnsemble::no_t3));
}

ControlDisturbances control_disturbances(const FullCorrelators& g,
                                         const FullCorrelators& no_t1,
                                         const FullCorrelators& no_t2,
                                         const FullCorrelators& no_t3) {
    if (g.params.ensemble != FullEnsemble::g ||
        no_t1.params.ensemble != FullEnsemble::no_t1 ||
        no_t2.params.ensemble != FullEnsemble::no_t2 ||
        no_t3.params.ensemble != FullEnsemble::no_t3) {
        throw std::invalid_argument(
            "control_disturbances: expected ensembles (G, no_t1, no_t2, no_t3)");
    }
    for (const FullCorrelators* c : {&no_t1, &no_t2, &no_t3}) {
        if (!g.params.same_physics(c->params)) {
            throw std::invalid_argument(
                "control_disturbances: ensembles differ in physical settings");
        }
    }
    return {g.corr23() - no_t1.corr23(), g.corr13() - no_t2.corr13(),
            g.corr12() - no_t3.corr12()};
}

CorrectedLgi corrected_lgi(double corr12_no_t3, double corr13_no_t2,
                           double corr23_no_t1, const ControlDisturbances& dc) {
    CorrectedLgi out;
    out.lhs = corr12_no_t3 + corr13_no_t2 + corr23_no_t1;
    out.bound = -1.0 - dc.sum();
    out.satisfied = out.lhs >= out.bound;
    return out;
}

FullLGReport full_report(const FullProtocolParams& shared) {
    auto run_as = [&shared](FullEnsemble e) {
        FullProtocolParams p = shared;
        p.ensemble = e;
        return run_full(p);
    };
    FullLGReport report;
    report.g = run_as(FullEnsemble::g);
    report.no_t1 = run_as(FullEnsemble::no_t1);
    report.no_t2 = run_as(FullEnsemble::no_t2);
    report.no_t3 = run_as(FullEnsemble::no_t3);
    report.dc = control_disturbances(report.g, report.no_t1, report.no_t2,
                                     report.no_t3);
    report.lgi = corrected_lgi(report.no_t3.corr12(), report.no_t2.corr13(),
                               report.no_t1.corr23(), report.dc);
    return report;
}

}  // namespace lgsim
