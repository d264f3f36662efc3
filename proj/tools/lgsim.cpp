// lgsim -- command-line front end for the Leggett-Garg protocol simulator.
//
// Subcommands: sweep, ndc, lg, table, sample, full, mr, macro. Every report
// embeds the fully resolved inputs, so a saved JSON report can be fed back
// through --config and reproduces itself byte for byte (same seed). Angles
// are taken in degrees on the command line; times, currents and lengths take
// SI suffixes (18ns, 170nA, 7um2). Exit codes: 0 success, 2 usage/validation
// error, 3 from `lg` when an inequality is violated.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgsim/full_lgi.hpp"
#include "lgsim/macroscopicity.hpp"
#include "lgsim/protocol.hpp"
#include "lgsim/sampling.hpp"
#include "lgsim/telegraph.hpp"
#include "lgsim/units.hpp"
#include "lgsim/version.hpp"

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// formatting helpers

std::string format_double(double v) {
    char buf[40];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

std::int64_t parse_int64(const std::string& text) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument("cannot parse integer '" + text + "'");
    }
    return v;
}

std::uint64_t parse_uint64(const std::string& text) {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument("cannot parse unsigned integer '" + text + "'");
    }
    return v;
}

// ---------------------------------------------------------------------------
// angle ranges: "90" or "start:stop:step" (degrees)

struct AngleRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    bool single = true;

    std::vector<double> values() const {
        if (single) return {start};
        std::vector<double> out;
        const auto count =
            static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(start + double(i) * step);
        return out;
    }

    std::string canonical() const {
        if (single) return format_double(start);
        return format_double(start) + ":" + format_double(stop) + ":" +
               format_double(step);
    }
};

AngleRange parse_angle_range(const std::string& text) {
    AngleRange r;
    const auto first = text.find(':');
    if (first == std::string::npos) {
        r.start = r.stop = lgsim::units::parse_number(text);
        r.single = true;
        return r;
    }
    const auto second = text.find(':', first + 1);
    r.single = false;
    r.start = lgsim::units::parse_number(text.substr(0, first));
    if (second == std::string::npos) {
        r.stop = lgsim::units::parse_number(text.substr(first + 1));
        r.step = 1.0;
    } else {
        r.stop = lgsim::units::parse_number(text.substr(first + 1, second - first - 1));
        r.step = lgsim::units::parse_number(text.substr(second + 1));
    }
    if (!(r.step > 0.0)) throw std::invalid_argument("angle range step must be > 0");
    if (r.stop < r.start) {
        throw std::invalid_argument("empty angle range '" + text +
                                    "' (stop is below start)");
    }
    return r;
}

// ---------------------------------------------------------------------------
// config files: either key=value lines or a previously emitted JSON report

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto start = text.find_first_not_of(" \t\r\n");
    json cfg = json::object();
    if (start != std::string::npos && text[start] == '{') {
        const json report = json::parse(text);
        if (report.contains("inputs")) {
            cfg = report.at("inputs");
            if (report.contains("subcommand")) {
                cfg["__subcommand"] = report.at("subcommand");
            }
            if (report.contains("provenance") && report["provenance"].contains("seed")) {
                if (!cfg.contains("seed")) cfg["seed"] = report["provenance"]["seed"];
            }
        } else {
            cfg = report;  // already a flat object
        }
        return cfg;
    }

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t") != std::string::npos) {
                throw std::invalid_argument("malformed config line: '" + line + "'");
            }
            continue;
        }
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config line without key");
        cfg[key] = value;
    }
    return cfg;
}

// Resolves each input with precedence: explicit flag > config value > default,
// and records the resolved value under its canonical key.
class Resolver {
  public:
    Resolver(const CLI::App& cmd, std::string config_path, const char* subcommand)
        : cmd_(cmd) {
        if (!config_path.empty()) {
            cfg_ = load_config(config_path);
            if (cfg_.contains("__subcommand") &&
                cfg_["__subcommand"].get<std::string>() != subcommand) {
                throw std::invalid_argument(
                    "config was produced by subcommand '" +
                    cfg_["__subcommand"].get<std::string>() + "', not '" +
                    std::string(subcommand) + "'");
            }
        }
        inputs_ = json::object();
    }

    using Parser = double (*)(std::string_view);

    double number(const char* flag, const char* key, const std::string& cli_value,
                  double fallback, Parser parse) {
        double v = fallback;
        if (cmd_.count(flag) > 0) {
            v = parse(cli_value);
        } else if (const json* c = config_value(key)) {
            v = c->is_string() ? parse(c->get<std::string>()) : c->get<double>();
        }
        inputs_[key] = std::isinf(v) ? json("inf") : json(v);
        return v;
    }

    std::int64_t integer(const char* flag, const char* key,
                         const std::string& cli_value, std::int64_t fallback) {
        std::int64_t v = fallback;
        if (cmd_.count(flag) > 0) {
            v = parse_int64(cli_value);
        } else if (const json* c = config_value(key)) {
            v = c->is_string() ? parse_int64(c->get<std::string>())
                               : c->get<std::int64_t>();
        }
        inputs_[key] = v;
        return v;
    }

    std::uint64_t seed(const char* flag, const char* key,
                       const std::string& cli_value) {
        std::uint64_t v = 0;
        if (const char* env = std::getenv("LG_SEED")) v = parse_uint64(env);
        if (cmd_.count(flag) > 0) {
            v = parse_uint64(cli_value);
        } else if (const json* c = config_value(key)) {
            v = c->is_string() ? parse_uint64(c->get<std::string>())
                               : c->get<std::uint64_t>();
        }
        inputs_[key] = v;
        return v;
    }

    bool flag(const char* key, const CLI::Option* opt, bool cli_value, bool fallback) {
        bool v = fallback;
        if (opt->count() > 0) {
            v = cli_value;
        } else if (const json* c = config_value(key)) {
            v = c->is_string() ? c->get<std::string>() == "true" : c->get<bool>();
        }
        inputs_[key] = v;
        return v;
    }

    AngleRange angle_range(const char* flag, const char* key,
                           const std::string& cli_value, const std::string& fallback) {
        std::string text = fallback;
        if (cmd_.count(flag) > 0) {
            text = cli_value;
        } else if (const json* c = config_value(key)) {
            text = c->is_string() ? c->get<std::string>()
                                  : format_double(c->get<double>());
        }
        const AngleRange r = parse_angle_range(text);
        inputs_[key] = r.single ? json(r.start) : json(r.canonical());
        return r;
    }

    std::string format(const char* flag, const std::string& cli_value,
                       const std::string& fallback) {
        std::string v = fallback;
        if (cmd_.count(flag) > 0) {
            v = cli_value;
        } else if (const json* c = config_value("format")) {
            v = c->get<std::string>();
        }
        if (v != "csv" && v != "json") {
            throw std::invalid_argument("format must be 'csv' or 'json'");
        }
        inputs_["format"] = v;
        return v;
    }

    const json& inputs() const { return inputs_; }

  private:
    const json* config_value(const char* key) const {
        if (cfg_.is_object() && cfg_.contains(key)) return &cfg_.at(key);
        return nullptr;
    }

    const CLI::App& cmd_;
    json cfg_ = json::object();
    json inputs_;
};

// ---------------------------------------------------------------------------
// output plumbing

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text;
}

json make_report(const char* subcommand, const json& inputs, json outputs,
                 std::optional<std::uint64_t> seed = std::nullopt,
                 json extra_provenance = json::object()) {
    json provenance = std::move(extra_provenance);
    provenance["version"] = std::string(lgsim::version);
    if (seed) provenance["seed"] = *seed;
    return json{{"tool", "lgsim"},
                {"version", std::string(lgsim::version)},
                {"subcommand", subcommand},
                {"inputs", inputs},
                {"outputs", std::move(outputs)},
                {"provenance", std::move(provenance)}};
}

void emit_json_report(const std::string& out_path, const json& report) {
    write_output(out_path, report.dump(2) + "\n");
}

json stats_to_json(const lgsim::EnsembleStats& s) {
    json j{{"ensemble", std::string(to_string(s.ensemble))},
           {"q3", s.q3},
           {"corr_q1q3", s.corr_q1q3},
           {"shots", s.shots ? json(*s.shots) : json("exact")}};
    if (s.q2) j["q2"] = *s.q2;
    if (s.corr_q1q2) j["corr_q1q2"] = *s.corr_q1q2;
    if (s.corr_q2q3) j["corr_q2q3"] = *s.corr_q2q3;
    return j;
}

json record_to_json(const lgsim::ShotRecord& r) {
    return json{{"n_plus", r.n_plus},     {"n_minus", r.n_minus},
                {"shots", r.shots()},     {"estimate", r.estimate},
                {"std_error", r.std_error}, {"seed", r.seed}};
}

json violated_to_json(const std::vector<lgsim::LgInequality>& v) {
    json out = json::array();
    for (const auto q : v) out.push_back(std::string(to_string(q)));
    return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(
        std::min<std::size_t>(hw, n));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k; (k = next.fetch_add(1)) < n;) fn(k);
        });
    }
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// shared option bundles

struct CommonOpts {
    std::string config;
    std::string out;
    std::string format;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config,
                        "key=value file or a previously emitted JSON report");
        cmd->add_option("--out", out, "write output to this file instead of stdout");
        cmd->add_option("--format", format, "output format: csv or json");
    }
};

struct ProtocolOpts {
    std::string theta1 = "90";
    std::string theta2 = "90";
    std::string t = "18ns";
    std::string t2 = "10ns";

    void attach(CLI::App* cmd, bool ranges) {
        const char* angle_help = ranges
            ? "angle in degrees, value or start:stop:step"
            : "angle in degrees";
        cmd->add_option("--theta1", theta1, angle_help);
        cmd->add_option("--theta2", theta2, angle_help);
        cmd->add_option("--t", t, "dephasing period (SI suffixes, e.g. 18ns)");
        cmd->add_option("--T2", t2, "coherence time (SI suffixes or 'inf')");
    }

    lgsim::ProtocolParams resolve_single(Resolver& r) const {
        lgsim::ProtocolParams p;
        const AngleRange a1 = r.angle_range("--theta1", "theta1", theta1, "90");
        const AngleRange a2 = r.angle_range("--theta2", "theta2", theta2, "90");
        if (!a1.single || !a2.single) {
            throw std::invalid_argument(
                "this subcommand takes single angles, not ranges");
        }
        p.theta1 = lgsim::units::radians(a1.start);
        p.theta2 = lgsim::units::radians(a2.start);
        p.wait = r.number("--t", "t", t, 18e-9, lgsim::units::parse_duration);
        p.coherence_time =
            r.number("--T2", "T2", t2, 10e-9, lgsim::units::parse_duration_or_infinite);
        return p;
    }
};

// ---------------------------------------------------------------------------
// subcommands

int run_sweep(const CLI::App& cmd, const CommonOpts& common,
              const ProtocolOpts& proto) {
    Resolver r(cmd, common.config, "sweep");
    const AngleRange range1 = r.angle_range("--theta1", "theta1", proto.theta1, "0:180:1");
    const AngleRange range2 = r.angle_range("--theta2", "theta2", proto.theta2, "0:180:1");
    const double wait = r.number("--t", "t", proto.t, 18e-9,
                                 lgsim::units::parse_duration);
    const double t2 = r.number("--T2", "T2", proto.t2, 10e-9,
                               lgsim::units::parse_duration_or_infinite);
    const std::string format = r.format("--format", common.format, "csv");

    const std::vector<double> grid1 = range1.values();
    const std::vector<double> grid2 = range2.values();
    if (grid1.empty() || grid2.empty()) {
        throw std::invalid_argument("sweep: empty angle grid");
    }

    struct Row {
        double theta1_deg, theta2_deg, q3_pulse, q3_nopulse, q3_nopulse_inf, d;
    };
    std::vector<Row> rows(grid1.size() * grid2.size());
    parallel_for(rows.size(), [&](std::size_t k) {
        const double deg1 = grid1[k / grid2.size()];
        const double deg2 = grid2[k % grid2.size()];
        lgsim::ProtocolParams p;
        p.theta1 = lgsim::units::radians(deg1);
        p.theta2 = lgsim::units::radians(deg2);
        p.wait = wait;
        p.coherence_time = t2;
        const double q3_pulse = lgsim::run_ensemble(p, true).q3;
        const double q3_plain = lgsim::run_ensemble(p, false).q3;
        lgsim::ProtocolParams ideal = p;
        ideal.coherence_time = lgsim::t2_infinite;
        const double q3_ideal = lgsim::run_ensemble(ideal, false).q3;
        rows[k] = {deg1, deg2, q3_pulse, q3_plain, q3_ideal, q3_plain - q3_pulse};
    });

    static constexpr const char* columns[] = {"theta1_deg", "theta2_deg", "q3_pulse",
                                              "q3_nopulse", "q3_nopulse_infT2", "d"};
    if (format == "csv") {
        std::string out;
        out.reserve(rows.size() * 48 + 64);
        for (std::size_t c = 0; c < 6; ++c) {
            out += columns[c];
            out += c + 1 < 6 ? ',' : '\n';
        }
        for (const Row& row : rows) {
            const double vals[] = {row.theta1_deg, row.theta2_deg, row.q3_pulse,
                                   row.q3_nopulse, row.q3_nopulse_inf, row.d};
            for (std::size_t c = 0; c < 6; ++c) {
                out += format_double(vals[c]);
                out += c + 1 < 6 ? ',' : '\n';
            }
        }
        write_output(common.out, out);
        return 0;
    }

    json jrows = json::array();
    for (const Row& row : rows) {
        jrows.push_back({row.theta1_deg, row.theta2_deg, row.q3_pulse, row.q3_nopulse,
                         row.q3_nopulse_inf, row.d});
    }
    json outputs{{"columns", json::array({columns[0], columns[1], columns[2],
                                          columns[3], columns[4], columns[5]})},
                 {"rows", std::move(jrows)}};
    emit_json_report(common.out, make_report("sweep", r.inputs(), std::move(outputs)));
    return 0;
}

int run_lg(const CLI::App& cmd, const CommonOpts& common, const ProtocolOpts& proto,
           const std::string& q1_s, const std::string& q2_s) {
    Resolver r(cmd, common.config, "lg");
    const lgsim::ProtocolParams p = proto.resolve_single(r);
    const auto q1 = static_cast<int>(r.integer("--q1", "q1", q1_s, +1));
    const auto q2 = static_cast<int>(r.integer("--q2", "q2", q2_s, -1));
    const std::string format = r.format("--format", common.format, "json");
    if (format != "json") {
        throw std::invalid_argument("lg: only json output is supported");
    }

    const lgsim::LGReport report = lgsim::lg_report(p, q1, q2);
    json outputs{{"lg1", report.lg[lgsim::LgInequality::lg1]},
                 {"lg2", report.lg[lgsim::LgInequality::lg2]},
                 {"lg3", report.lg[lgsim::LgInequality::lg3]},
                 {"lg4", report.lg[lgsim::LgInequality::lg4]},
                 {"d", report.d},
                 {"q1", report.q1},
                 {"q2", report.q2},
                 {"violated", violated_to_json(report.violated)},
                 {"epsilon_adroit", report.epsilon_adroit},
                 {"q3_with_pulse", report.q3_with_pulse},
                 {"q3_no_pulse", report.q3_no_pulse}};
    emit_json_report(common.out, make_report("lg", r.inputs(), std::move(outputs)));
    return report.violated.empty() ? 0 : 3;
}

int run_table(const CLI::App& cmd, const CommonOpts& common) {
    Resolver r(cmd, common.config, "table");
    const std::string format = r.format("--format", common.format, "json");

    const auto table = lgsim::verify_logic_table();
    if (format == "csv") {
        std::string out = "q1,q2,inequality,implication\n";
        for (const auto& row : table) {
            out += format_double(row.q1) + "," + format_double(row.q2) + "," +
                   std::string(to_string(row.inequality)) + "," +
                   std::string(to_string(row.constraint)) + "\n";
        }
        write_output(common.out, out);
        return 0;
    }

    json rows = json::array();
    for (const auto& row : table) {
        rows.push_back({{"q1", row.q1},
                        {"q2", row.q2},
                        {"inequality", std::string(to_string(row.inequality))},
                        {"implication", std::string(to_string(row.constraint))}});
    }
    emit_json_report(common.out,
                     make_report("table", r.inputs(), json{{"rows", std::move(rows)}}));
    return 0;
}

int run_ndc(const CLI::App& cmd, const CommonOpts& common, const ProtocolOpts& proto,
            const std::string& shots_s, const std::string& seed_s) {
    Resolver r(cmd, common.config, "ndc");
    const lgsim::ProtocolParams p = proto.resolve_single(r);
    const auto shots =
        static_cast<std::uint64_t>(r.integer("--shots", "shots", shots_s, 10000));
    const std::uint64_t seed = r.seed("--seed", "seed", seed_s);
    const std::string format = r.format("--format", common.format, "json");
    if (format != "json") {
        throw std::invalid_argument("ndc: only json output is supported");
    }

    const lgsim::ShotRecord rec_pulse =
        lgsim::sample_protocol(p, true, shots, lgsim::mix_seed(seed, 0));
    const lgsim::ShotRecord rec_plain =
        lgsim::sample_protocol(p, false, shots, lgsim::mix_seed(seed, 1));
    const lgsim::NdcTest test = lgsim::ndc_test(rec_pulse, rec_plain);

    const double d_exact = lgsim::compute_d(lgsim::run_ensemble(p, true),
                                            lgsim::run_ensemble(p, false));
    json outputs{{"record_G", record_to_json(rec_pulse)},
                 {"record_no_pulse", record_to_json(rec_plain)},
                 {"d_hat", test.d_hat},
                 {"se_d", test.se_d},
                 {"z_score", std::isinf(test.z_score) ? json("inf") : json(test.z_score)},
                 {"p_value", test.p_value},
                 {"d_exact", d_exact}};
    emit_json_report(common.out,
                     make_report("ndc", r.inputs(), std::move(outputs), seed));
    return 0;
}

int run_sample(const CLI::App& cmd, const CommonOpts& common,
               const ProtocolOpts& proto, const std::string& shots_s,
               const std::string& seed_s, const CLI::Option* pulse_opt,
               bool pulse_cli) {
    Resolver r(cmd, common.config, "sample");
    const lgsim::ProtocolParams p = proto.resolve_single(r);
    const auto shots =
        static_cast<std::uint64_t>(r.integer("--shots", "shots", shots_s, 10000));
    const std::uint64_t seed = r.seed("--seed", "seed", seed_s);
    const bool with_pulse = r.flag("pulse", pulse_opt, pulse_cli, true);
    const std::string format = r.format("--format", common.format, "json");
    if (format != "json") {
        throw std::invalid_argument("sample: only json output is supported");
    }

    const lgsim::ShotRecord rec = lgsim::sample_protocol(p, with_pulse, shots, seed);
    const double q3_exact = lgsim::run_ensemble(p, with_pulse).q3;
    json outputs{{"record", record_to_json(rec)}, {"q3_exact", q3_exact}};
    emit_json_report(common.out,
                     make_report("sample", r.inputs(), std::move(outputs), seed));
    return 0;
}

int run_full(const CLI::App& cmd, const CommonOpts& common,
             const std::string& theta_a_s, const std::string& theta_b_s,
             const std::string& theta_c_s, const std::string& ta_s,
             const std::string& t2a_s, const std::string& t_s,
             const std::string& t2_s) {
    Resolver r(cmd, common.config, "full");
    lgsim::FullProtocolParams p;
    const AngleRange a = r.angle_range("--theta-a", "theta_a", theta_a_s, "0");
    const AngleRange b = r.angle_range("--theta-b", "theta_b", theta_b_s, "90");
    const AngleRange c = r.angle_range("--theta-c", "theta_c", theta_c_s, "90");
    if (!a.single || !b.single || !c.single) {
        throw std::invalid_argument("full: angles must be single values");
    }
    p.theta_a = lgsim::units::radians(a.start);
    p.theta_b = lgsim::units::radians(b.start);
    p.theta_c = lgsim::units::radians(c.start);
    p.t1_noise.wait = r.number("--ta", "ta", ta_s, 0.0, lgsim::units::parse_duration);
    p.t1_noise.coherence_time = r.number("--T2a", "T2a", t2a_s, lgsim::t2_infinite,
                                         lgsim::units::parse_duration_or_infinite);
    p.t2_noise.wait = r.number("--t", "t", t_s, 18e-9, lgsim::units::parse_duration);
    p.t2_noise.coherence_time = r.number("--T2", "T2", t2_s, 10e-9,
                                         lgsim::units::parse_duration_or_infinite);
    const std::string format = r.format("--format", common.format, "json");
    if (format != "json") {
        throw std::invalid_argument("full: only json output is supported");
    }

    const lgsim::FullLGReport report = lgsim::full_report(p);
    auto correlators_json = [](const lgsim::FullCorrelators& fc) {
        return json{{"c12", fc.c12 ? json(*fc.c12) : json()},
                    {"c13", fc.c13 ? json(*fc.c13) : json()},
                    {"c23", fc.c23 ? json(*fc.c23) : json()}};
    };
    json outputs{{"G", correlators_json(report.g)},
                 {"no_t1", correlators_json(report.no_t1)},
                 {"no_t2", correlators_json(report.no_t2)},
                 {"no_t3", correlators_json(report.no_t3)},
                 {"dc1", report.dc.dc1},
                 {"dc2", report.dc.dc2},
                 {"dc3", report.dc.dc3},
                 {"lgi_lhs", report.lgi.lhs},
                 {"corrected_bound", report.lgi.bound},
                 {"satisfied", report.lgi.satisfied}};
    emit_json_report(common.out, make_report("full", r.inputs(), std::move(outputs)));
    return 0;
}

int run_mr(const CLI::App& cmd, const CommonOpts& common, const std::string& p_init_s,
           const std::string& p_flip12_s, const std::string& p_flip23_s,
           const std::string& invasive_s, const std::string& shots_s,
           const std::string& seed_s) {
    Resolver r(cmd, common.config, "mr");
    lgsim::TelegraphModel model;
    model.p_init = r.number("--p-init", "p_init", p_init_s, 0.5,
                            lgsim::units::parse_number);
    model.p_flip_12 = r.number("--p-flip12", "p_flip12", p_flip12_s, 0.0,
                               lgsim::units::parse_number);
    model.p_flip_23 = r.number("--p-flip23", "p_flip23", p_flip23_s, 0.0,
                               lgsim::units::parse_number);
    model.invasive_flip = r.number("--invasive", "invasive", invasive_s, 0.0,
                                   lgsim::units::parse_number);
    const auto shots = static_cast<std::uint64_t>(r.integer("--shots", "shots",
                                                            shots_s, 0));
    const std::uint64_t seed = r.seed("--seed", "seed", seed_s);
    const std::string format = r.format("--format", common.format, "json");
    if (format != "json") {
        throw std::invalid_argument("mr: only json output is supported");
    }

    const lgsim::EnsembleStats with_meas = lgsim::enumerate_exact(model, true);
    const lgsim::EnsembleStats without = lgsim::enumerate_exact(model, false);
    const double d = lgsim::compute_d(with_meas, without);
    const lgsim::LgValues lg =
        lgsim::evaluate_lg(*with_meas.corr_q1q2, without.corr_q1q3,
                           *with_meas.corr_q2q3);

    json outputs{{"exact",
                  json{{"with_measurement", stats_to_json(with_meas)},
                       {"without_measurement", stats_to_json(without)},
                       {"d", d},
                       {"lg1", lg[lgsim::LgInequality::lg1]},
                       {"lg2", lg[lgsim::LgInequality::lg2]},
                       {"lg3", lg[lgsim::LgInequality::lg3]},
                       {"lg4", lg[lgsim::LgInequality::lg4]},
                       {"violated", violated_to_json(lg.violated())}}}};
    if (shots > 0) {
        const lgsim::EnsembleStats s_with =
            lgsim::sample(model, true, shots, lgsim::mix_seed(seed, 0));
        const lgsim::EnsembleStats s_without =
            lgsim::sample(model, false, shots, lgsim::mix_seed(seed, 1));
        outputs["sampled"] = json{{"with_measurement", stats_to_json(s_with)},
                                  {"without_measurement", stats_to_json(s_without)},
                                  {"d", lgsim::compute_d(s_with, s_without)}};
    }
    emit_json_report(common.out,
                     make_report("mr", r.inputs(), std::move(outputs), seed));
    return 0;
}

int run_macro(const CLI::App& cmd, const CommonOpts& common, const std::string& ip_s,
              const std::string& area_s, const std::string& length_s,
              const std::string& vf_s, const std::string& overlap_s) {
    Resolver r(cmd, common.config, "macro");
    const lgsim::MacroParams defaults = lgsim::MacroParams::flux_qubit_defaults();
    lgsim::MacroParams p;
    p.persistent_current = r.number("--ip", "ip", ip_s, defaults.persistent_current,
                                    lgsim::units::parse_current);
    p.loop_area =
        r.number("--area", "area", area_s, defaults.loop_area, lgsim::units::parse_area);
    // default circumference tracks the resolved area (square loop)
    p.circumference = r.number("--length", "length", length_s,
                               4.0 * std::sqrt(p.loop_area),
                               lgsim::units::parse_length);
    p.fermi_velocity = r.number("--vf", "vf", vf_s, defaults.fermi_velocity,
                                lgsim::units::parse_number);
    p.overlap = r.number("--overlap", "overlap", overlap_s, defaults.overlap,
                         lgsim::units::parse_number);
    const std::string format = r.format("--format", common.format, "json");
    if (format != "json") {
        throw std::invalid_argument("macro: only json output is supported");
    }

    const lgsim::MacroReport report = lgsim::macro_report(p);
    json outputs{{"delta_m_bohr", report.delta_m_bohr}, {"delta_n", report.delta_n}};
    json constants{{"bohr_magneton", lgsim::constants::bohr_magneton},
                   {"elementary_charge", lgsim::constants::elementary_charge}};
    emit_json_report(
        common.out,
        make_report("macro", r.inputs(), std::move(outputs), std::nullopt,
                    json{{"constants", std::move(constants)}}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leggett-Garg protocol simulator for a dephasing two-level system"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "emit q3 curves and the disturbance d over an angle grid");
    CommonOpts sweep_common;
    ProtocolOpts sweep_proto;
    sweep_proto.theta1 = "0:180:1";
    sweep_proto.theta2 = "0:180:1";
    sweep_common.attach(sweep_cmd);
    sweep_proto.attach(sweep_cmd, true);

    // lg
    auto* lg_cmd = app.add_subcommand(
        "lg", "evaluate the four two-ensemble inequalities for a fixed (q1, q2)");
    CommonOpts lg_common;
    ProtocolOpts lg_proto;
    std::string lg_q1 = "1", lg_q2 = "-1";
    lg_common.attach(lg_cmd);
    lg_proto.attach(lg_cmd, false);
    lg_cmd->add_option("--q1", lg_q1, "fixed value assigned to Q1 (+1 or -1)");
    lg_cmd->add_option("--q2", lg_q2, "fixed value assigned to Q2 (+1 or -1)");

    // table
    auto* table_cmd = app.add_subcommand(
        "table", "print the logic table reducing each inequality to a sign of d");
    CommonOpts table_common;
    table_common.attach(table_cmd);

    // ndc
    auto* ndc_cmd = app.add_subcommand(
        "ndc", "finite-shot two-sample z test of the non-disturbance condition");
    CommonOpts ndc_common;
    ProtocolOpts ndc_proto;
    std::string ndc_shots = "10000", ndc_seed = "0";
    ndc_common.attach(ndc_cmd);
    ndc_proto.attach(ndc_cmd, false);
    ndc_cmd->add_option("--shots", ndc_shots, "shots per ensemble arm");
    ndc_cmd->add_option("--seed", ndc_seed, "base seed (default: LG_SEED or 0)");

    // sample
    auto* sample_cmd =
        app.add_subcommand("sample", "draw finite-shot Q3 outcomes for one arm");
    CommonOpts sample_common;
    ProtocolOpts sample_proto;
    std::string sample_shots = "10000", sample_seed = "0";
    bool sample_pulse = true;
    sample_common.attach(sample_cmd);
    sample_proto.attach(sample_cmd, false);
    sample_cmd->add_option("--shots", sample_shots, "number of shots");
    sample_cmd->add_option("--seed", sample_seed, "seed (default: LG_SEED or 0)");
    const CLI::Option* sample_pulse_opt = sample_cmd->add_flag(
        "--pulse,!--no-pulse", sample_pulse, "apply the measurement pulse (default on)");

    // full
    auto* full_cmd = app.add_subcommand(
        "full", "three-time test with control disturbances and corrected bound");
    CommonOpts full_common;
    std::string full_a = "0", full_b = "90", full_c = "90";
    std::string full_ta = "0", full_t2a = "inf", full_t = "18ns", full_t2 = "10ns";
    full_common.attach(full_cmd);
    full_cmd->add_option("--theta-a", full_a, "rotation before t1, degrees");
    full_cmd->add_option("--theta-b", full_b, "rotation between t1 and t2, degrees");
    full_cmd->add_option("--theta-c", full_c, "rotation between t2 and t3, degrees");
    full_cmd->add_option("--ta", full_ta, "t1-slot dephasing period when unmeasured");
    full_cmd->add_option("--T2a", full_t2a, "t1-slot coherence time ('inf' allowed)");
    full_cmd->add_option("--t", full_t, "t2-slot dephasing period when unmeasured");
    full_cmd->add_option("--T2", full_t2, "t2-slot coherence time ('inf' allowed)");

    // mr
    auto* mr_cmd = app.add_subcommand(
        "mr", "classical telegraph oracle, exact and optionally sampled");
    CommonOpts mr_common;
    std::string mr_p_init = "0.5", mr_flip12 = "0", mr_flip23 = "0";
    std::string mr_invasive = "0", mr_shots = "0", mr_seed = "0";
    mr_common.attach(mr_cmd);
    mr_cmd->add_option("--p-init", mr_p_init, "P(q1 = +1)");
    mr_cmd->add_option("--p-flip12", mr_flip12, "flip probability between t1 and t2");
    mr_cmd->add_option("--p-flip23", mr_flip23, "flip probability between t2 and t3");
    mr_cmd->add_option("--invasive", mr_invasive,
                       "probability that a t2 measurement kicks the state");
    mr_cmd->add_option("--shots", mr_shots, "Monte Carlo shots (0 = exact only)");
    mr_cmd->add_option("--seed", mr_seed, "seed (default: LG_SEED or 0)");

    // macro
    auto* macro_cmd =
        app.add_subcommand("macro", "macroscopicity figures of merit");
    CommonOpts macro_common;
    std::string macro_ip = "170nA", macro_area = "7um2", macro_length = "";
    std::string macro_vf = "2.03e6", macro_overlap = "1";
    macro_common.attach(macro_cmd);
    macro_cmd->add_option("--ip", macro_ip, "persistent current (e.g. 170nA)");
    macro_cmd->add_option("--area", macro_area, "loop area (e.g. 7um2)");
    macro_cmd->add_option("--length", macro_length,
                          "loop circumference (default: square loop, 4*sqrt(area))");
    macro_cmd->add_option("--vf", macro_vf, "Fermi velocity in m/s");
    macro_cmd->add_option("--overlap", macro_overlap,
                          "flux-eigenstate overlap factor in (0, 1]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sweep_cmd) return run_sweep(*sweep_cmd, sweep_common, sweep_proto);
        if (*lg_cmd) return run_lg(*lg_cmd, lg_common, lg_proto, lg_q1, lg_q2);
        if (*table_cmd) return run_table(*table_cmd, table_common);
        if (*ndc_cmd) return run_ndc(*ndc_cmd, ndc_common, ndc_proto, ndc_shots, ndc_seed);
        if (*sample_cmd) {
            return run_sample(*sample_cmd, sample_common, sample_proto, sample_shots,
                              sample_seed, sample_pulse_opt, sample_pulse);
        }
        if (*full_cmd) {
            return run_full(*full_cmd, full_common, full_a, full_b, full_c, full_ta,
                            full_t2a, full_t, full_t2);
        }
        if (*mr_cmd) {
            return run_mr(*mr_cmd, mr_common, mr_p_init, mr_flip12, mr_flip23,
                          mr_invasive, mr_shots, mr_seed);
        }
        if (*macro_cmd) {
            return run_macro(*macro_cmd, macro_common, macro_ip, macro_area,
                             macro_length, macro_vf, macro_overlap);
        }
    } catch (const std::exception& e) {
        std::cerr << "lgsim: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "lgsim: no subcommand selected\n";
    return 2;
}
