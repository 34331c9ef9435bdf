#pragma once

// Report layer behind the CLI: builds one JSON document per subcommand with
// the fixed shape {"config", "results", "notes"}, then renders it as JSON,
// CSV (a flat projection of "results") or text. Every decimal is produced
// from exact rationals with directed rounding, and the echoed config omits
// the thread count and output path, so a given configuration yields
// byte-identical reports no matter how the work was scheduled.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/density.hpp"
#include "sqfree/lemmas.hpp"
#include "sqfree/modarith.hpp"
#include "sqfree/rational.hpp"
#include "sqfree/sieve.hpp"

namespace sqfree {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, text };

inline std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::text: return "text";
    }
    throw std::invalid_argument("unknown output format");
}

inline OutputFormat format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format: " + name);
}

struct RunConfig {
    std::string subcommand;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out_path;  // never echoed
    unsigned threads = 0;                 // never echoed; results are thread-invariant
    u64 segment_length = kDefaultSegmentLength;
    unsigned truncation = kDefaultTruncation;
    std::optional<u64> x;
    std::vector<u32> shifts;              // count: requested singles
    bool triple = false;                  // count: request the triple row
    std::optional<std::string> set_name;  // constants: restrict to one set
    std::string which = "all";            // lemmas
    std::optional<u32> phi;
    std::optional<u64> d_low;
    std::optional<u64> n;
    std::optional<u64> k;
    std::string probe = "all";            // sweep
    std::optional<u64> d_max;
    std::optional<u64> k_max;
};

struct RunResult {
    std::string output;
    int exit_code = 0;
};

namespace report {

inline std::string dec_floor6(const Rational& q) { return decimal_string(q, 6, -1); }
inline std::string dec_ceil6(const Rational& q) { return decimal_string(q, 6, +1); }
inline std::string dec_near6(const Rational& q) { return decimal_string(q, 6, 0); }

inline ordered_json interval_json(const Interval& iv) {
    return ordered_json::array({dec_floor6(iv.lower), dec_ceil6(iv.upper)});
}

inline std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Least-squares slope through (log x, log y) points; y <= 0 points are the
// caller's job to drop. Returns nothing when the fit is degenerate.
inline std::optional<double> fitted_exponent(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2) return std::nullopt;
    double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

inline std::vector<u64> checkpoint_grid(u64 x) {
    std::vector<u64> grid;
    for (u64 c = 10; c <= x; c *= 10) grid.push_back(c);
    if (grid.empty() || grid.back() != x) grid.push_back(x);
    return grid;
}

inline u64 require_x(const RunConfig& config) {
    if (!config.x) throw std::invalid_argument(config.subcommand + " requires --x");
    return *config.x;
}

inline ordered_json kv_json(const std::vector<std::pair<std::string, std::string>>& kv) {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : kv) out[key] = value;
    return out;
}

inline ordered_json lemma_json(const LemmaReport& rep) {
    ordered_json j;
    j["lemma"] = lemma_name(rep.id);
    j["params"] = kv_json(rep.params);
    j["pass"] = rep.pass ? ordered_json(*rep.pass) : ordered_json(nullptr);
    j["values"] = kv_json(rep.values);
    j["details"] = rep.details;
    return j;
}

struct BuiltDoc {
    ordered_json doc;
    int exit_code = 0;
};

// ---- count ----------------------------------------------------------------

struct CountRow {
    std::string key;
    ShiftSet set;
    u64 count;
};

inline BuiltDoc build_count(const RunConfig& config) {
    u64 x = require_x(config);
    SieveOptions opts{config.segment_length, config.threads};

    std::vector<u32> singles = config.shifts;
    std::sort(singles.begin(), singles.end());
    singles.erase(std::unique(singles.begin(), singles.end()), singles.end());
    for (u32 f : singles) require_shift(f);
    bool full = singles.empty() && !config.triple;

    std::vector<CountRow> rows;
    if (full) {
        CountReport rep = count_triple(x, opts);
        const char* pair_keys[3] = {"pair_1_2", "pair_1_3", "pair_2_3"};
        for (int i = 0; i < 3; ++i)
            rows.push_back({"single_" + std::to_string(i + 1),
                            ShiftSet::of({static_cast<u32>(i + 1)}), rep.singles[i]});
        rows.push_back({pair_keys[0], ShiftSet::of({1, 2}), rep.pairs[0]});
        rows.push_back({pair_keys[1], ShiftSet::of({1, 3}), rep.pairs[1]});
        rows.push_back({pair_keys[2], ShiftSet::of({2, 3}), rep.pairs[2]});
        rows.push_back({"triple", ShiftSet::of({1, 2, 3}), rep.triple});
    } else {
        for (u32 f : singles)
            rows.push_back({"single_" + std::to_string(f), ShiftSet::of({f}),
                            count_singles(x, f, opts)});
        if (config.triple)
            rows.push_back({"triple", ShiftSet::of({1, 2, 3}), count_triple(x, opts).triple});
    }

    ordered_json counts = ordered_json::object();
    ordered_json ratios = ordered_json::object();
    ordered_json predicted = ordered_json::object();
    for (const CountRow& row : rows) {
        counts[row.key] = row.count;
        ratios[row.key] = dec_near6(Rational(row.count, x));
        predicted[row.key] = interval_json(predicted_main_term(row.set, x, config.truncation));
    }

    ordered_json doc;
    doc["config"] = {{"subcommand", "count"},
                     {"x", x},
                     {"shifts", singles},
                     {"triple", config.triple},
                     {"truncation", config.truncation},
                     {"segment_length", config.segment_length},
                     {"format", format_name(config.format)}};
    doc["results"] = {{"x", x},
                      {"counts", counts},
                      {"ratios", ratios},
                      {"predicted", predicted}};
    doc["notes"] = ordered_json::array(
        {"predicted columns are certified enclosures of (density constant) * x"});
    return {doc, 0};
}

// ---- constants ------------------------------------------------------------

inline BuiltDoc build_constants(const RunConfig& config) {
    std::vector<ShiftSet> sets;
    if (config.set_name) {
        sets.push_back(shift_set_from_name(*config.set_name));
    } else {
        sets.assign(all_shift_sets().begin(), all_shift_sets().end());
    }

    ordered_json table = ordered_json::array();
    bool has_theta1 = false;
    for (ShiftSet set : sets) {
        DensityProfile prof = constant(set, config.truncation);
        if (set.name() == "theta_1") has_theta1 = true;
        ordered_json row;
        row["name"] = set.name();
        row["shifts"] = set.list_string();
        row["c"] = fraction_string(prof.c);
        row["partial"] = dec_near6(prof.partial);
        row["tail_lower"] = fraction_string(prof.tail.lower);
        row["value"] = interval_json(prof.value);
        row["midpoint"] = dec_near6(prof.value.midpoint());
        table.push_back(row);
    }

    ordered_json doc;
    doc["config"] = {{"subcommand", "constants"},
                     {"set", config.set_name ? ordered_json(*config.set_name)
                                             : ordered_json(nullptr)},
                     {"truncation", config.truncation},
                     {"format", format_name(config.format)}};
    doc["results"] = {{"truncation", config.truncation}, {"constants", table}};
    ordered_json notes = ordered_json::array();
    notes.push_back(
        "value endpoints are outward-rounded to 6 decimal places; the enclosure "
        "multiplies the exact truncated product by the certified tail bound");
    if (has_theta1)
        notes.push_back(
            "theta_1 uses c = 7/9 from the residue count (x^2+1 has no roots mod 4 "
            "or mod 9, x^2+2 has roots {4,5} mod 9); the value 8/9 sometimes quoted "
            "for this pair contradicts that count and the theta_1 enclosure itself");
    doc["notes"] = notes;
    return {doc, 0};
}

// ---- verify ---------------------------------------------------------------

inline BuiltDoc build_verify(const RunConfig& config) {
    u64 x = require_x(config);
    SieveOptions opts{config.segment_length, config.threads};

    DensityProfile sigma = constant(ShiftSet::of({1, 2, 3}), config.truncation);
    Rational mid = sigma.value.midpoint();

    ordered_json checkpoints = ordered_json::array();
    std::vector<std::pair<double, double>> fit_points;
    for (u64 cp : checkpoint_grid(x)) {
        CountReport rep = count_triple(cp, opts);
        Rational residual = Rational(rep.triple) - mid * Rational(cp);
        ordered_json row;
        row["x"] = cp;
        row["triple"] = rep.triple;
        row["predicted"] = interval_json(sigma.value * Rational(cp));
        row["ratio"] = dec_near6(Rational(rep.triple, cp));
        row["residual"] = dec_near6(residual);
        checkpoints.push_back(row);
        double res = residual.convert_to<double>();
        if (res != 0)
            fit_points.emplace_back(std::log(static_cast<double>(cp)),
                                    std::log(std::fabs(res)));
    }
    std::optional<double> fit = fitted_exponent(fit_points);

    ordered_json doc;
    doc["config"] = {{"subcommand", "verify"},
                     {"x", x},
                     {"truncation", config.truncation},
                     {"segment_length", config.segment_length},
                     {"format", format_name(config.format)}};
    doc["results"] = {{"x", x},
                      {"sigma", interval_json(sigma.value)},
                      {"sigma_midpoint", dec_near6(mid)},
                      {"checkpoints", checkpoints},
                      {"residual_fit_exponent",
                       fit ? ordered_json(fixed4(*fit)) : ordered_json(nullptr)}};
    doc["notes"] = ordered_json::array(
        {"residual = triple - sigma_midpoint * x; its sign carries no claim",
         "residual_fit_exponent is an informational least-squares slope of "
         "log|residual| against log x"});
    return {doc, 0};
}

// ---- lemmas ---------------------------------------------------------------

inline constexpr u64 kTwoOmegaScanCap = 10'000'000;

inline LemmaReport floor_identity_grid() {
    u64 cases = 0;
    u64 failures = 0;
    std::string first_failure;
    for (u32 phi = 1; phi <= 3; ++phi) {
        for (u64 d_low = 1; d_low <= 64; ++d_low) {
            for (u64 x : {u64{10}, u64{100}, u64{1000}}) {
                ++cases;
                LemmaReport one = floor_identity_check(phi, d_low, x);
                if (!*one.pass && failures++ == 0)
                    first_failure = "phi=" + std::to_string(phi) +
                                    " d_low=" + std::to_string(d_low) +
                                    " x=" + std::to_string(x);
            }
        }
    }
    LemmaReport report;
    report.id = LemmaId::floor_identity;
    report.params = {{"phi", "1,2,3"}, {"d_low", "1..64"}, {"x", "10,100,1000"}};
    report.pass = failures == 0;
    report.values = {{"cases", std::to_string(cases)},
                     {"failures", std::to_string(failures)}};
    if (failures > 0) report.values.push_back({"first_failure", first_failure});
    report.details = failures == 0 ? "floor decomposition exact on the whole grid"
                                   : "floor decomposition failed";
    return report;
}

inline LemmaReport b_sum_report(u32 phi, u64 d_low, u64 x) {
    BSumResult r = b_sum(phi, d_low, x);
    LemmaReport report;
    report.id = LemmaId::b_sum;
    report.params = {{"phi", std::to_string(phi)},
                     {"d_low", std::to_string(d_low)},
                     {"x", std::to_string(x)}};
    report.values = {{"b_sum", fraction_string(r.value)},
                     {"trivial_bound", std::to_string(r.root_terms)}};
    report.details = "exact sawtooth sum over the dyadic block; no bound asserted";
    return report;
}

inline LemmaReport pell_report(u32 phi, u64 k, u64 x) {
    LemmaReport report;
    report.id = LemmaId::pell_count;
    report.params = {{"phi", std::to_string(phi)},
                     {"k", std::to_string(k)},
                     {"x", std::to_string(x)}};
    report.values = {{"count", std::to_string(pell_count(phi, k, x))}};
    report.details = "solutions of n^2 - k d^2 = -phi with n <= x; no bound asserted";
    return report;
}

inline LemmaReport two_omega_guarded(u64 n) {
    if (n == 0) throw std::invalid_argument("two_omega: N must be positive");
    if (n > kTwoOmegaScanCap)
        throw std::overflow_error("two_omega scan limited to N <= 10^7");
    return two_omega_check(static_cast<u32>(n));
}

inline BuiltDoc build_lemmas(const RunConfig& config) {
    std::vector<LemmaReport> reports;
    u32 phi = config.phi.value_or(2);
    u64 d_low = config.d_low.value_or(3);
    u64 x = config.x.value_or(10);

    const std::string& which = config.which;
    if (which == "all") {
        reports.push_back(floor_identity_grid());
        reports.push_back(two_omega_guarded(config.n.value_or(100'000)));
        reports.push_back(four_term_check(config.n.value_or(1'000'000)));
        reports.push_back(four_shift_factor_check());
    } else if (which == "floor_identity") {
        if (config.phi || config.d_low || config.x)
            reports.push_back(floor_identity_check(phi, d_low, x));
        else
            reports.push_back(floor_identity_grid());
    } else if (which == "two_omega") {
        reports.push_back(two_omega_guarded(config.n.value_or(100'000)));
    } else if (which == "b_sum") {
        reports.push_back(b_sum_report(phi, d_low, x));
    } else if (which == "pell_count") {
        reports.push_back(pell_report(config.phi.value_or(1), config.k.value_or(2),
                                      config.x.value_or(50)));
    } else if (which == "four_term") {
        reports.push_back(four_term_check(config.n.value_or(1'000'000)));
        reports.push_back(four_shift_factor_check());
    } else if (which == "four_shift_factor") {
        reports.push_back(four_shift_factor_check());
    } else {
        throw std::invalid_argument("unknown lemma selector: " + which);
    }

    int exit_code = 0;
    ordered_json list = ordered_json::array();
    for (const LemmaReport& rep : reports) {
        if (rep.pass && !*rep.pass) exit_code = 2;
        list.push_back(lemma_json(rep));
    }

    ordered_json doc;
    auto opt_u64 = [](const std::optional<u64>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    doc["config"] = {{"subcommand", "lemmas"},
                     {"which", which},
                     {"phi", config.phi ? ordered_json(*config.phi) : ordered_json(nullptr)},
                     {"d_low", opt_u64(config.d_low)},
                     {"x", opt_u64(config.x)},
                     {"n", opt_u64(config.n)},
                     {"k", opt_u64(config.k)},
                     {"format", format_name(config.format)}};
    doc["results"] = {{"reports", list}};
    doc["notes"] = ordered_json::array(
        {"reports with \"pass\": null are probes; their values are measured, not graded"});
    return {doc, exit_code};
}

// ---- sweep ----------------------------------------------------------------

inline constexpr u64 kMaxBSumDLow = kMaxBruteforceRootD / 2;

inline ordered_json b_sum_probe(u32 phi, u64 x, u64 d_max) {
    if (d_max == 0 || d_max > kMaxBSumDLow)
        throw std::invalid_argument("b_sum probe requires 1 <= dmax <= " +
                                    std::to_string(kMaxBSumDLow));
    ordered_json rows = ordered_json::array();
    std::vector<std::pair<double, double>> fit_points;
    for (u64 d_low = 1; d_low <= d_max; d_low *= 2) {
        BSumResult r = b_sum(phi, d_low, x);
        ordered_json row;
        row["d_low"] = d_low;
        row["value"] = fraction_string(r.value);
        row["trivial_bound"] = r.root_terms;
        rows.push_back(row);
        double v = r.value.convert_to<double>();
        if (v != 0)
            fit_points.emplace_back(std::log(static_cast<double>(d_low)),
                                    std::log(std::fabs(v)));
    }
    std::optional<double> fit = fitted_exponent(fit_points);
    ordered_json probe;
    probe["probe"] = "b_sum";
    probe["phi"] = phi;
    probe["x"] = x;
    probe["rows"] = rows;
    probe["fit_exponent"] = fit ? ordered_json(fixed4(*fit)) : ordered_json(nullptr);
    return probe;
}

inline ordered_json pell_probe(u32 phi, u64 k, u64 x) {
    ordered_json rows = ordered_json::array();
    std::vector<std::pair<double, double>> fit_points;
    for (u64 cp : checkpoint_grid(x)) {
        u64 count = pell_count(phi, k, cp);
        ordered_json row;
        row["x"] = cp;
        row["count"] = count;
        rows.push_back(row);
        if (count > 0)
            fit_points.emplace_back(std::log(static_cast<double>(cp)),
                                    std::log(static_cast<double>(count)));
    }
    std::optional<double> fit = fitted_exponent(fit_points);
    ordered_json probe;
    probe["probe"] = "pell_count";
    probe["phi"] = phi;
    probe["k"] = k;
    probe["rows"] = rows;
    probe["fit_exponent"] = fit ? ordered_json(fixed4(*fit)) : ordered_json(nullptr);
    return probe;
}

inline BuiltDoc build_sweep(const RunConfig& config) {
    ordered_json probes = ordered_json::array();
    const std::string& which = config.probe;
    if (which == "all" || which == "b_sum") {
        probes.push_back(b_sum_probe(config.phi.value_or(2), config.x.value_or(1000),
                                     config.d_max.value_or(256)));
    }
    if (which == "all" || which == "pell_count") {
        u32 phi = config.phi.value_or(1);
        u64 x = config.x.value_or(100'000);
        for (u64 k = 1; k <= config.k_max.value_or(8); ++k)
            probes.push_back(pell_probe(phi, k, x));
    }
    if (probes.empty()) throw std::invalid_argument("unknown probe selector: " + which);

    ordered_json doc;
    auto opt_u64 = [](const std::optional<u64>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    doc["config"] = {{"subcommand", "sweep"},
                     {"probe", which},
                     {"phi", config.phi ? ordered_json(*config.phi) : ordered_json(nullptr)},
                     {"x", opt_u64(config.x)},
                     {"d_max", opt_u64(config.d_max)},
                     {"k_max", opt_u64(config.k_max)},
                     {"format", format_name(config.format)}};
    doc["results"] = {{"probes", probes}};
    doc["notes"] = ordered_json::array(
        {"probe tables are informational; fitted exponents are least-squares "
         "log-log slopes and carry no asserted bound"});
    return {doc, 0};
}

// ---- rendering ------------------------------------------------------------

inline std::string cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(cells[i]);
    }
    out += '\n';
    return out;
}

inline std::string joined_kv(const ordered_json& obj) {
    std::string out;
    for (const auto& [key, value] : obj.items()) {
        if (!out.empty()) out += ';';
        out += key + "=" + cell(value);
    }
    return out;
}

inline std::string render_csv(const ordered_json& doc) {
    const std::string sub = doc["config"]["subcommand"].get<std::string>();
    const ordered_json& results = doc["results"];
    std::string out;
    if (sub == "count") {
        out += csv_row({"set", "count", "ratio", "predicted_lower", "predicted_upper"});
        for (const auto& [key, value] : results["counts"].items())
            out += csv_row({key, cell(value), cell(results["ratios"][key]),
                            cell(results["predicted"][key][0]),
                            cell(results["predicted"][key][1])});
    } else if (sub == "constants") {
        out += csv_row({"name", "shifts", "c", "partial", "tail_lower", "value_lower",
                        "value_upper", "midpoint"});
        for (const ordered_json& row : results["constants"])
            out += csv_row({cell(row["name"]), cell(row["shifts"]), cell(row["c"]),
                            cell(row["partial"]), cell(row["tail_lower"]),
                            cell(row["value"][0]), cell(row["value"][1]),
                            cell(row["midpoint"])});
    } else if (sub == "verify") {
        out += csv_row({"x", "triple", "predicted_lower", "predicted_upper", "ratio",
                        "residual"});
        for (const ordered_json& row : results["checkpoints"])
            out += csv_row({cell(row["x"]), cell(row["triple"]), cell(row["predicted"][0]),
                            cell(row["predicted"][1]), cell(row["ratio"]),
                            cell(row["residual"])});
    } else if (sub == "lemmas") {
        out += csv_row({"lemma", "pass", "params", "values", "details"});
        for (const ordered_json& rep : results["reports"])
            out += csv_row({cell(rep["lemma"]), cell(rep["pass"]), joined_kv(rep["params"]),
                            joined_kv(rep["values"]), cell(rep["details"])});
    } else if (sub == "sweep") {
        out += csv_row({"probe", "phi", "k", "x", "d_low", "value", "trivial_bound",
                        "count"});
        for (const ordered_json& probe : results["probes"]) {
            if (probe["probe"] == "b_sum") {
                for (const ordered_json& row : probe["rows"])
                    out += csv_row({"b_sum", cell(probe["phi"]), "", cell(probe["x"]),
                                    cell(row["d_low"]), cell(row["value"]),
                                    cell(row["trivial_bound"]), ""});
            } else {
                for (const ordered_json& row : probe["rows"])
                    out += csv_row({"pell_count", cell(probe["phi"]), cell(probe["k"]),
                                    cell(row["x"]), "", "", "", cell(row["count"])});
            }
        }
    } else {
        throw std::logic_error("render_csv: unknown subcommand " + sub);
    }
    return out;
}

inline std::string render_text(const ordered_json& doc) {
    const std::string sub = doc["config"]["subcommand"].get<std::string>();
    const ordered_json& results = doc["results"];
    std::string out = "sqfree " + sub + "\n";
    out += "config:";
    for (const auto& [key, value] : doc["config"].items()) {
        if (key == "subcommand" || key == "format" || value.is_null()) continue;
        out += " " + key + "=" + (value.is_array() ? value.dump() : cell(value));
    }
    out += "\n";

    auto interval_text = [](const ordered_json& iv) {
        return "[" + iv[0].get<std::string>() + ", " + iv[1].get<std::string>() + "]";
    };

    if (sub == "count") {
        for (const auto& [key, value] : results["counts"].items())
            out += "  " + key + " = " + cell(value) +
                   "  ratio " + cell(results["ratios"][key]) +
                   "  predicted " + interval_text(results["predicted"][key]) + "\n";
    } else if (sub == "constants") {
        for (const ordered_json& row : results["constants"])
            out += "  " + cell(row["name"]) + " {" + cell(row["shifts"]) + "}" +
                   "  value " + interval_text(row["value"]) +
                   "  midpoint " + cell(row["midpoint"]) +
                   "  c " + cell(row["c"]) + "\n";
    } else if (sub == "verify") {
        out += "  sigma " + interval_text(results["sigma"]) + "  midpoint " +
               cell(results["sigma_midpoint"]) + "\n";
        for (const ordered_json& row : results["checkpoints"])
            out += "  x " + cell(row["x"]) + "  triple " + cell(row["triple"]) +
                   "  predicted " + interval_text(row["predicted"]) + "  ratio " +
                   cell(row["ratio"]) + "  residual " + cell(row["residual"]) + "\n";
        out += "  residual_fit_exponent " + cell(results["residual_fit_exponent"]) + "\n";
    } else if (sub == "lemmas") {
        for (const ordered_json& rep : results["reports"]) {
            std::string verdict = rep["pass"].is_null()
                                      ? std::string("probe")
                                      : (rep["pass"].get<bool>() ? "pass" : "FAIL");
            out += "  " + cell(rep["lemma"]) + " [" + verdict + "] " +
                   joined_kv(rep["params"]) + " | " + joined_kv(rep["values"]) + "\n";
        }
    } else if (sub == "sweep") {
        for (const ordered_json& probe : results["probes"]) {
            out += "  " + cell(probe["probe"]) + " phi=" + cell(probe["phi"]);
            if (probe.contains("k")) out += " k=" + cell(probe["k"]);
            if (probe.contains("x")) out += " x=" + cell(probe["x"]);
            out += " fit=" + cell(probe["fit_exponent"]) + "\n";
            for (const ordered_json& row : probe["rows"])
                out += "    " + joined_kv(row) + "\n";
        }
    } else {
        throw std::logic_error("render_text: unknown subcommand " + sub);
    }

    if (!doc["notes"].empty()) {
        out += "notes:\n";
        for (const ordered_json& note : doc["notes"])
            out += "  - " + note.get<std::string>() + "\n";
    }
    return out;
}

}  // namespace report

inline RunResult run(const RunConfig& config) {
    report::BuiltDoc built;
    if (config.subcommand == "count") {
        built = report::build_count(config);
    } else if (config.subcommand == "constants") {
        built = report::build_constants(config);
    } else if (config.subcommand == "verify") {
        built = report::build_verify(config);
    } else if (config.subcommand == "lemmas") {
        built = report::build_lemmas(config);
    } else if (config.subcommand == "sweep") {
        built = report::build_sweep(config);
    } else {
        throw std::invalid_argument("unknown subcommand: " + config.subcommand);
    }

    RunResult result;
    result.exit_code = built.exit_code;
    switch (config.format) {
        case OutputFormat::json: result.output = built.doc.dump(2) + "\n"; break;
        case OutputFormat::csv: result.output = report::render_csv(built.doc); break;
        case OutputFormat::text: result.output = report::render_text(built.doc); break;
    }
    return result;
}

}  // namespace sqfree
