// higgs-threeterm: batch front end for the chain, pairing, filtered-degree and
// harmonic-metric checks.
//
// Exit codes: 0 success (informational checks included), 1 a sweep violation,
// pairing counterexample or failed numeric check, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "threeterm/errors.hpp"
#include "threeterm/report.hpp"

using namespace threeterm;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

void flatten(const Json& value, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
    if (value.is_object() && !value.empty()) {
        for (const auto& [k, v] : value.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else {
        out.emplace_back(prefix, value);
    }
}

// Arrays of objects become one row per element; anything else becomes field,value rows.
std::string to_csv(const Json& doc) {
    std::ostringstream os;
    if (doc.is_array() && !doc.empty() && doc.front().is_object()) {
        std::vector<std::pair<std::string, Json>> header;
        flatten(doc.front(), "", header);
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i].first);
        os << "\n";
        for (const auto& row : doc) {
            std::vector<std::pair<std::string, Json>> cells;
            flatten(row, "", cells);
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i].second);
            os << "\n";
        }
        return os.str();
    }
    std::vector<std::pair<std::string, Json>> cells;
    flatten(doc, "", cells);
    os << "field,value\n";
    for (const auto& [k, v] : cells) os << csv_cell(k) << "," << csv_cell(v) << "\n";
    return os.str();
}

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const Json& doc) const {
        std::string text = format == "csv" ? to_csv(doc) : doc.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path);
        if (!file) throw std::runtime_error("cannot open output file " + path);
        file << text;
    }
};

Json roots_list_json(const std::vector<RootSequence>& seqs) {
    Json out = Json::array();
    for (const auto& s : seqs) out.push_back(std::vector<int>(s.roots().begin(), s.roots().end()));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chain-type Higgs bundles, the three-term inequality and harmonic-metric checks"};
    app.require_subcommand(1);
    Output output;
    app.add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", output.path, "Write to this file instead of stdout");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive sweep (or listing) of chains with r_1 = 0");
    SweepParams sweep_params;
    sweep_params.workers = default_worker_count();
    bool list_only = false;
    bool include_unstable = false;
    bool no_timing = false;
    enumerate->add_option("--n-min", sweep_params.n_min, "Shortest chain")->default_val(2);
    enumerate->add_option("--n-max", sweep_params.n_max, "Longest chain")->default_val(5);
    enumerate->add_option("--max-rise", sweep_params.max_rise, "Largest step size (even)")->default_val(8);
    enumerate->add_option("--root-bound", sweep_params.root_bound, "Bound on |r_j|")->default_val(10);
    enumerate->add_option("--workers", sweep_params.workers, "Worker threads (default HIGGS_THREETERM_WORKERS or 1)");
    enumerate->add_flag("--list", list_only, "List the sequences instead of running the sweep");
    enumerate->add_flag("--include-unstable", include_unstable, "With --list, keep admissible unstable chains");
    enumerate->add_flag("--no-timing", no_timing, "Omit the timing object from the sweep report");

    // check
    auto* check = app.add_subcommand("check", "Admissibility, stability and three-term report for one chain");
    std::string roots_text;
    check->add_option("--roots", roots_text, "Comma-separated even roots, e.g. 4,2,0,-2")->required();

    // pair
    auto* pair = app.add_subcommand("pair", "Matching certificates for a stable admissible chain");
    std::string pair_roots;
    std::optional<int> pair_height;
    bool with_regions = false;
    pair->add_option("--roots", pair_roots, "Comma-separated even roots")->required();
    pair->add_option("--height", pair_height, "Only this height (default: every realized height)");
    pair->add_flag("--regions", with_regions, "Include the region classification");

    // translate
    auto* translate = app.add_subcommand("translate", "Residue translation across the three sides");
    std::string from = "rep";
    std::string beta = "0", u = "0", v = "0", jump = "0", re = "0", im = "0";
    translate->add_option("--from", from, "Input side")->check(CLI::IsMember({"rep", "connection", "higgs"}));
    translate->add_option("--beta", beta, "Representation-side jump");
    translate->add_option("--u", u, "Real part of the exponent, in [0, 1)");
    translate->add_option("--v", v, "Imaginary part of the exponent");
    translate->add_option("--jump", jump, "Jump (connection or Higgs input)");
    translate->add_option("--re", re, "Eigenvalue real part (connection or Higgs input)");
    translate->add_option("--im", im, "Eigenvalue imaginary part (connection or Higgs input)");

    // rank1
    auto* rank1 = app.add_subcommand("rank1", "Filtered character (chi^a, b) of PSL_2(Z)");
    int character = 0;
    std::string b_text = "0";
    rank1->add_option("--a", character, "Character index 0..5")->required();
    rank1->add_option("--b", b_text, "Jump b (rational)")->required();

    // filtered-degree
    auto* degree = app.add_subcommand("filtered-degree", "Filtered degree and slope");
    std::string side = "rep";
    std::string jumps_text;
    std::optional<int> rank;
    std::string base_degree = "0";
    degree->add_option("--side", side, "rep or bundle")->check(CLI::IsMember({"rep", "bundle"}));
    degree->add_option("--jumps", jumps_text, "value:dim pairs, cusps separated by ';'");
    degree->add_option("--rank", rank, "Rank (default: dimension sum at the first cusp)");
    degree->add_option("--base-degree", base_degree, "deg of the zeroth extension (bundle side)");

    // verify-metric
    auto* verify = app.add_subcommand("verify-metric", "Numeric checks of the inclusion harmonic bundle");
    MetricCheckOptions metric_options;
    std::string tau_text;
    std::optional<double> step, tolerance;
    verify->add_option("--tau", tau_text, "Single point x+yi instead of the grid");
    verify->add_option("--step", step, "Finite-difference step h override");
    verify->add_option("--tol", tolerance, "Tolerance override for every check");
    verify->add_option("--grid", metric_options.grid_size, "Number of grid points")->default_val(20);
    verify->add_option("--seed", metric_options.seed, "Seed for the quasi-random grid")->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (enumerate->parsed()) {
            if (list_only) {
                EnumerationParams params{sweep_params.n_min, sweep_params.n_max, sweep_params.max_rise,
                                         sweep_params.root_bound, !include_unstable};
                output.emit(roots_list_json(collect_chains(params)));
                return 0;
            }
            auto report = sweep(sweep_params);
            Json doc = to_json(report, !no_timing);
            if (output.format == "csv") doc = doc["per_n"];
            output.emit(doc);
            return report.pass() ? 0 : kExitViolation;
        }
        if (check->parsed()) {
            output.emit(check_report(parse_roots(roots_text)));
            return 0;
        }
        if (pair->parsed()) {
            auto seq = parse_roots(pair_roots);
            std::vector<int> heights;
            if (pair_height) {
                heights.push_back(*pair_height);
            } else {
                for (const auto& [r, m] : multiplicities(seq).counts()) heights.push_back(r);
            }
            Json certs = Json::array();
            bool failed = false;
            for (int r : heights) {
                auto outcome = build_matching(seq, r);
                Json entry;
                if (auto* cert = std::get_if<MatchingCertificate>(&outcome)) {
                    entry = to_json(*cert);
                    auto verdict = verify_certificate(seq, *cert);
                    entry["verified"] = verdict.valid;
                    entry["reasons"] = verdict.reasons;
                    failed = failed || !verdict.valid;
                } else {
                    entry = to_json(std::get<MatchingFailure>(outcome));
                    failed = true;
                }
                if (with_regions) {
                    Json regions = Json::array();
                    for (const auto& region : classify_regions(seq, r)) regions.push_back(to_json(region));
                    entry["regions"] = regions;
                }
                certs.push_back(entry);
            }
            if (output.format == "csv") {
                Json rows = Json::array();
                for (const auto& c : certs)
                    for (const auto& p : c.value("pairs", Json::array()))
                        rows.push_back({{"height", c["height"]}, {"source", p["source"]}, {"target", p["target"]},
                                        {"label", p["label"]}});
                output.emit(rows);
            } else {
                output.emit(pair_height ? certs.front() : certs);
            }
            return failed ? kExitViolation : 0;
        }
        if (translate->parsed()) {
            ResidueBlockData block;
            if (from == "rep") {
                block = {parse_rational(beta), parse_rational(u), parse_rational(v)};
            } else {
                SideResidue residue{parse_rational(jump), {parse_rational(re), parse_rational(im)}};
                block = from == "connection" ? residue_connection_to_rep(residue) : residue_higgs_to_rep(residue);
            }
            output.emit(Json{{"representation", to_json(block)},
                             {"connection", to_json(residue_rep_to_connection(block))},
                             {"higgs", to_json(residue_rep_to_higgs(block))}});
            return 0;
        }
        if (rank1->parsed()) {
            Rational b = parse_rational(b_text);
            auto degrees = rank1_degrees(character, b);
            output.emit(Json{{"a", character},
                             {"b", to_string(b)},
                             {"jump", to_string(rank1_jump(character, b))},
                             {"unfiltered_degree", to_string(degrees.unfiltered)},
                             {"filtered_degree", to_string(degrees.filtered)},
                             {"residue_angle", to_string(rank1_residue_angle(character))}});
            return 0;
        }
        if (degree->parsed()) {
            auto cusps = parse_jumps(jumps_text);
            int r = rank.value_or(0);
            if (!rank) {
                if (cusps.empty()) throw MalformedInput("--rank is required when no jumps are given");
                for (const auto& j : cusps.front()) r += j.dimension;
            }
            if (side == "rep") {
                auto data = FilteredJumpData::representation(r, std::move(cusps));
                Rational deg = filtered_degree_rep(data);
                output.emit(Json{{"side", side},
                                 {"rank", r},
                                 {"degree", to_string(deg)},
                                 {"slope", to_string(deg / static_cast<std::int64_t>(r))}});
            } else {
                FilteredBundleData data{parse_rational(base_degree), FilteredJumpData::bundle(r, std::move(cusps))};
                output.emit(Json{{"side", side},
                                 {"rank", r},
                                 {"base_degree", to_string(data.base_degree)},
                                 {"degree", to_string(filtered_degree_bundle(data))},
                                 {"slope", to_string(slope_bundle(data))}});
            }
            return 0;
        }
        if (verify->parsed()) {
            if (!tau_text.empty()) metric_options.single_point = UpperHalfPoint::parse(tau_text);
            metric_options.step = step;
            metric_options.tolerance = tolerance;
            auto checks = run_metric_checks(metric_options);
            Json doc = Json::array();
            bool all_pass = true;
            for (const auto& c : checks) {
                doc.push_back(to_json(c));
                all_pass = all_pass && c.pass;
            }
            if (output.format == "csv")
                for (auto& row : doc) row.erase("warnings");
            output.emit(doc);
            return all_pass ? 0 : kExitViolation;
        }
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
