#include "threeterm/report.hpp"

#include <sstream>

#include "threeterm/errors.hpp"

namespace threeterm {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ComplexRational& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const SideResidue& residue) {
    return Json{{"jump", to_string(residue.jump)}, {"eig", to_json(residue.eigenvalue)}};
}

Json to_json(const ResidueBlockData& block) {
    return Json{{"beta", to_string(block.beta)}, {"u", to_string(block.u)}, {"v", to_string(block.v)}};
}

std::string verdict_string(const StabilityReport& report) {
    switch (report.verdict) {
        case Verdict::Stable: return "stable";
        case Verdict::Destabilized: return "destabilized-at-" + std::to_string(report.at);
        case Verdict::Marginal: return "marginal-at-" + std::to_string(report.at);
    }
    return "unknown";
}

Json to_json(const StabilityReport& report) {
    Json tails = Json::array();
    for (const auto& mu : report.tail_slopes) tails.push_back(to_string(mu));
    return Json{{"total_slope", to_string(report.total_slope)},
                {"tail_slopes", tails},
                {"verdict", verdict_string(report)},
                {"stable", report.stable()}};
}

Json to_json(const MultiplicityProfile& profile) {
    Json out = Json::object();
    for (const auto& [r, m] : profile.counts()) out[std::to_string(r)] = m;
    return out;
}

Json to_json(const ThreeTermResult& result) {
    Json violations = Json::array();
    for (const auto& v : result.violations)
        violations.push_back({{"height", v.height}, {"m", v.count}, {"m_below", v.count_below}, {"m_above", v.count_above}});
    return Json{{"holds", result.holds}, {"violations", violations}};
}

Json to_json(const Region& region) {
    return Json{{"kind", std::string(to_string(region.kind))}, {"first", region.first}, {"last", region.last}};
}

Json to_json(const MatchingCertificate& cert) {
    Json pairs = Json::array();
    for (const auto& p : cert.pairs)
        pairs.push_back({{"source", p.source}, {"target", p.target}, {"label", std::string(to_string(p.label))}});
    return Json{{"height", cert.height}, {"pairs", pairs}};
}

Json to_json(const MatchingFailure& failure) {
    return Json{{"counterexample", true},
                {"roots", failure.roots},
                {"height", failure.height},
                {"source", failure.source},
                {"reason", failure.reason},
                {"partial", to_json(failure.partial)}};
}

Json to_json(const MetricCheck& check) {
    return Json{{"check_name", check.name},
                {"max_residual", check.max_residual},
                {"tolerance", check.tolerance},
                {"pass", check.pass},
                {"warnings", check.warnings}};
}

Json check_report(const RootSequence& seq) {
    auto admissibility = is_admissible(seq);
    return Json{{"roots", std::vector<int>(seq.roots().begin(), seq.roots().end())},
                {"admissible", admissibility.admissible},
                {"admissibility_violations", admissibility.violating_steps},
                {"step_weights", step_weights(seq)},
                {"stability", to_json(tail_slopes(seq))},
                {"multiplicities", to_json(multiplicities(seq))},
                {"three_term", to_json(three_term_holds(multiplicities(seq)))}};
}

Json to_json(const SweepReport& report, bool include_timing) {
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"roots", v.roots}, {"height", v.height}, {"kind", v.kind}, {"detail", v.detail}});
    Json histogram = Json::array();
    for (const auto& [n, h] : report.per_length)
        histogram.push_back({{"n", n},
                             {"generated", h.generated},
                             {"admissible", h.admissible},
                             {"stable", h.stable},
                             {"unstable_violating", h.unstable_violating}});
    Json out{{"parameters",
              {{"n_min", report.params.n_min},
               {"n_max", report.params.n_max},
               {"max_rise", report.params.max_rise},
               {"root_bound", report.params.root_bound}}},
             {"totals",
              {{"generated", report.totals.generated},
               {"admissible", report.totals.admissible},
               {"stable", report.totals.stable},
               {"certificates_verified", report.certificates_verified},
               {"unstable_three_term_violations", report.unstable_three_term_violations}}},
             {"unstable_witnesses", report.unstable_witnesses},
             {"violations", violations},
             {"per_n", histogram},
             {"pass", report.pass()}};
    if (include_timing)
        out["timing"] = {{"wall_seconds", report.wall_seconds}, {"workers", report.params.workers}};
    return out;
}

RootSequence parse_roots(const std::string& text) {
    std::string cleaned;
    for (char c : text) cleaned += (c == '[' || c == ']' || c == ' ') ? ',' : c;
    std::vector<int> roots;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw MalformedInput("not an integer root: '" + item + "'");
        roots.push_back(value);
    }
    return RootSequence(std::move(roots));
}

std::vector<std::vector<Jump>> parse_jumps(const std::string& text) {
    std::vector<std::vector<Jump>> cusps;
    std::stringstream cusp_stream(text);
    std::string cusp_text;
    while (std::getline(cusp_stream, cusp_text, ';')) {
        std::vector<Jump> jumps;
        std::stringstream jump_stream(cusp_text);
        std::string item;
        while (std::getline(jump_stream, item, ',')) {
            if (item.find_first_not_of(' ') == std::string::npos) continue;
            auto colon = item.find(':');
            Jump jump;
            jump.value = parse_rational(item.substr(0, colon));
            if (colon != std::string::npos) {
                std::size_t used = 0;
                std::string dim = item.substr(colon + 1);
                jump.dimension = std::stoi(dim, &used);
                if (used != dim.size()) throw std::invalid_argument("bad graded dimension '" + dim + "'");
            }
            jumps.push_back(jump);
        }
        cusps.push_back(std::move(jumps));
    }
    return cusps;
}

}  // namespace threeterm
