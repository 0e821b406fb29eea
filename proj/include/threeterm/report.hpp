#pragma once

// JSON encodings shared by the CLI and the Python module. Rationals are
// lowest-terms "p/q" strings; complex rationals are {"re": "p/q", "im": "p/q"}.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "threeterm/chain_higgs.hpp"
#include "threeterm/filtered_calc.hpp"
#include "threeterm/metric_checks.hpp"
#include "threeterm/pairing.hpp"
#include "threeterm/sweep.hpp"

namespace threeterm {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const ComplexRational& z);
Json to_json(const SideResidue& residue);
Json to_json(const ResidueBlockData& block);
Json to_json(const StabilityReport& report);
Json to_json(const MultiplicityProfile& profile);
Json to_json(const ThreeTermResult& result);
Json to_json(const Region& region);
Json to_json(const MatchingCertificate& cert);
Json to_json(const MatchingFailure& failure);
Json to_json(const MetricCheck& check);

/// {roots, admissible, admissibility_violations, step_weights, stability,
///  multiplicities, three_term}
Json check_report(const RootSequence& seq);

/// The "timing" object is the only part that varies between identical runs.
Json to_json(const SweepReport& report, bool include_timing = true);

std::string verdict_string(const StabilityReport& report);

/// Parses "4,2,0,-2" (brackets and spaces tolerated). Throws MalformedInput.
RootSequence parse_roots(const std::string& text);

/// Parses jumps "1/3:1,2/3:1;5/6:2" (cusps separated by ';', value:dimension,
/// dimension defaulting to 1). Throws std::invalid_argument.
std::vector<std::vector<Jump>> parse_jumps(const std::string& text);

}  // namespace threeterm
