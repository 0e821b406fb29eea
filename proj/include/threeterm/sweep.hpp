#pragma once

// Exhaustive verification harness: every chain with r_1 = 0 inside the search
// box is classified, and every stable one is checked against the three-term
// inequality, the r_n < r_1 consequence of stability, and a verified pairing
// certificate at each realized height.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "threeterm/chain_higgs.hpp"

namespace threeterm {

struct SweepParams {
    int n_min = 2;
    int n_max = 2;
    int max_rise = 2;
    int root_bound = 0;
    int workers = 1;
    std::size_t witness_limit = 8;
};

struct SweepViolation {
    std::vector<int> roots;
    int height = 0;     // 0 when the violation is not tied to a height
    std::string kind;   // three_term, endpoint_order, matching_failed, certificate_rejected, ...
    std::string detail;

    friend auto operator<=>(const SweepViolation&, const SweepViolation&) = default;
};

struct LengthHistogram {
    std::int64_t generated = 0;
    std::int64_t admissible = 0;
    std::int64_t stable = 0;
    std::int64_t unstable_violating = 0;
};

struct SweepReport {
    SweepParams params;
    EnumerationTally totals;
    std::int64_t certificates_verified = 0;
    std::int64_t unstable_three_term_violations = 0;
    std::vector<std::vector<int>> unstable_witnesses;  // lexicographically first few
    std::vector<SweepViolation> violations;            // canonically sorted
    std::map<int, LengthHistogram> per_length;
    double wall_seconds = 0.0;

    bool pass() const { return violations.empty(); }
};

/// Checks applied to a single stable admissible chain; appends any failure.
/// Returns the number of certificates built and verified.
std::int64_t check_stable_chain(const RootSequence& seq, std::vector<SweepViolation>& violations);

/// Slices the search space by first step; each slice runs on its own worker and
/// the slices are merged in step order, so the result is independent of the
/// worker count.
SweepReport sweep(const SweepParams& params);

/// Worker count from HIGGS_THREETERM_WORKERS, or 1 when unset or invalid.
int default_worker_count();

}  // namespace threeterm
