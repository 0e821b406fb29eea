#include "threeterm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <variant>

#include "threeterm/errors.hpp"
#include "threeterm/pairing.hpp"

namespace threeterm {

namespace {

std::vector<int> to_vector(const RootSequence& seq) { return {seq.roots().begin(), seq.roots().end()}; }

struct SliceResult {
    EnumerationTally tally;
    std::int64_t certificates_verified = 0;
    std::int64_t unstable_three_term_violations = 0;
    std::vector<std::vector<int>> witnesses;
    std::vector<SweepViolation> violations;
    std::map<int, LengthHistogram> per_length;
};

SliceResult run_slice(const SweepParams& params, int first_step) {
    EnumerationParams enumeration{params.n_min, params.n_max, params.max_rise, params.root_bound, false};
    SliceResult slice;
    auto visit = [&](const RootSequence& seq) {
        auto& bucket = slice.per_length[static_cast<int>(seq.size())];
        ++bucket.admissible;
        if (is_tail_stable(seq)) {
            ++bucket.stable;
            slice.certificates_verified += check_stable_chain(seq, slice.violations);
            return;
        }
        if (!three_term_holds(multiplicities(seq)).holds) {
            ++bucket.unstable_violating;
            ++slice.unstable_three_term_violations;
            if (slice.witnesses.size() < params.witness_limit) slice.witnesses.push_back(to_vector(seq));
        }
    };
    slice.tally = enumerate_chains(enumeration, visit, first_step);
    return slice;
}

// The walker only reports totals; per-length generated counts come from a
// second cheap pass over the raw lattice paths of this slice.
void count_generated(const SweepParams& params, int first_step, std::map<int, LengthHistogram>& per_length) {
    EnumerationParams enumeration{params.n_min, params.n_max, params.max_rise, params.root_bound, false};
    auto steps = candidate_steps(enumeration);
    std::vector<int> path{0};
    auto walk = [&](auto&& self, int step) -> void {
        int next = path.back() + step;
        if (next < -params.root_bound || next > params.root_bound) return;
        path.push_back(next);
        int len = static_cast<int>(path.size());
        if (len >= params.n_min) ++per_length[len].generated;
        if (len < params.n_max)
            for (int d : steps) self(self, d);
        path.pop_back();
    };
    walk(walk, first_step);
}

}  // namespace

std::int64_t check_stable_chain(const RootSequence& seq, std::vector<SweepViolation>& violations) {
    auto roots = to_vector(seq);
    auto profile = multiplicities(seq);

    auto three_term = three_term_holds(profile);
    for (const auto& v : three_term.violations)
        violations.push_back({roots, v.height, "three_term",
                              "m_r=" + std::to_string(v.count) + " > m_{r-2}+m_{r+2}=" +
                                  std::to_string(v.count_below) + "+" + std::to_string(v.count_above)});

    if (seq.size() >= 2 && !(seq.back() < seq.front()))
        violations.push_back({roots, 0, "endpoint_order", "stable chain with r_n >= r_1"});

    std::int64_t verified = 0;
    for (const auto& [r, m] : profile.counts()) {
        auto outcome = build_matching(seq, r);
        if (auto* failure = std::get_if<MatchingFailure>(&outcome)) {
            violations.push_back({roots, r, "matching_failed", failure->reason});
            continue;
        }
        const auto& cert = std::get<MatchingCertificate>(outcome);
        auto check = verify_certificate(seq, cert);
        if (!check.valid) {
            std::string reasons;
            for (const auto& reason : check.reasons) reasons += (reasons.empty() ? "" : ",") + reason;
            violations.push_back({roots, r, "certificate_rejected", reasons});
            continue;
        }
        if (static_cast<int>(cert.pairs.size()) != m) {
            violations.push_back({roots, r, "certificate_cardinality",
                                  std::to_string(cert.pairs.size()) + " pairs for m_r=" + std::to_string(m)});
            continue;
        }
        ++verified;
    }
    return verified;
}

SweepReport sweep(const SweepParams& params) {
    EnumerationParams enumeration{params.n_min, params.n_max, params.max_rise, params.root_bound, false};
    enumeration.validate();
    if (params.workers < 1) throw MalformedInput("workers must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    const auto steps = candidate_steps(enumeration);
    std::vector<SliceResult> slices(steps.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < steps.size(); i = next++) {
            slices[i] = run_slice(params, steps[i]);
            count_generated(params, steps[i], slices[i].per_length);
        }
    };
    const auto thread_count = std::min<std::size_t>(static_cast<std::size_t>(params.workers), steps.size());
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < thread_count; ++t) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();

    SweepReport report;
    report.params = params;
    for (auto& slice : slices) {
        report.totals.generated += slice.tally.generated;
        report.totals.admissible += slice.tally.admissible;
        report.totals.stable += slice.tally.stable;
        report.certificates_verified += slice.certificates_verified;
        report.unstable_three_term_violations += slice.unstable_three_term_violations;
        for (auto& w : slice.witnesses) report.unstable_witnesses.push_back(std::move(w));
        for (auto& v : slice.violations) report.violations.push_back(std::move(v));
        for (const auto& [n, h] : slice.per_length) {
            auto& total = report.per_length[n];
            total.generated += h.generated;
            total.admissible += h.admissible;
            total.stable += h.stable;
            total.unstable_violating += h.unstable_violating;
        }
    }
    std::sort(report.unstable_witnesses.begin(), report.unstable_witnesses.end());
    if (report.unstable_witnesses.size() > params.witness_limit) report.unstable_witnesses.resize(params.witness_limit);
    std::sort(report.violations.begin(), report.violations.end());

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

int default_worker_count() {
    const char* env = std::getenv("HIGGS_THREETERM_WORKERS");
    if (env == nullptr) return 1;
    try {
        int n = std::stoi(env);
        return n >= 1 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace threeterm
