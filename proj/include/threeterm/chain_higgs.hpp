#pragma once

// Chain-type nilpotent Higgs bundles on P(2,3).
//
// A chain is a splitting O(r_1) + ... + O(r_n) with the Higgs field mapping
// O(r_j) into O(r_{j+1}) (x) Omega^1(log cusp) = O(r_{j+1} + 2). The j-th
// component is a scalar modular form of weight w_j = r_{j+1} + 2 - r_j, so the
// chain exists with all components nonzero exactly when each w_j is the weight
// of a nonzero level-one holomorphic form.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <optional>
#include <span>
#include <vector>

#include "threeterm/rational.hpp"

namespace threeterm {

/// Ordered, nonempty list of even roots r_1..r_n. Order encodes the direction of theta.
class RootSequence {
  public:
    /// Throws MalformedInput when empty or when any root is odd.
    explicit RootSequence(std::vector<int> roots);

    std::span<const int> roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }

    /// 1-based access, matching the index convention of reports and certificates.
    int at(std::size_t j) const { return roots_.at(j - 1); }

    int front() const { return roots_.front(); }
    int back() const { return roots_.back(); }

    RootSequence shifted(int c) const;

    friend bool operator==(const RootSequence&, const RootSequence&) = default;
    friend auto operator<=>(const RootSequence&, const RootSequence&) = default;

  private:
    std::vector<int> roots_;
};

/// w_j = r_{j+1} + 2 - r_j for j = 1..n-1.
std::vector<int> step_weights(const RootSequence& seq);

/// True iff level-one holomorphic forms of weight k are not all zero: k >= 0, even, k != 2.
bool weight_has_nonzero_form(int k);

/// dim M_k(SL_2(Z)) for the level-one ring C[E_4, E_6]; zero for negative, odd, or k = 2.
int modular_forms_dimension(int k);

struct AdmissibilityResult {
    bool admissible = true;
    std::vector<int> violating_steps;  // 1-based step indices j
};

AdmissibilityResult is_admissible(const RootSequence& seq);

enum class Verdict { Stable, Destabilized, Marginal };

struct StabilityReport {
    Rational total_slope;
    std::vector<Rational> tail_slopes;  // mu(T_k) for k = 2..n
    Verdict verdict = Verdict::Stable;
    int at = 0;  // first offending k for non-stable verdicts, 0 otherwise

    bool stable() const { return verdict == Verdict::Stable; }
};

/// Slope comparison of the theta-invariant tails T_k = O(r_k) + ... + O(r_n).
/// A strictly larger tail slope wins over an equal one when both occur.
StabilityReport tail_slopes(const RootSequence& seq);

/// Integer-only shortcut for tail_slopes(seq).stable().
bool is_tail_stable(const RootSequence& seq);

class MultiplicityProfile {
  public:
    MultiplicityProfile() = default;
    explicit MultiplicityProfile(std::map<int, int> counts);

    int count(int r) const;
    int total() const;
    const std::map<int, int>& counts() const& { return counts_; }
    // By value on temporaries, so `for (auto& [r, m] : multiplicities(s).counts())` is safe.
    std::map<int, int> counts() && { return std::move(counts_); }

    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

  private:
    std::map<int, int> counts_;
};

MultiplicityProfile multiplicities(const RootSequence& seq);

struct ThreeTermViolation {
    int height;
    int count;        // m_r
    int count_below;  // m_{r-2}
    int count_above;  // m_{r+2}

    friend bool operator==(const ThreeTermViolation&, const ThreeTermViolation&) = default;
};

struct ThreeTermResult {
    bool holds = true;
    std::vector<ThreeTermViolation> violations;
};

/// Checks m_r <= m_{r-2} + m_{r+2} at every height; absent heights count as zero.
ThreeTermResult three_term_holds(const MultiplicityProfile& profile);

/// Coefficients c_{n-1}, ..., c_0 of det(t I - theta) for the chain Higgs field,
/// with theta realized as the subdiagonal matrix whose (j+1, j) entry is the
/// dimension of the weight-w_j forms. Throws HypothesisViolation if inadmissible.
std::vector<Rational> hitchin_invariants(const RootSequence& seq);

struct EnumerationParams {
    int n_min = 2;
    int n_max = 2;
    int max_rise = 2;
    int root_bound = 0;
    bool require_stable = true;

    /// Throws MalformedInput on out-of-range values.
    void validate() const;
};

/// Counters for everything the walk touched, including rejected candidates.
struct EnumerationTally {
    std::int64_t generated = 0;
    std::int64_t admissible = 0;
    std::int64_t stable = 0;
};

/// Candidate first steps, in the order the walk visits them. Each one is an
/// independent slice of the search space.
std::vector<int> candidate_steps(const EnumerationParams& params);

/// Walks every even-step lattice path with r_1 = 0 and |r_j| <= root_bound whose
/// length is in [n_min, n_max], in lexicographic order. Candidates are
/// filtered by is_admissible and, when requested, by tail stability before they
/// reach the visitor. With first_step set, only that slice is walked.
EnumerationTally enumerate_chains(const EnumerationParams& params,
                                  const std::function<void(const RootSequence&)>& visit,
                                  std::optional<int> first_step = std::nullopt);

std::vector<RootSequence> collect_chains(const EnumerationParams& params);

}  // namespace threeterm
