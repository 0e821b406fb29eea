#include "threeterm/chain_higgs.hpp"

#include <string>

#include "threeterm/errors.hpp"

namespace threeterm {

RootSequence::RootSequence(std::vector<int> roots) : roots_(std::move(roots)) {
    if (roots_.empty()) throw MalformedInput("root sequence is empty");
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (roots_[i] % 2 != 0)
            throw MalformedInput("root r_" + std::to_string(i + 1) + " = " +
                                 std::to_string(roots_[i]) + " is odd");
    }
}

RootSequence RootSequence::shifted(int c) const {
    std::vector<int> out(roots_);
    for (int& r : out) r += c;
    return RootSequence(std::move(out));
}

std::vector<int> step_weights(const RootSequence& seq) {
    auto r = seq.roots();
    std::vector<int> w;
    w.reserve(r.size() - 1);
    for (std::size_t j = 0; j + 1 < r.size(); ++j) w.push_back(r[j + 1] + 2 - r[j]);
    return w;
}

bool weight_has_nonzero_form(int k) { return k >= 0 && k % 2 == 0 && k != 2; }

int modular_forms_dimension(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    if (k % 12 == 2) return k / 12;
    return k / 12 + 1;
}

AdmissibilityResult is_admissible(const RootSequence& seq) {
    AdmissibilityResult result;
    auto r = seq.roots();
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
        int w = r[j + 1] + 2 - r[j];
        bool ok = w >= 0 && w % 2 == 0 && w != 2;
        if (!ok) {
            result.admissible = false;
            result.violating_steps.push_back(static_cast<int>(j + 1));
        }
    }
    return result;
}

StabilityReport tail_slopes(const RootSequence& seq) {
    auto r = seq.roots();
    const auto n = static_cast<std::int64_t>(r.size());
    std::int64_t total = 0;
    for (int x : r) total += x;

    StabilityReport report;
    report.total_slope = Rational(total, n);

    // Suffix sums give each tail in one pass from the right.
    std::vector<std::int64_t> suffix(r.size() + 1, 0);
    for (std::int64_t k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + r[k];

    int first_over = 0;
    int first_equal = 0;
    for (std::int64_t k = 1; k < n; ++k) {
        Rational mu(suffix[k], n - k);
        report.tail_slopes.push_back(mu);
        int k1 = static_cast<int>(k + 1);
        if (mu > report.total_slope && first_over == 0) first_over = k1;
        if (mu == report.total_slope && first_equal == 0) first_equal = k1;
    }
    if (first_over != 0) {
        report.verdict = Verdict::Destabilized;
        report.at = first_over;
    } else if (first_equal != 0) {
        report.verdict = Verdict::Marginal;
        report.at = first_equal;
    }
    return report;
}

bool is_tail_stable(const RootSequence& seq) {
    auto r = seq.roots();
    const auto n = static_cast<std::int64_t>(r.size());
    std::int64_t total = 0;
    for (int x : r) total += x;
    std::int64_t tail = 0;
    for (std::int64_t k = n - 1; k >= 1; --k) {
        tail += r[k];
        // tail / (n - k) < total / n
        if (tail * n >= total * (n - k)) return false;
    }
    return true;
}

MultiplicityProfile::MultiplicityProfile(std::map<int, int> counts) : counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->second < 0) throw MalformedInput("negative multiplicity at height " + std::to_string(it->first));
        it = it->second == 0 ? counts_.erase(it) : std::next(it);
    }
}

int MultiplicityProfile::count(int r) const {
    auto it = counts_.find(r);
    return it == counts_.end() ? 0 : it->second;
}

int MultiplicityProfile::total() const {
    int sum = 0;
    for (const auto& [r, m] : counts_) sum += m;
    return sum;
}

MultiplicityProfile multiplicities(const RootSequence& seq) {
    std::map<int, int> counts;
    for (int r : seq.roots()) ++counts[r];
    return MultiplicityProfile(std::move(counts));
}

ThreeTermResult three_term_holds(const MultiplicityProfile& profile) {
    // Only heights with m_r > 0 can fail.
    ThreeTermResult result;
    for (const auto& [r, m] : profile.counts()) {
        int below = profile.count(r - 2);
        int above = profile.count(r + 2);
        if (m > below + above) {
            result.holds = false;
            result.violations.push_back({r, m, below, above});
        }
    }
    return result;
}

std::vector<Rational> hitchin_invariants(const RootSequence& seq) {
    if (!is_admissible(seq).admissible)
        throw HypothesisViolation("hitchin_invariants requires an admissible chain");

    const std::size_t n = seq.size();
    using Matrix = std::vector<std::vector<Rational>>;
    Matrix theta(n, std::vector<Rational>(n, Rational(0)));
    auto w = step_weights(seq);
    for (std::size_t j = 0; j + 1 < n; ++j) theta[j + 1][j] = Rational(modular_forms_dimension(w[j]));

    auto multiply = [n](const Matrix& a, const Matrix& b) {
        Matrix c(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };

    // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Rational> coeffs;
    coeffs.reserve(n);
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix am = multiply(theta, m);
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
        Rational c = -trace / static_cast<std::int64_t>(k);
        coeffs.push_back(c);
        for (std::size_t i = 0; i < n; ++i) am[i][i] += c;
        m = std::move(am);
    }
    return coeffs;
}

void EnumerationParams::validate() const {
    if (n_min < 2 || n_min > n_max)
        throw MalformedInput("need 2 <= n_min <= n_max, got n_min=" + std::to_string(n_min) +
                             " n_max=" + std::to_string(n_max));
    if (max_rise < 2 || max_rise % 2 != 0)
        throw MalformedInput("max_rise must be an even integer >= 2, got " + std::to_string(max_rise));
    if (root_bound < 0) throw MalformedInput("root_bound must be >= 0, got " + std::to_string(root_bound));
}

std::vector<int> candidate_steps(const EnumerationParams& params) {
    // Every even step up to max_rise in either direction; admissibility then
    // keeps the drop of 2 and the rises.
    std::vector<int> steps;
    for (int d = -params.max_rise; d <= params.max_rise; d += 2) steps.push_back(d);
    return steps;
}

namespace {

class ChainWalker {
  public:
    ChainWalker(const EnumerationParams& params, const std::function<void(const RootSequence&)>& visit)
        : params_(params), visit_(visit), steps_(candidate_steps(params)) {
        path_.reserve(static_cast<std::size_t>(params.n_max));
    }

    EnumerationTally run(std::optional<int> first_step) {
        path_.assign(1, 0);
        if (first_step) {
            extend(*first_step);
        } else {
            for (int d : steps_) extend(d);
        }
        return tally_;
    }

  private:
    void extend(int step) {
        int next = path_.back() + step;
        if (next < -params_.root_bound || next > params_.root_bound) return;
        path_.push_back(next);
        descend();
        path_.pop_back();
    }

    void descend() {
        const auto len = static_cast<int>(path_.size());
        if (len >= params_.n_min) emit();
        if (len < params_.n_max)
            for (int d : steps_) extend(d);
    }

    void emit() {
        ++tally_.generated;
        RootSequence seq(path_);
        if (!is_admissible(seq).admissible) return;
        ++tally_.admissible;
        bool stable = is_tail_stable(seq);
        if (stable) ++tally_.stable;
        if (params_.require_stable && !stable) return;
        visit_(seq);
    }

    const EnumerationParams& params_;
    const std::function<void(const RootSequence&)>& visit_;
    std::vector<int> steps_;
    std::vector<int> path_;
    EnumerationTally tally_;
};

}  // namespace

EnumerationTally enumerate_chains(const EnumerationParams& params,
                                  const std::function<void(const RootSequence&)>& visit,
                                  std::optional<int> first_step) {
    params.validate();
    if (first_step && (*first_step % 2 != 0 || *first_step < -params.max_rise || *first_step > params.max_rise))
        throw MalformedInput("first step " + std::to_string(*first_step) + " is not a candidate step");
    return ChainWalker(params, visit).run(first_step);
}

std::vector<RootSequence> collect_chains(const EnumerationParams& params) {
    std::vector<RootSequence> out;
    enumerate_chains(params, [&out](const RootSequence& s) { out.push_back(s); });
    return out;
}

}  // namespace threeterm
