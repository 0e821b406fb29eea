#include <map>
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "threeterm/chain_higgs.hpp"
#include "threeterm/errors.hpp"

using namespace threeterm;

namespace {

RootSequence seq(std::vector<int> r) { return RootSequence(std::move(r)); }

// Random even sequence; steps drawn from a wide range so that both admissible
// and inadmissible chains show up.
RootSequence random_sequence(std::mt19937& rng, int max_len, bool admissible_only) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> start(-6, 6);
    std::uniform_int_distribution<int> any_step(-3, 4);
    std::uniform_int_distribution<int> good_step(0, 4);
    std::vector<int> r{2 * start(rng)};
    int n = len(rng);
    while (static_cast<int>(r.size()) < n) {
        int step = admissible_only ? (good_step(rng) == 0 ? -2 : 2 * good_step(rng)) : 2 * any_step(rng);
        r.push_back(r.back() + step);
    }
    return RootSequence(r);
}

// Oracle: counts straight from the definition over every integer in range.
bool three_term_oracle(const RootSequence& s) {
    auto r = s.roots();
    auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    auto m = [&](int h) { return static_cast<int>(std::count(r.begin(), r.end(), h)); };
    for (int h = *lo - 4; h <= *hi + 4; ++h)
        if (m(h) > m(h - 2) + m(h + 2)) return false;
    return true;
}

// Oracle: every tail compared by cross-multiplication, no shared suffix sums.
bool stability_oracle(const RootSequence& s) {
    auto r = s.roots();
    const long n = static_cast<long>(r.size());
    long total = 0;
    for (int x : r) total += x;
    for (long k = 1; k < n; ++k) {
        long tail = 0;
        for (long j = k; j < n; ++j) tail += r[j];
        if (!(tail * n < total * (n - k))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("admissibility follows the three step rules") {
    auto ok = is_admissible(seq({2, 0, -2}));
    CHECK(ok.admissible);
    CHECK(ok.violating_steps.empty());
    CHECK(step_weights(seq({2, 0, -2})) == std::vector<int>{0, 0});

    auto flat = is_admissible(seq({0, 0}));
    CHECK_FALSE(flat.admissible);
    CHECK(flat.violating_steps == std::vector<int>{1});

    auto steep = is_admissible(seq({0, -4}));
    CHECK_FALSE(steep.admissible);
    CHECK(steep.violating_steps == std::vector<int>{1});

    auto several = is_admissible(seq({0, 0, -4, 0, -2}));
    CHECK(several.violating_steps == std::vector<int>{1, 2});

    CHECK(is_admissible(seq({6})).admissible);
}

TEST_CASE("malformed root sequences are rejected") {
    CHECK_THROWS_AS(seq({}), MalformedInput);
    CHECK_THROWS_AS(seq({0, 1}), MalformedInput);
    CHECK_THROWS_AS(seq({-3}), MalformedInput);
}

TEST_CASE("weight_has_nonzero_form matches level-one modular forms") {
    CHECK(weight_has_nonzero_form(0));
    CHECK_FALSE(weight_has_nonzero_form(2));
    CHECK_FALSE(weight_has_nonzero_form(-4));
    CHECK_FALSE(weight_has_nonzero_form(3));
    for (int k : {4, 6, 8, 10, 12, 14, 24}) CHECK(weight_has_nonzero_form(k));

    // dim M_k: 1 for k = 0, 4, 6, 8, 10, 14; 2 for k = 12, 16, ...; 0 for k = 2.
    const std::vector<std::pair<int, int>> dims{{0, 1}, {2, 0}, {4, 1}, {6, 1},  {8, 1},  {10, 1},
                                                {12, 2}, {14, 1}, {16, 2}, {24, 3}, {26, 2}, {-2, 0}};
    for (auto [k, d] : dims) CHECK(modular_forms_dimension(k) == d);
    for (int k = -10; k <= 60; ++k) CHECK((modular_forms_dimension(k) > 0) == weight_has_nonzero_form(k));
}

TEST_CASE("tail slopes and verdicts") {
    auto a = tail_slopes(seq({2, 0, -2}));
    CHECK(a.total_slope == 0);
    CHECK(a.tail_slopes == std::vector<Rational>{-1, -2});
    CHECK(a.verdict == Verdict::Stable);

    auto b = tail_slopes(seq({0, 4}));
    CHECK(b.total_slope == 2);
    CHECK(b.tail_slopes == std::vector<Rational>{4});
    CHECK(b.verdict == Verdict::Destabilized);
    CHECK(b.at == 2);

    auto c = tail_slopes(seq({-8}));
    CHECK(c.total_slope == -8);
    CHECK(c.tail_slopes.empty());
    CHECK(c.stable());

    // Tails: 4/5, 1, 0, -1, -2 against total 1.
    auto d = tail_slopes(seq({2, 0, 4, 2, 0, -2}));
    CHECK(d.verdict == Verdict::Marginal);
    CHECK(d.at == 3);

    // Equal tail at k = 2, larger at k = 3: the strict failure is reported.
    auto e = tail_slopes(seq({0, -2, 2}));
    CHECK(e.verdict == Verdict::Destabilized);
    CHECK(e.at == 3);

    auto f = tail_slopes(seq({4, 2, 0, 4, 2, 0, -2}));
    CHECK(f.total_slope == Rational(10, 7));
    CHECK(f.stable());
}

TEST_CASE("multiplicities count each root") {
    auto p = multiplicities(seq({4, 2, 0, 4, 2, 0, -2}));
    CHECK(p.counts() == std::map<int, int>{{4, 2}, {2, 2}, {0, 2}, {-2, 1}});
    CHECK(p.total() == 7);
    CHECK(multiplicities(seq({0})).counts() == std::map<int, int>{{0, 1}});
    CHECK(multiplicities(seq({2, 0, -2})).counts() == std::map<int, int>{{2, 1}, {0, 1}, {-2, 1}});
    CHECK(p.count(100) == 0);
}

TEST_CASE("three-term inequality on profiles") {
    CHECK(three_term_holds(MultiplicityProfile(std::map<int, int>{{4, 2}, {2, 2}, {0, 2}, {-2, 1}})).holds);

    auto bad = three_term_holds(MultiplicityProfile(std::map<int, int>{{0, 1}, {4, 1}}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.violations.size() == 2);
    CHECK(bad.violations[0] == ThreeTermViolation{0, 1, 0, 0});
    CHECK(bad.violations[1] == ThreeTermViolation{4, 1, 0, 0});

    CHECK(three_term_holds(MultiplicityProfile{}).holds);
    CHECK_THROWS_AS(MultiplicityProfile(std::map<int, int>{{0, -1}}), MalformedInput);
}

TEST_CASE("Hitchin invariants of chain Higgs fields vanish") {
    CHECK(hitchin_invariants(seq({2, 0, -2})) == std::vector<Rational>(3, 0));
    CHECK(hitchin_invariants(seq({0})) == std::vector<Rational>(1, 0));
    CHECK(hitchin_invariants(seq({4, 2, 0, 4, 2, 0, -2})) == std::vector<Rational>(7, 0));
    CHECK(hitchin_invariants(seq({0, 24, 22})) == std::vector<Rational>(3, 0));
    CHECK_THROWS_AS(hitchin_invariants(seq({0, 0})), HypothesisViolation);
}

TEST_CASE("enumeration examples") {
    EnumerationParams two{2, 2, 4, 4, true};
    CHECK(collect_chains(two) == std::vector<RootSequence>{seq({0, -2})});

    EnumerationParams upto_three{2, 3, 4, 4, true};
    auto chains = collect_chains(upto_three);
    CHECK(std::find(chains.begin(), chains.end(), seq({0, -2, -4})) != chains.end());
    CHECK(std::find(chains.begin(), chains.end(), seq({0, 4})) == chains.end());

    EnumerationParams flat{2, 3, 4, 0, true};
    CHECK(collect_chains(flat).empty());

    EnumerationParams all{2, 2, 4, 4, false};
    CHECK(collect_chains(all) == std::vector<RootSequence>{seq({0, -2}), seq({0, 2}), seq({0, 4})});
}

TEST_CASE("enumeration parameters are validated") {
    CHECK_THROWS_AS(collect_chains({1, 3, 4, 4, true}), MalformedInput);
    CHECK_THROWS_AS(collect_chains({3, 2, 4, 4, true}), MalformedInput);
    CHECK_THROWS_AS(collect_chains({2, 3, 3, 4, true}), MalformedInput);
    CHECK_THROWS_AS(collect_chains({2, 3, 0, 4, true}), MalformedInput);
    CHECK_THROWS_AS(collect_chains({2, 3, 4, -1, true}), MalformedInput);
}

TEST_CASE("enumeration matches a brute-force product oracle") {
    for (bool stable_only : {true, false}) {
        EnumerationParams p{2, 5, 6, 6, stable_only};
        auto produced = collect_chains(p);

        std::vector<RootSequence> expected;
        std::vector<int> values;
        for (int v = -p.root_bound; v <= p.root_bound; v += 2) values.push_back(v);
        for (int n = p.n_min; n <= p.n_max; ++n) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(n - 1), 0);
            while (true) {
                std::vector<int> r{0};
                for (auto i : idx) r.push_back(values[i]);
                bool steps_ok = true;
                for (std::size_t j = 0; j + 1 < r.size(); ++j) {
                    int d = r[j + 1] - r[j];
                    steps_ok = steps_ok && (d == -2 || (d >= 2 && d <= p.max_rise));
                }
                RootSequence s(r);
                if (steps_ok && (!stable_only || stability_oracle(s))) expected.push_back(s);
                std::size_t k = 0;
                while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
                if (k == idx.size()) break;
            }
        }
        std::sort(expected.begin(), expected.end());
        CHECK(std::is_sorted(produced.begin(), produced.end()));
        CHECK(produced == expected);
    }
}

TEST_CASE("slices by first step partition the enumeration") {
    EnumerationParams p{2, 4, 6, 6, false};
    std::vector<RootSequence> whole = collect_chains(p);
    std::vector<RootSequence> sliced;
    EnumerationTally sum;
    for (int step : candidate_steps(p)) {
        auto t = enumerate_chains(p, [&](const RootSequence& s) { sliced.push_back(s); }, step);
        sum.generated += t.generated;
        sum.admissible += t.admissible;
        sum.stable += t.stable;
    }
    auto total = enumerate_chains(p, [](const RootSequence&) {});
    CHECK(sliced == whole);
    CHECK(sum.generated == total.generated);
    CHECK(sum.admissible == total.admissible);
    CHECK(sum.stable == total.stable);
    CHECK(total.stable <= total.admissible);
    CHECK(total.admissible <= total.generated);
    CHECK_THROWS_AS(enumerate_chains(p, [](const RootSequence&) {}, 3), MalformedInput);
}

TEST_CASE("property: shift invariance") {
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<int> shift(-8, 8);
    for (int trial = 0; trial < 2000; ++trial) {
        auto s = random_sequence(rng, 9, trial % 2 == 0);
        int c = 2 * shift(rng);
        auto t = s.shifted(c);
        CHECK(is_admissible(s).violating_steps == is_admissible(t).violating_steps);
        auto ss = tail_slopes(s);
        auto st = tail_slopes(t);
        CHECK(ss.verdict == st.verdict);
        CHECK(ss.at == st.at);
        auto ts = three_term_holds(multiplicities(s));
        auto tt = three_term_holds(multiplicities(t));
        CHECK(ts.holds == tt.holds);
        REQUIRE(ts.violations.size() == tt.violations.size());
        for (std::size_t i = 0; i < ts.violations.size(); ++i)
            CHECK(ts.violations[i].height + c == tt.violations[i].height);
    }
}

TEST_CASE("property: predicates agree with their oracles") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        auto s = random_sequence(rng, 10, trial % 3 == 0);
        CHECK(three_term_holds(multiplicities(s)).holds == three_term_oracle(s));
        CHECK(is_tail_stable(s) == stability_oracle(s));
        CHECK(tail_slopes(s).stable() == stability_oracle(s));
        CHECK(multiplicities(s).total() == static_cast<int>(s.size()));

        bool every_weight_ok = true;
        for (int w : step_weights(s)) every_weight_ok = every_weight_ok && weight_has_nonzero_form(w);
        CHECK(is_admissible(s).admissible == every_weight_ok);

        if (is_admissible(s).admissible) {
            auto c = hitchin_invariants(s);
            CHECK(c.size() == s.size());
            CHECK(std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; }));
        }
    }
}

TEST_CASE("property: stable admissible chains satisfy the theorem on a small box") {
    EnumerationParams p{2, 6, 8, 8, true};
    std::size_t count = 0;
    enumerate_chains(p, [&](const RootSequence& s) {
        ++count;
        CHECK(s.back() < s.front());
        CHECK(three_term_holds(multiplicities(s)).holds);
    });
    CHECK(count >= 10);
}

TEST_CASE("the rank-one chain is stable but fails the literal inequality") {
    auto s = seq({0});
    CHECK(tail_slopes(s).stable());
    CHECK_FALSE(three_term_holds(multiplicities(s)).holds);
}
