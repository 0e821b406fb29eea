#include "threeterm/pairing.hpp"

#include <algorithm>
#include <set>

#include "threeterm/errors.hpp"

namespace threeterm {

std::string_view to_string(RegionKind kind) {
    switch (kind) {
        case RegionKind::A: return "A";
        case RegionKind::B: return "B";
        case RegionKind::C: return "C";
        case RegionKind::LeftBoundary: return "LEFT_BOUNDARY";
        case RegionKind::RightBoundary: return "RIGHT_BOUNDARY";
    }
    return "?";
}

namespace {

void require_hypotheses(const RootSequence& seq) {
    if (!is_admissible(seq).admissible) throw HypothesisViolation("pairing requires an admissible chain");
    if (!is_tail_stable(seq)) throw HypothesisViolation("pairing requires a tail-stable chain");
}

std::vector<int> sources_at(const RootSequence& seq, int r) {
    std::vector<int> out;
    for (std::size_t j = 1; j <= seq.size(); ++j)
        if (seq.at(j) == r) out.push_back(static_cast<int>(j));
    return out;
}

// Shape of the stretch of path after `source`, up to and excluding `stop`.
RegionKind shape_after(const RootSequence& seq, int source, int stop, int r) {
    if (seq.at(source + 1) > r) return RegionKind::A;
    for (int j = source + 1; j < stop; ++j)
        if (seq.at(j) > r) return RegionKind::C;
    return RegionKind::B;
}

}  // namespace

std::vector<Region> classify_regions(const RootSequence& seq, int r) {
    require_hypotheses(seq);
    std::vector<Region> regions;
    auto src = sources_at(seq, r);
    if (src.empty()) return regions;

    const int n = static_cast<int>(seq.size());
    if (src.front() > 1) regions.push_back({RegionKind::LeftBoundary, 1, src.front() - 1});
    for (std::size_t i = 0; i + 1 < src.size(); ++i)
        regions.push_back({shape_after(seq, src[i], src[i + 1], r), src[i] + 1, src[i + 1] - 1});
    if (src.back() < n) regions.push_back({RegionKind::RightBoundary, src.back() + 1, n});
    return regions;
}

MatchingOutcome build_matching(const RootSequence& seq, int r) {
    require_hypotheses(seq);
    MatchingCertificate cert{r, {}};
    auto src = sources_at(seq, r);
    const int n = static_cast<int>(seq.size());

    auto fail = [&](int source, std::string reason) -> MatchingOutcome {
        return MatchingFailure{std::vector<int>(seq.roots().begin(), seq.roots().end()), r, source,
                               std::move(reason), cert};
    };

    for (std::size_t i = 0; i + 1 < src.size(); ++i) {
        const int s = src[i];
        const int next = src[i + 1];
        RegionKind kind = shape_after(seq, s, next, r);
        if (kind == RegionKind::A) {
            // The path re-meets r from above, and drops are exactly 2.
            if (seq.at(next - 1) != r + 2) return fail(s, "A region does not return through r + 2");
            cert.pairs.push_back({s, next - 1, kind});
        } else {
            if (seq.at(s + 1) != r - 2) return fail(s, "drop after source is not to r - 2");
            cert.pairs.push_back({s, s + 1, kind});
        }
    }

    if (!src.empty()) {
        const int last = src.back();
        if (last < n && seq.at(last + 1) < r) {
            if (seq.at(last + 1) != r - 2) return fail(last, "trailing drop is not to r - 2");
            cert.pairs.push_back({last, last + 1, shape_after(seq, last, n + 1, r)});
        } else {
            const int lead = src.front() - 1;
            if (lead < 1 || seq.at(lead) != r + 2)
                return fail(last, "no trailing drop and no r + 2 vertex before the leftmost source");
            cert.pairs.push_back({last, lead, RegionKind::LeftBoundary});
        }
    }
    return cert;
}

CertificateCheck verify_certificate(const RootSequence& seq, const MatchingCertificate& cert) {
    CertificateCheck check;
    auto flag = [&check](const std::string& reason) {
        check.valid = false;
        if (std::find(check.reasons.begin(), check.reasons.end(), reason) == check.reasons.end())
            check.reasons.push_back(reason);
    };

    const int n = static_cast<int>(seq.size());
    const int r = cert.height;
    auto roots = seq.roots();

    std::vector<int> expected;
    for (int j = 0; j < n; ++j)
        if (roots[j] == r) expected.push_back(j + 1);

    std::vector<int> claimed;
    for (const auto& p : cert.pairs) claimed.push_back(p.source);
    std::sort(claimed.begin(), claimed.end());
    if (claimed != expected) flag("source set");

    std::set<int> seen_targets;
    for (const auto& p : cert.pairs) {
        if (p.target < 1 || p.target > n || p.source < 1 || p.source > n) {
            flag("index range");
            continue;
        }
        int h = roots[p.target - 1];
        if (h != r - 2 && h != r + 2) flag("target height");
        if (!seen_targets.insert(p.target).second) flag("injectivity");

        // Region ownership: a non-final source owns (source, next source); the
        // final source may reach into either boundary.
        auto it = std::upper_bound(expected.begin(), expected.end(), p.source);
        bool is_source = std::binary_search(expected.begin(), expected.end(), p.source);
        if (!is_source) continue;
        bool inside = false;
        if (it != expected.end()) {
            inside = p.target > p.source && p.target < *it;
        } else {
            inside = p.target > p.source || p.target < expected.front();
        }
        if (!inside) flag("region");
    }
    return check;
}

}  // namespace threeterm
