#pragma once

// Injective matchings that witness m_r <= m_{r-2} + m_{r+2} for a stable
// admissible chain.
//
// Picture the chain as the graph through the lattice points (j, r_j). The
// vertices at height r ("sources") cut the graph into regions; each source is
// paired with a vertex at height r - 2 or r + 2 that lies in the region to its
// right, or, for the rightmost source, in the region left of the leftmost one.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "threeterm/chain_higgs.hpp"

namespace threeterm {

enum class RegionKind {
    A,              // starts with a rise, stays strictly above r
    B,              // starts with a drop, stays strictly below r
    C,              // starts with a drop, jumps over r during a rise of 4 or more
    LeftBoundary,   // vertices before the leftmost source
    RightBoundary,  // vertices after the rightmost source
};

std::string_view to_string(RegionKind kind);

/// Vertices first..last (1-based, inclusive) strictly between sources, or
/// beyond the outermost ones for boundary regions. Boundary regions are only
/// listed when nonempty.
struct Region {
    RegionKind kind;
    int first;
    int last;

    friend bool operator==(const Region&, const Region&) = default;
};

/// Regions cut out by the height-r vertices, left to right. Returns an empty
/// list when no vertex sits at height r (including off-parity r).
/// Throws HypothesisViolation unless seq is admissible and tail-stable.
std::vector<Region> classify_regions(const RootSequence& seq, int r);

struct MatchedPair {
    int source;  // 1-based, r_source = r
    int target;  // 1-based, r_target = r - 2 or r + 2
    RegionKind label;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct MatchingCertificate {
    int height = 0;
    std::vector<MatchedPair> pairs;

    friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

/// Produced when some source has no legal partner. For stable admissible input
/// this means the construction (or the theorem) is wrong.
struct MatchingFailure {
    std::vector<int> roots;
    int height = 0;
    int source = 0;
    std::string reason;
    MatchingCertificate partial;
};

using MatchingOutcome = std::variant<MatchingCertificate, MatchingFailure>;

/// Builds the pairing at height r. Interior regions: B and C pair right with the
/// r - 2 vertex that follows the source; A pairs with the r + 2 vertex just
/// before the next source. The rightmost source pairs right if the path drops
/// after it, otherwise with the r + 2 vertex preceding the leftmost source.
/// Throws HypothesisViolation unless seq is admissible and tail-stable.
MatchingOutcome build_matching(const RootSequence& seq, int r);

struct CertificateCheck {
    bool valid = true;
    std::vector<std::string> reasons;
};

/// Re-derives everything from seq and checks: the sources are exactly the
/// height-r vertices, targets are in range, at height r +- 2, pairwise
/// distinct, and each target lies in its source's own region (the region up
/// to the next source, or either boundary region for the rightmost source).
CertificateCheck verify_certificate(const RootSequence& seq, const MatchingCertificate& cert);

}  // namespace threeterm
