#pragma once

// Exact degree and residue calculus for filtered representations, filtered
// bundles and the residue translation between the Betti, de Rham and Dolbeault
// sides. Everything here is rational; eigenvalues e^{2 pi i z} are carried as
// the exponent z.

#include <vector>

#include "threeterm/rational.hpp"

namespace threeterm {

struct Jump {
    Rational value;
    int dimension = 1;  // dim Gr_value

    friend bool operator==(const Jump&, const Jump&) = default;
};

enum class FiltrationSide {
    Representation,  // jumps beta in Q, unbounded
    Bundle,          // jumps alpha in [0, 1)
};

/// Jumps per cusp. Graded dimensions at each cusp add up to rank.
class FilteredJumpData {
  public:
    /// Throws MalformedInput on nonpositive rank or dimension, a per-cusp
    /// dimension sum different from rank, or (bundle side) a jump outside [0, 1).
    FilteredJumpData(FiltrationSide side, int rank, std::vector<std::vector<Jump>> cusps);

    static FilteredJumpData representation(int rank, std::vector<std::vector<Jump>> cusps) {
        return {FiltrationSide::Representation, rank, std::move(cusps)};
    }
    static FilteredJumpData bundle(int rank, std::vector<std::vector<Jump>> cusps) {
        return {FiltrationSide::Bundle, rank, std::move(cusps)};
    }

    FiltrationSide side() const { return side_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<Jump>>& cusps() const { return cusps_; }

    /// Sum over cusps and jumps of value * dimension.
    Rational weighted_jump_sum() const;

  private:
    FiltrationSide side_;
    int rank_;
    std::vector<std::vector<Jump>> cusps_;
};

/// deg of a filtered representation: sum of beta * dim Gr_beta.
/// Throws MalformedInput for bundle-side data.
Rational filtered_degree_rep(const FilteredJumpData& data);

/// deg(E-bar) is an input: the normalization of deg O(k) is left to the caller.
struct FilteredBundleData {
    Rational base_degree;
    FilteredJumpData jumps;

    int rank() const { return jumps.rank(); }
};

/// base_degree + sum of alpha * dim Gr_alpha. Throws MalformedInput for representation-side jumps.
Rational filtered_degree_bundle(const FilteredBundleData& data);
Rational slope_bundle(const FilteredBundleData& data);

// Filtered characters (chi^a, b) of PSL_2(Z), with chi(T) = e^{2 pi i / 6}.
// All three throw MalformedInput unless 0 <= a <= 5.

/// Jump of the associated filtered bundle in [0, 1): {b - a/6}.
Rational rank1_jump(int a, const Rational& b);

struct Rank1Degrees {
    Rational unfiltered;  // deg of the zeroth extension: b - {b - a/6}
    Rational filtered;    // b
};

Rank1Degrees rank1_degrees(int a, const Rational& b);

/// Residue at the cusp is e^{2 pi i a/6}; returns a/6.
Rational rank1_residue_angle(int a);

/// x + y i with rational parts.
struct ComplexRational {
    Rational re;
    Rational im;

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

/// One Jordan block on the representation side: jump beta and eigenvalue
/// e^{2 pi i (u + v i)} with the branch fixed by 0 <= u < 1.
struct ResidueBlockData {
    Rational beta;
    Rational u;
    Rational v;

    /// Throws BranchError unless 0 <= u < 1.
    void validate() const;

    friend bool operator==(const ResidueBlockData&, const ResidueBlockData&) = default;
};

struct SideResidue {
    Rational jump;
    ComplexRational eigenvalue;

    friend bool operator==(const SideResidue&, const SideResidue&) = default;
};

/// Connection side: jump beta + u, eigenvalue -(u + v i).
SideResidue residue_rep_to_connection(const ResidueBlockData& block);

/// Higgs side: jump -u, eigenvalue -(beta + v i)/2.
SideResidue residue_rep_to_higgs(const ResidueBlockData& block);

/// Inverses of the two maps above. Throw BranchError when the recovered u
/// falls outside [0, 1).
ResidueBlockData residue_connection_to_rep(const SideResidue& connection);
ResidueBlockData residue_higgs_to_rep(const SideResidue& higgs);

}  // namespace threeterm
