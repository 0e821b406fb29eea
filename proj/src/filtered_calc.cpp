#include "threeterm/filtered_calc.hpp"

#include <string>

#include "threeterm/errors.hpp"

namespace threeterm {

namespace {

bool in_unit_window(const Rational& q) { return q >= 0 && q < 1; }

void require_character_index(int a) {
    if (a < 0 || a > 5) throw MalformedInput("character index a must be in 0..5, got " + std::to_string(a));
}

}  // namespace

FilteredJumpData::FilteredJumpData(FiltrationSide side, int rank, std::vector<std::vector<Jump>> cusps)
    : side_(side), rank_(rank), cusps_(std::move(cusps)) {
    if (rank_ < 1) throw MalformedInput("rank must be positive, got " + std::to_string(rank_));
    for (std::size_t s = 0; s < cusps_.size(); ++s) {
        int total = 0;
        for (const auto& jump : cusps_[s]) {
            if (jump.dimension < 1)
                throw MalformedInput("graded dimension must be positive at cusp " + std::to_string(s));
            if (side_ == FiltrationSide::Bundle && !in_unit_window(jump.value))
                throw MalformedInput("bundle-side jump " + to_string(jump.value) + " is outside [0, 1)");
            total += jump.dimension;
        }
        if (total != rank_)
            throw MalformedInput("graded dimensions at cusp " + std::to_string(s) + " sum to " +
                                 std::to_string(total) + ", expected rank " + std::to_string(rank_));
    }
}

Rational FilteredJumpData::weighted_jump_sum() const {
    Rational sum(0);
    for (const auto& cusp : cusps_)
        for (const auto& jump : cusp) sum += jump.value * static_cast<std::int64_t>(jump.dimension);
    return sum;
}

Rational filtered_degree_rep(const FilteredJumpData& data) {
    if (data.side() != FiltrationSide::Representation)
        throw MalformedInput("filtered_degree_rep expects representation-side jumps");
    return data.weighted_jump_sum();
}

Rational filtered_degree_bundle(const FilteredBundleData& data) {
    if (data.jumps.side() != FiltrationSide::Bundle)
        throw MalformedInput("filtered_degree_bundle expects bundle-side jumps");
    return data.base_degree + data.jumps.weighted_jump_sum();
}

Rational slope_bundle(const FilteredBundleData& data) {
    return filtered_degree_bundle(data) / static_cast<std::int64_t>(data.rank());
}

Rational rank1_jump(int a, const Rational& b) {
    require_character_index(a);
    return frac(b - Rational(a, 6));
}

Rank1Degrees rank1_degrees(int a, const Rational& b) {
    require_character_index(a);
    // deg V(chi^a, a/6) + floor(b - a/6) = a/6 + floor(b - a/6)
    Rational exponent(a, 6);
    Rational unfiltered = exponent + Rational(floor(b - exponent));
    return {unfiltered, unfiltered + rank1_jump(a, b)};
}

Rational rank1_residue_angle(int a) {
    require_character_index(a);
    return Rational(a, 6);
}

void ResidueBlockData::validate() const {
    if (!in_unit_window(u)) throw BranchError("u = " + to_string(u) + " is outside [0, 1)");
}

SideResidue residue_rep_to_connection(const ResidueBlockData& block) {
    block.validate();
    return {block.beta + block.u, {-block.u, -block.v}};
}

SideResidue residue_rep_to_higgs(const ResidueBlockData& block) {
    block.validate();
    return {-block.u, {-block.beta / 2, -block.v / 2}};
}

ResidueBlockData residue_connection_to_rep(const SideResidue& connection) {
    Rational u = -connection.eigenvalue.re;
    if (!in_unit_window(u))
        throw BranchError("connection eigenvalue real part " + to_string(connection.eigenvalue.re) +
                          " is outside (-1, 0]");
    return {connection.jump - u, u, -connection.eigenvalue.im};
}

ResidueBlockData residue_higgs_to_rep(const SideResidue& higgs) {
    Rational u = -higgs.jump;
    if (!in_unit_window(u))
        throw BranchError("Higgs jump " + to_string(higgs.jump) + " is outside (-1, 0]");
    return {-2 * higgs.eigenvalue.re, u, -2 * higgs.eigenvalue.im};
}

}  // namespace threeterm
