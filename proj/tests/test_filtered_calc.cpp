#include <catch2/catch_amalgamated.hpp>

#include "threeterm/errors.hpp"
#include "threeterm/filtered_calc.hpp"

using namespace threeterm;

namespace {
Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }
}  // namespace

TEST_CASE("filtered degree of representations") {
    auto b = q(7, 3);
    CHECK(filtered_degree_rep(FilteredJumpData::representation(1, {{{b, 1}}})) == b);
    CHECK(filtered_degree_rep(FilteredJumpData::representation(4, {{{q(1, 2), 2}, {q(-1, 2), 2}}})) == 0);
    CHECK(filtered_degree_rep(FilteredJumpData::representation(3, {{{q(5, 6), 1}, {q(1, 6), 2}}})) == q(7, 6));
    // Two cusps add.
    CHECK(filtered_degree_rep(FilteredJumpData::representation(1, {{{q(1, 2), 1}}, {{q(1, 3), 1}}})) == q(5, 6));
}

TEST_CASE("filtered degree and slope of bundles") {
    FilteredBundleData one{q(-5, 6), FilteredJumpData::bundle(1, {{{q(5, 6), 1}}})};
    CHECK(filtered_degree_bundle(one) == 0);

    FilteredBundleData plain{q(3, 2), FilteredJumpData::bundle(2, {})};
    CHECK(filtered_degree_bundle(plain) == q(3, 2));

    FilteredBundleData two{q(0), FilteredJumpData::bundle(2, {{{q(1, 3), 1}, {q(2, 3), 1}}})};
    CHECK(filtered_degree_bundle(two) == 1);
    CHECK(slope_bundle(two) == q(1, 2));
}

TEST_CASE("jump data invariants") {
    CHECK_THROWS_AS(FilteredJumpData::bundle(0, {}), MalformedInput);
    CHECK_THROWS_AS(FilteredJumpData::bundle(1, {{{q(1), 1}}}), MalformedInput);
    CHECK_THROWS_AS(FilteredJumpData::bundle(1, {{{q(-1, 6), 1}}}), MalformedInput);
    CHECK_THROWS_AS(FilteredJumpData::representation(2, {{{q(1), 1}}}), MalformedInput);
    CHECK_THROWS_AS(FilteredJumpData::representation(1, {{{q(1), 0}, {q(2), 1}}}), MalformedInput);
    CHECK_THROWS_AS(filtered_degree_rep(FilteredJumpData::bundle(1, {{{q(1, 2), 1}}})), MalformedInput);
    FilteredBundleData wrong{q(0), FilteredJumpData::representation(1, {{{q(3), 1}}})};
    CHECK_THROWS_AS(filtered_degree_bundle(wrong), MalformedInput);
}

TEST_CASE("rank-one filtered characters") {
    CHECK(rank1_jump(0, q(0)) == 0);
    CHECK(rank1_jump(1, q(0)) == q(5, 6));
    CHECK(rank1_jump(2, q(1, 3)) == 0);

    auto d00 = rank1_degrees(0, q(0));
    CHECK(d00.unfiltered == 0);
    CHECK(d00.filtered == 0);
    auto d10 = rank1_degrees(1, q(0));
    CHECK(d10.unfiltered == q(-5, 6));
    CHECK(d10.filtered == 0);
    auto d3 = rank1_degrees(3, q(5, 4));
    CHECK(d3.unfiltered == q(1, 2));
    CHECK(d3.filtered == q(5, 4));

    CHECK(rank1_residue_angle(0) == 0);
    CHECK(rank1_residue_angle(1) == q(1, 6));
    CHECK(rank1_residue_angle(5) == q(5, 6));

    CHECK_THROWS_AS(rank1_jump(6, q(0)), MalformedInput);
    CHECK_THROWS_AS(rank1_degrees(-1, q(0)), MalformedInput);
    CHECK_THROWS_AS(rank1_residue_angle(7), MalformedInput);
}

TEST_CASE("property: rank-one degree is preserved on a rational grid") {
    for (int a = 0; a <= 5; ++a)
        for (std::int64_t k = -36; k <= 36; ++k)
            for (std::int64_t den : {1, 4, 6, 7}) {
                Rational b(k, den);
                auto degrees = rank1_degrees(a, b);
                Rational jump = rank1_jump(a, b);
                CHECK(degrees.filtered == b);
                CHECK(degrees.unfiltered + jump == b);
                CHECK(jump >= 0);
                CHECK(jump < 1);
                // The same object seen as a filtered representation and as a filtered bundle.
                CHECK(filtered_degree_rep(FilteredJumpData::representation(1, {{{b, 1}}})) == degrees.filtered);
                FilteredBundleData bundle{degrees.unfiltered, FilteredJumpData::bundle(1, {{{jump, 1}}})};
                CHECK(filtered_degree_bundle(bundle) == b);
            }
}

TEST_CASE("residue translation rows") {
    ResidueBlockData zero{q(0), q(0), q(0)};
    CHECK(residue_rep_to_connection(zero) == SideResidue{q(0), {q(0), q(0)}});
    CHECK(residue_rep_to_higgs(zero) == SideResidue{q(0), {q(0), q(0)}});

    ResidueBlockData unitary{q(0), q(1, 6), q(0)};
    CHECK(residue_rep_to_connection(unitary) == SideResidue{q(1, 6), {q(-1, 6), q(0)}});
    CHECK(residue_rep_to_higgs(unitary) == SideResidue{q(-1, 6), {q(0), q(0)}});

    ResidueBlockData general{q(1, 2), q(1, 3), q(1)};
    CHECK(residue_rep_to_connection(general) == SideResidue{q(5, 6), {q(-1, 3), q(-1)}});
    CHECK(residue_rep_to_higgs(general) == SideResidue{q(-1, 3), {q(-1, 4), q(-1, 2)}});
}

TEST_CASE("residue inverses") {
    CHECK(residue_connection_to_rep({q(1, 6), {q(-1, 6), q(0)}}) == ResidueBlockData{q(0), q(1, 6), q(0)});
    CHECK(residue_higgs_to_rep({q(-1, 3), {q(-1, 4), q(-1, 2)}}) == ResidueBlockData{q(1, 2), q(1, 3), q(1)});

    ResidueBlockData general{q(1, 2), q(1, 3), q(1)};
    CHECK(residue_connection_to_rep(residue_rep_to_connection(general)) == general);
    CHECK(residue_higgs_to_rep(residue_rep_to_higgs(general)) == general);

    CHECK_THROWS_AS(residue_connection_to_rep({q(0), {q(1, 6), q(0)}}), BranchError);
    CHECK_THROWS_AS(residue_connection_to_rep({q(0), {q(-1), q(0)}}), BranchError);
    CHECK_THROWS_AS(residue_higgs_to_rep({q(1, 2), {q(0), q(0)}}), BranchError);
    CHECK_THROWS_AS(residue_rep_to_connection({q(0), q(1), q(0)}), BranchError);
    CHECK_THROWS_AS(residue_rep_to_higgs({q(0), q(-1, 2), q(0)}), BranchError);
}

TEST_CASE("property: residue round trips are exact") {
    int blocks = 0;
    for (std::int64_t b4 = -8; b4 <= 8; ++b4)
        for (std::int64_t u6 = 0; u6 < 6; ++u6)
            for (std::int64_t v : {-1, 0, 1}) {
                ResidueBlockData block{q(b4, 4), q(u6, 6), q(v)};
                CHECK(residue_connection_to_rep(residue_rep_to_connection(block)) == block);
                CHECK(residue_higgs_to_rep(residue_rep_to_higgs(block)) == block);
                ++blocks;
            }
    CHECK(blocks == 17 * 6 * 3);
}
