#include <doctest.h>

#include <random>

#include "mmsaa/chaining.hpp"
#include "mmsaa/seeding.hpp"
#include "test_helpers.hpp"

using namespace mmsaa;
using namespace mmsaa::seeding;
using mmsaa::testing::hamming_scan_pairs;
using mmsaa::testing::random_dna;

namespace {

GapRegion whole(const Sequence& s1, const Sequence& s2) {
    return GapRegion{0, s1.size(), 0, s2.size()};
}

}  // namespace

TEST_CASE("gap regions cover leading, inter-anchor and trailing space") {
    anchoring::AnchorChain chain;
    chain.anchors = {Match{10, 20, 5}, Match{30, 40, 5}};
    auto gaps = gap_regions(chain, 100, 200);
    REQUIRE(gaps.size() == 3);
    CHECK(gaps[0].s1_begin == 0);
    CHECK(gaps[0].s1_end == 10);
    CHECK(gaps[1].s1_begin == 15);
    CHECK(gaps[1].s2_begin == 25);
    CHECK(gaps[1].s1_end == 30);
    CHECK(gaps[2].s1_end == 100);
    CHECK(gaps[2].s2_end == 200);
}

TEST_CASE("identical 20-mers give one zero-mismatch seed") {
    std::mt19937_64 rng(3);
    auto core = random_dna(rng, 20);
    Sequence s1{"a", core}, s2{"b", core};
    auto seeds = find_adaptive_seeds(s1, s2, whole(s1, s2), SeedParams{});
    REQUIRE(seeds.size() == 1);
    CHECK(seeds[0] == Match{0, 0, 20});
    CHECK(seeds[0].mismatches == 0);
    CHECK(seeds[0].kind == MatchKind::Adaptive);
}

TEST_CASE("mismatch budget boundary: 6 in, 7 out") {
    std::string a = "AAAAAAAAAAAAAAAAAAAA";
    std::string b6 = a, b7 = a;
    for (int i = 0; i < 6; ++i) b6[3 * i] = 'C';
    for (int i = 0; i < 7; ++i) b7[2 * i] = 'C';
    Sequence s1{"a", a};
    SUBCASE("six mismatches reported") {
        Sequence s2{"b", b6};
        auto seeds = find_adaptive_seeds(s1, s2, whole(s1, s2), SeedParams{});
        REQUIRE(seeds.size() == 1);
        CHECK(seeds[0].mismatches == 6);
    }
    SUBCASE("seven mismatches rejected") {
        Sequence s2{"b", b7};
        auto seeds = find_adaptive_seeds(s1, s2, whole(s1, s2), SeedParams{});
        CHECK(seeds.empty());
    }
}

TEST_CASE("short gaps yield no adaptive seeds") {
    Sequence s1{"a", "ACGTACGTACGTACGTACG"};  // 19 < 20
    Sequence s2{"b", "ACGTACGTACGTACGTACGT"};
    CHECK(find_adaptive_seeds(s1, s2, whole(s1, s2), SeedParams{}).empty());
}

TEST_CASE("adaptive seeds equal the all-pairs Hamming oracle") {
    std::mt19937_64 rng(17);
    SeedParams params;
    for (int trial = 0; trial < 30; ++trial) {
        Sequence s1{"a", random_dna(rng, 20 + rng() % 180, 0.02)};
        Sequence s2{"b", random_dna(rng, 20 + rng() % 180, 0.02)};
        auto got = find_adaptive_seeds(s1, s2, whole(s1, s2), params);
        auto expected = hamming_scan_pairs(s1.residues, s2.residues,
                                           params.adaptive_length,
                                           params.adaptive_max_mismatch);
        std::sort(expected.begin(), expected.end());
        REQUIRE(got.size() == expected.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i] == expected[i]);
            CHECK(got[i].mismatches == expected[i].mismatches);
        }
    }
}

TEST_CASE("scan strategies agree with descent") {
    std::mt19937_64 rng(19);
    Sequence s1{"a", random_dna(rng, 150)};
    Sequence s2{"b", random_dna(rng, 150)};
    SeedParams descent, scan;
    scan.descent_area_cap = 0;  // force the scan path
    auto a = find_adaptive_seeds(s1, s2, whole(s1, s2), descent);
    auto b = find_adaptive_seeds(s1, s2, whole(s1, s2), scan);
    CHECK(a == b);
}

TEST_CASE("perfect 4-mer seed found near the gap boundary") {
    Sequence s1{"a", "AAAACGT"};
    Sequence s2{"b", "TTTACGT"};
    auto seeds =
        find_perfect_seeds(s1, s2, whole(s1, s2), {}, SeedParams{});
    REQUIRE(seeds.size() >= 1);
    bool found = false;
    for (const auto& s : seeds)
        if (s == Match{3, 3, 4} && s.kind == MatchKind::Perfect4) found = true;
    CHECK(found);
}

TEST_CASE("tiny sub-gaps yield no perfect seeds") {
    Sequence s1{"a", "A"};
    Sequence s2{"b", "C"};
    CHECK(find_perfect_seeds(s1, s2, whole(s1, s2), {}, SeedParams{}).empty());
}

TEST_CASE("2-mer pass fires when no 4-mer pair exists") {
    Sequence s1{"a", "GGAC"};
    Sequence s2{"b", "TTAC"};
    auto seeds = find_perfect_seeds(s1, s2, whole(s1, s2), {}, SeedParams{});
    REQUIRE(seeds.size() == 1);
    CHECK(seeds[0] == Match{2, 2, 2});
    CHECK(seeds[0].kind == MatchKind::Perfect2);
}

TEST_CASE("seeds are exact and strictly inside the gap") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Sequence s1{"a", random_dna(rng, 60)};
        Sequence s2{"b", random_dna(rng, 60)};
        GapRegion gap{5, 55, 5, 55};
        auto adaptive = find_adaptive_seeds(s1, s2, gap, SeedParams{});
        auto kept = chaining::resolve_non_crossing(
            adaptive, Match{gap.s1_begin, gap.s2_begin, 0},
            Match{gap.s1_end, gap.s2_end, 0});
        auto perfect = find_perfect_seeds(s1, s2, gap, kept, SeedParams{});
        for (const auto& s : perfect) {
            CHECK(s.mismatches == 0);
            CHECK(s.pos1 >= gap.s1_begin);
            CHECK(s.end1() <= gap.s1_end);
            CHECK(s.pos2 >= gap.s2_begin);
            CHECK(s.end2() <= gap.s2_end);
            for (int64_t k = 0; k < s.length; ++k)
                CHECK(residues_equal(s1.residues[s.pos1 + k],
                                     s2.residues[s.pos2 + k]));
        }
    }
}
