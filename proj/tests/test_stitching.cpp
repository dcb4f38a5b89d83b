#include <doctest.h>

#include <random>

#include "mmsaa/oracle.hpp"
#include "mmsaa/stitching.hpp"
#include "test_helpers.hpp"

using namespace mmsaa;
using namespace mmsaa::stitching;
using mmsaa::testing::global_affine_score;
using mmsaa::testing::random_dna;

namespace {

Match mk(int64_t p1, int64_t p2, int64_t len) {
    return Match{p1, p2, len, 0, MatchKind::Mmss};
}

int64_t replay_score(const std::string& a, const std::string& b,
                     const AlignmentRecord& rec, const ScoringScheme& sc) {
    // walk the blocks over the aligned slices and rescore from scratch
    int64_t i = rec.seq1_begin, j = rec.seq2_begin, score = 0;
    for (const auto& blk : rec.blocks) {
        switch (blk.op) {
            case BlockOp::Match:
                for (int64_t k = 0; k < blk.length; ++k)
                    REQUIRE(residues_equal(a[i + k], b[j + k]));
                score += blk.length * sc.match;
                i += blk.length;
                j += blk.length;
                break;
            case BlockOp::Mismatch:
                for (int64_t k = 0; k < blk.length; ++k)
                    REQUIRE(!residues_equal(a[i + k], b[j + k]));
                score += blk.length * sc.mismatch;
                i += blk.length;
                j += blk.length;
                break;
            case BlockOp::Insert1:
                score += sc.gap_cost(blk.length);
                i += blk.length;
                break;
            case BlockOp::Insert2:
                score += sc.gap_cost(blk.length);
                j += blk.length;
                break;
        }
    }
    REQUIRE(i == rec.seq1_end);
    REQUIRE(j == rec.seq2_end);
    return score;
}

}  // namespace

TEST_CASE("extension recovers a full identity from an interior match") {
    Sequence s1{"a", "ACGTACGTA"};
    Sequence s2{"b", "ACGTACGTA"};
    auto got = extend_ungapped(s1, s2, mk(3, 3, 3), 0, 0, 9, 9,
                               ExtensionParams{}, ScoringScheme{});
    CHECK(got == mk(0, 0, 9));
    CHECK(got.mismatches == 0);
}

TEST_CASE("extension stops at the x-drop wall") {
    // perfect core of 5, then a desert of mismatches on the right
    Sequence s1{"a", "AAAAACCCCCCCC"};
    Sequence s2{"b", "AAAAAGGGGGGGG"};
    ExtensionParams params;
    params.x_drop = 2;
    auto got = extend_ungapped(s1, s2, mk(0, 0, 5), 0, 0, 13, 13, params,
                               ScoringScheme{});
    // the running max is at length 5; everything past it only loses score
    CHECK(got == mk(0, 0, 5));
}

TEST_CASE("extension respects the bounds") {
    Sequence s1{"a", "AAAAAAAA"};
    Sequence s2{"b", "AAAAAAAA"};
    auto got = extend_ungapped(s1, s2, mk(3, 3, 2), 2, 2, 6, 7,
                               ExtensionParams{}, ScoringScheme{});
    CHECK(got == mk(2, 2, 4));
}

TEST_CASE("extension endpoints match an exhaustive scan when x_drop is huge") {
    std::mt19937_64 rng(43);
    ScoringScheme sc;
    ExtensionParams params;
    params.x_drop = 1000;
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_dna(rng, 40);
        auto b = random_dna(rng, 40);
        // plant a shared core so the seed is real
        auto core = random_dna(rng, 8);
        a.replace(16, 8, core);
        b.replace(16, 8, core);
        Sequence s1{"a", a}, s2{"b", b};
        auto got = extend_ungapped(s1, s2, mk(16, 16, 8), 0, 0, 40, 40, params, sc);

        // exhaustive best-prefix/suffix search on the shared diagonal
        auto run_score = [&](int64_t from, int64_t to) {
            int64_t s = 0;
            for (int64_t k = from; k < to; ++k)
                s += residues_equal(a[k], b[k]) ? sc.match : sc.mismatch;
            return s;
        };
        int64_t best = INT64_MIN, best_from = 16, best_to = 24;
        for (int64_t from = 16; from >= 0; --from) {
            for (int64_t to = 24; to <= 40; ++to) {
                int64_t s = run_score(from, to);
                if (s > best) best = s, best_from = from, best_to = to;
            }
        }
        CHECK(got.pos1 == best_from);
        CHECK(got.length == best_to - best_from);
        CHECK(run_score(got.pos1, got.pos1 + got.length) == best);
    }
}

TEST_CASE("fill_gap small fixtures") {
    ScoringScheme sc;
    SUBCASE("one-symbol insertion") {
        auto blocks = fill_gap("ACG", "AG", sc, 16);
        std::vector<AlignmentBlock> expected{{BlockOp::Match, 1},
                                             {BlockOp::Insert1, 1},
                                             {BlockOp::Match, 1}};
        CHECK(blocks == expected);
        CHECK(score_blocks(blocks, sc) == 0);
    }
    SUBCASE("empty against non-empty") {
        auto blocks = fill_gap("", "TT", sc, 16);
        CHECK(blocks == std::vector<AlignmentBlock>{{BlockOp::Insert2, 2}});
        CHECK(fill_gap("", "", sc, 16).empty());
    }
}

TEST_CASE("fill_gap matches the unbanded oracle on random slices") {
    std::mt19937_64 rng(47);
    ScoringScheme sc;
    ScoringScheme affine{2, -3, -5, -2};
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_dna(rng, rng() % 64, 0.02);
        auto b = random_dna(rng, rng() % 64, 0.02);
        for (const auto& scheme : {sc, affine}) {
            auto blocks = fill_gap(a, b, scheme, 4);
            AlignmentRecord rec;
            rec.blocks = blocks;
            rec.seq1_end = static_cast<int64_t>(a.size());
            rec.seq2_end = static_cast<int64_t>(b.size());
            int64_t replayed = replay_score(a, b, rec, scheme);
            CHECK(replayed == score_blocks(blocks, scheme));
            CHECK(replayed == global_affine_score(a, b, scheme));
        }
    }
}

TEST_CASE("assemble on a hand fixture") {
    Sequence s1{"a", "TTTTACGGGGG"};
    Sequence s2{"b", "TTTTAGGGGG"};
    chaining::ResolvedChain chain;
    chain.items = {mk(0, 0, 4), mk(7, 6, 4)};
    ExtensionParams params;
    params.x_drop = 1;
    auto rec = stitching::assemble(s1, s2, chain, params, ScoringScheme{});
    std::vector<AlignmentBlock> expected{{BlockOp::Match, 5},
                                         {BlockOp::Insert1, 1},
                                         {BlockOp::Match, 5}};
    CHECK(rec.blocks == expected);
    CHECK(rec.seq1_begin == 0);
    CHECK(rec.seq1_end == 11);
    CHECK(rec.seq2_begin == 0);
    CHECK(rec.seq2_end == 10);
    CHECK(rec.score == 8);
    CHECK(rec.identity == doctest::Approx(10.0 / 11.0));
}

TEST_CASE("assemble throws on an empty chain") {
    Sequence s1{"a", "ACGT"};
    Sequence s2{"b", "ACGT"};
    try {
        stitching::assemble(s1, s2, chaining::ResolvedChain{},
                            ExtensionParams{}, ScoringScheme{});
        FAIL("expected EmptyChain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyChain);
    }
}

TEST_CASE("assembled records replay exactly and never beat the optimum") {
    std::mt19937_64 rng(53);
    ScoringScheme sc;
    for (int trial = 0; trial < 40; ++trial) {
        auto base = random_dna(rng, 80);
        auto mutated = base;
        for (size_t p = 0; p < mutated.size(); p += 11)
            mutated[p] = mutated[p] == 'A' ? 'C' : 'A';
        Sequence s1{"a", base}, s2{"b", mutated};
        chaining::ResolvedChain chain;
        chain.items = {mk(1, 1, 6), mk(34, 34, 6), mk(70, 70, 6)};
        auto rec = stitching::assemble(s1, s2, chain, ExtensionParams{}, sc);
        int64_t replayed = replay_score(base, mutated, rec, sc);
        CHECK(replayed == rec.score);
        auto [sw_score, sw_rec] = oracle::smith_waterman(s1, s2, sc);
        CHECK(rec.score <= sw_score);
    }
}
