#include <doctest.h>

#include <random>

#include "mmsaa/evalbench.hpp"
#include "mmsaa/oracle.hpp"
#include "mmsaa/pipeline.hpp"
#include "test_helpers.hpp"

using namespace mmsaa;
using mmsaa::testing::random_dna;

TEST_CASE("identical sequences come back as one full match block") {
    std::mt19937_64 rng(61);
    for (int64_t len : {100, 1000, 5000}) {
        auto text = random_dna(rng, static_cast<size_t>(len));
        Sequence s1{"a", text}, s2{"b", text};
        auto rec = align_pair(s1, s2, PipelineConfig{});
        REQUIRE(rec.blocks.size() == 1);
        CHECK(rec.blocks[0].op == BlockOp::Match);
        CHECK(rec.blocks[0].length == len);
        CHECK(rec.seq1_begin == 0);
        CHECK(rec.seq1_end == len);
        CHECK(rec.identity == doctest::Approx(1.0));
        CHECK(rec.score == len);
    }
}

TEST_CASE("unrelated sequences give an empty or weak record, never a crash") {
    std::mt19937_64 rng(67);
    Sequence s1{"a", std::string(300, 'A')};
    Sequence s2{"b", std::string(300, 'C')};
    auto rec = align_pair(s1, s2, PipelineConfig{});
    CHECK(rec.blocks.empty());
    CHECK(rec.score == 0);
}

TEST_CASE("degenerate inputs") {
    PipelineConfig config;
    auto rec = align_pair({"a", ""}, {"b", "ACGT"}, config);
    CHECK(rec.blocks.empty());
    rec = align_pair({"a", ""}, {"b", ""}, config);
    CHECK(rec.blocks.empty());
    rec = align_pair({"a", "NNNN"}, {"b", "NNNN"}, config);
    CHECK(rec.blocks.empty());
}

TEST_CASE("mutated pairs score close to the optimum and within it") {
    std::mt19937_64 rng(71);
    evalbench::MutationModel model;
    model.substitution_rate = 0.05;
    model.indel_rate = 0.01;
    PipelineConfig config;
    for (int trial = 0; trial < 10; ++trial) {
        model.rng_seed = 1000 + trial;
        auto [s1, s2, ann] = evalbench::generate_pair(800, model);
        auto rec = align_pair(s1, s2, config);
        auto [opt, orec] = oracle::smith_waterman(s1, s2, config.scoring);
        CHECK(rec.score <= opt);
        CHECK(rec.score >= (opt * 8) / 10);
    }
}

TEST_CASE("result is deterministic and thread-count independent") {
    evalbench::MutationModel model;
    model.substitution_rate = 0.08;
    model.indel_rate = 0.02;
    model.rng_seed = 5;
    auto [s1, s2, ann] = evalbench::generate_pair(3000, model);
    PipelineConfig one, four;
    four.threads = 4;
    auto a = align_pair(s1, s2, one);
    auto b = align_pair(s1, s2, one);
    auto c = align_pair(s1, s2, four);
    CHECK(a.blocks == b.blocks);
    CHECK(a.score == b.score);
    CHECK(a.blocks == c.blocks);
    CHECK(a.score == c.score);
}

TEST_CASE("N runs break the alignment but not the pipeline") {
    std::mt19937_64 rng(73);
    auto text = random_dna(rng, 400, 0.05);
    Sequence s1{"a", text}, s2{"b", text};
    auto rec = align_pair(s1, s2, PipelineConfig{});
    CHECK(!rec.blocks.empty());
    // every reported match column must be a real (non-N) equality
    int64_t i = rec.seq1_begin, j = rec.seq2_begin;
    for (const auto& b : rec.blocks) {
        if (b.op == BlockOp::Match)
            for (int64_t k = 0; k < b.length; ++k)
                CHECK(residues_equal(text[i + k], text[j + k]));
        if (b.op != BlockOp::Insert2) i += b.length;
        if (b.op != BlockOp::Insert1) j += b.length;
    }
}
