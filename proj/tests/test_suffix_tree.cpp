#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mmsaa/oracle.hpp"
#include "mmsaa/suffix_tree.hpp"
#include "test_helpers.hpp"

using namespace mmsaa;
using mmsaa::testing::diagonal_scan_mems;
using mmsaa::testing::random_dna;

namespace {

std::multiset<std::string> naive_suffixes(const std::string& joined) {
    std::multiset<std::string> out;
    for (size_t i = 0; i < joined.size(); ++i) out.insert(joined.substr(i));
    return out;
}

}  // namespace

TEST_CASE("tiny tree: leaf count and path set") {
    GeneralizedSuffixTree tree("A", "A");
    CHECK(tree.leaf_count() == 4);
    auto paths = tree.root_to_leaf_paths();
    std::multiset<std::string> got(paths.begin(), paths.end());
    CHECK(got == naive_suffixes(tree.text()));
}

TEST_CASE("tree over one empty sequence spells every suffix") {
    GeneralizedSuffixTree tree("ACGT", "");
    auto paths = tree.root_to_leaf_paths();
    std::multiset<std::string> got(paths.begin(), paths.end());
    CHECK(got == naive_suffixes(tree.text()));
    CHECK(tree.leaf_count() == 6);
}

TEST_CASE("repeated prefix creates a shared internal node") {
    // "ACGACT": the repeat "AC" must sit on a shared internal path
    GeneralizedSuffixTree tree("ACGACT", "");
    auto paths = tree.root_to_leaf_paths();
    std::multiset<std::string> got(paths.begin(), paths.end());
    CHECK(got == naive_suffixes(tree.text()));
    bool found_ac_node = false;
    for (int v = 0; v < tree.node_count(); ++v) {
        if (tree.is_leaf(v) || v == tree.root()) continue;
        if (tree.edge_label(v) == "AC" && tree.children_of(v).size() >= 2)
            found_ac_node = true;
    }
    CHECK(found_ac_node);
}

TEST_CASE("structure invariants on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto s1 = random_dna(rng, 1 + rng() % 100);
        auto s2 = random_dna(rng, rng() % 100);
        GeneralizedSuffixTree tree(s1, s2);
        CHECK(tree.leaf_count() ==
              static_cast<int64_t>(s1.size() + s2.size() + 2));
        auto paths = tree.root_to_leaf_paths();
        std::multiset<std::string> got(paths.begin(), paths.end());
        REQUIRE(got == naive_suffixes(tree.text()));
        for (int v = 0; v < tree.node_count(); ++v) {
            if (tree.is_leaf(v) || v == tree.root()) continue;
            CHECK(tree.children_of(v).size() >= 2);
        }
    }
}

TEST_CASE("suffix links point to the one-shorter path") {
    std::mt19937_64 rng(11);
    auto s1 = random_dna(rng, 60);
    auto s2 = random_dna(rng, 40);
    GeneralizedSuffixTree tree(s1, s2);
    // path string per node
    std::map<int, std::string> path;
    path[tree.root()] = "";
    std::vector<int> stack{tree.root()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : tree.children_of(v)) {
            path[c] = path[v] + std::string(tree.edge_label(c));
            stack.push_back(c);
        }
    }
    for (int v = 0; v < tree.node_count(); ++v) {
        if (tree.is_leaf(v) || v == tree.root()) continue;
        int link = tree.suffix_link_of(v);
        REQUIRE(link != -1);
        CHECK(path[v].substr(1) == path[link]);
    }
}

TEST_CASE("mmss: banana vs ananas (DNA-mapped)") {
    // b->G, a->A, n->T, s->C
    GeneralizedSuffixTree tree("GATATA", "ATATAC");
    auto mmss = tree.enumerate_mmss();
    std::vector<Match> expected{{1, 0, 5, 0, MatchKind::Mmss},
                                {1, 2, 3, 0, MatchKind::Mmss},
                                {1, 4, 1, 0, MatchKind::Mmss},
                                {3, 0, 3, 0, MatchKind::Mmss},
                                {5, 0, 1, 0, MatchKind::Mmss}};
    std::sort(expected.begin(), expected.end());
    CHECK(mmss == expected);
    // the three long ones survive the min-length filter
    auto filtered = tree.enumerate_mmss(3);
    REQUIRE(filtered.size() == 3);
    CHECK(filtered[0] == Match{1, 0, 5});
    CHECK(filtered[1] == Match{1, 2, 3});
    CHECK(filtered[2] == Match{3, 0, 3});
}

TEST_CASE("mmss: identical and disjoint strings") {
    CHECK(GeneralizedSuffixTree("ACGT", "ACGT").enumerate_mmss() ==
          std::vector<Match>{{0, 0, 4, 0, MatchKind::Mmss}});
    CHECK(GeneralizedSuffixTree("AAAA", "CCCC").enumerate_mmss().empty());
}

TEST_CASE("mmss equals both oracles on random pairs, N included") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const double n_rate = trial % 3 == 0 ? 0.05 : 0.0;
        Sequence s1{"a", random_dna(rng, 1 + rng() % 64, n_rate)};
        Sequence s2{"b", random_dna(rng, 1 + rng() % 64, n_rate)};
        GeneralizedSuffixTree tree(s1.residues, s2.residues);
        auto got = tree.enumerate_mmss();
        auto brute = oracle::brute_force_mems(s1, s2);
        auto diag = diagonal_scan_mems(s1.residues, s2.residues);
        REQUIRE(got == brute);
        REQUIRE(got == diag);
        for (const auto& m : got) {
            for (int64_t k = 0; k < m.length; ++k)
                CHECK(residues_equal(s1.residues[m.pos1 + k],
                                     s2.residues[m.pos2 + k]));
        }
    }
}

TEST_CASE("mmss min_length filter") {
    std::mt19937_64 rng(31);
    auto s1 = random_dna(rng, 50);
    auto s2 = random_dna(rng, 50);
    GeneralizedSuffixTree tree(s1, s2);
    auto all = tree.enumerate_mmss(1);
    auto filtered = tree.enumerate_mmss(4);
    std::vector<Match> expected;
    for (const auto& m : all)
        if (m.length >= 4) expected.push_back(m);
    CHECK(filtered == expected);
}

TEST_CASE("longest_common_match_length agrees with the MEM set") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        auto s1 = random_dna(rng, 1 + rng() % 60, 0.05);
        auto s2 = random_dna(rng, 1 + rng() % 60, 0.05);
        GeneralizedSuffixTree tree(s1, s2);
        auto mems = diagonal_scan_mems(s1, s2);
        int64_t expected = 0;
        for (const auto& m : mems) expected = std::max(expected, m.length);
        CHECK(tree.longest_common_match_length() == expected);
    }
}

TEST_CASE("descend with budget 0 is exact search") {
    GeneralizedSuffixTree tree("TTACGATT", "ACGT");
    auto occ = tree.descend_with_mismatches("ACG", 0);
    REQUIRE(occ.size() == 2);
    CHECK(occ[0].text_pos == 2);
    CHECK(occ[0].mismatches == 0);
    CHECK(tree.locate(occ[1].text_pos) == std::pair<int, int64_t>{1, 0});
}

TEST_CASE("descend reports single substitutions within budget") {
    GeneralizedSuffixTree tree("TTACGATT", "");
    auto occ = tree.descend_with_mismatches("ACGT", 1);
    // "ACGA" at pos 2 has one mismatch; nothing else is within distance 1
    REQUIRE(occ.size() == 1);
    CHECK(occ[0].text_pos == 2);
    CHECK(occ[0].mismatches == 1);
}

TEST_CASE("descend equals sliding Hamming scan on random text") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto s1 = random_dna(rng, 200);
        auto q = random_dna(rng, 20);
        GeneralizedSuffixTree tree(s1, "");
        auto occ = tree.descend_with_mismatches(q, 6);
        std::vector<std::pair<int64_t, int>> got;
        for (const auto& o : occ) got.emplace_back(o.text_pos, o.mismatches);
        std::vector<std::pair<int64_t, int>> expected;
        for (size_t p = 0; p + 20 <= s1.size(); ++p) {
            int d = 0;
            for (int t = 0; t < 20; ++t)
                if (!residues_equal(s1[p + t], q[t])) ++d;
            if (d <= 6) expected.emplace_back(static_cast<int64_t>(p), d);
        }
        REQUIRE(got == expected);
    }
}
