#include "mmsaa/pipeline.hpp"

#include <algorithm>
#include <future>

#include "mmsaa/chaining.hpp"
#include "mmsaa/suffix_tree.hpp"

namespace mmsaa {

namespace {

std::vector<Match> seed_one_gap(const Sequence& s1, const Sequence& s2,
                                const seeding::GapRegion& gap,
                                const Match& left_flank,
                                const Match& right_flank,
                                const seeding::SeedParams& params) {
    auto adaptive = seeding::find_adaptive_seeds(s1, s2, gap, params);
    auto kept = chaining::resolve_non_crossing(adaptive, left_flank, right_flank);
    auto perfect = seeding::find_perfect_seeds(s1, s2, gap, kept, params);
    kept.insert(kept.end(), perfect.begin(), perfect.end());
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

AlignmentRecord align_pair(const Sequence& s1, const Sequence& s2,
                           const PipelineConfig& config) {
    anchoring::AnchorChain chain;  // may stay empty: whole-pair seeding
    if (s1.size() > 0 && s2.size() > 0) {
        GeneralizedSuffixTree tree(s1.residues, s2.residues);
        const int64_t longest = tree.longest_common_match_length();
        if (longest > 0) {
            const int64_t threshold =
                std::max((longest + 2) / 3, config.threshold_floor);
            auto mmss = tree.enumerate_mmss(threshold);
            if (!mmss.empty())
                chain = anchoring::build_neighborhood_chain(
                    mmss, config.neighborhood_fraction);
        }
    }

    auto gaps = seeding::gap_regions(chain, s1.size(), s2.size());
    std::vector<std::vector<Match>> gap_seeds(gaps.size());
    auto flanks_of = [&](size_t g) -> std::pair<Match, Match> {
        const auto& a = chain.anchors;
        Match lo = g == 0 ? Match{gaps[g].s1_begin, gaps[g].s2_begin, 0}
                          : a[g - 1];
        Match hi = g == a.size() ? Match{gaps[g].s1_end, gaps[g].s2_end, 0}
                                 : a[g];
        return {lo, hi};
    };

    if (config.threads > 1 && gaps.size() > 1) {
        std::vector<std::future<std::vector<Match>>> jobs(gaps.size());
        for (size_t g = 0; g < gaps.size(); ++g) {
            auto [lo, hi] = flanks_of(g);
            jobs[g] = std::async(std::launch::async, seed_one_gap,
                                 std::cref(s1), std::cref(s2), gaps[g], lo, hi,
                                 std::cref(config.seeds));
        }
        for (size_t g = 0; g < gaps.size(); ++g) gap_seeds[g] = jobs[g].get();
    } else {
        for (size_t g = 0; g < gaps.size(); ++g) {
            auto [lo, hi] = flanks_of(g);
            gap_seeds[g] = seed_one_gap(s1, s2, gaps[g], lo, hi, config.seeds);
        }
    }

    auto merged = chaining::merge_chain(chain, gap_seeds);
    if (merged.items.empty()) {
        AlignmentRecord empty;
        empty.seq1_id = s1.id;
        empty.seq2_id = s2.id;
        return empty;
    }
    return stitching::assemble(s1, s2, merged, config.extension, config.scoring);
}

}  // namespace mmsaa
