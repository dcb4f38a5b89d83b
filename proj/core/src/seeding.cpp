#include "mmsaa/seeding.hpp"

#include <algorithm>
#include <string_view>

#include "mmsaa/chaining.hpp"
#include "mmsaa/suffix_tree.hpp"

namespace mmsaa::seeding {

std::vector<GapRegion> gap_regions(const anchoring::AnchorChain& chain,
                                   int64_t len1, int64_t len2) {
    std::vector<GapRegion> out;
    const auto& a = chain.anchors;
    if (a.empty()) {
        out.push_back(GapRegion{0, len1, 0, len2});
        return out;
    }
    out.push_back(GapRegion{0, a.front().pos1, 0, a.front().pos2});
    for (size_t i = 1; i < a.size(); ++i)
        out.push_back(GapRegion{a[i - 1].end1(), a[i].pos1, a[i - 1].end2(),
                                a[i].pos2});
    out.push_back(GapRegion{a.back().end1(), len1, a.back().end2(), len2});
    return out;
}

namespace {

// Hamming distance capped at max+1 (early exit); 'N' mismatches everything.
int capped_hamming(std::string_view a, std::string_view b, int max) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!residues_equal(a[i], b[i]) && ++d > max) return d;
    }
    return d;
}

std::vector<Match> adaptive_by_descent(std::string_view g1, std::string_view g2,
                                       const GapRegion& gap,
                                       const SeedParams& params) {
    std::vector<Match> out;
    const int L = params.adaptive_length;
    GeneralizedSuffixTree tree(g1, g2);
    for (int64_t p1 = 0; p1 + L <= static_cast<int64_t>(g1.size()); ++p1) {
        auto occ = tree.descend_with_mismatches(g1.substr(p1, L),
                                                params.adaptive_max_mismatch);
        for (const auto& o : occ) {
            auto [seq, off] = tree.locate(o.text_pos);
            if (seq != 1) continue;
            out.push_back(Match{gap.s1_begin + p1, gap.s2_begin + off,
                                L, o.mismatches, MatchKind::Adaptive});
        }
    }
    return out;
}

std::vector<Match> adaptive_by_scan(std::string_view g1, std::string_view g2,
                                    const GapRegion& gap,
                                    const SeedParams& params, bool banded) {
    std::vector<Match> out;
    const int L = params.adaptive_length;
    const int64_t n1 = static_cast<int64_t>(g1.size()) - L;
    const int64_t n2 = static_cast<int64_t>(g2.size()) - L;
    if (n1 < 0 || n2 < 0) return out;
    const int64_t half =
        std::llabs(static_cast<int64_t>(g1.size()) -
                   static_cast<int64_t>(g2.size())) +
        params.adaptive_band_pad;
    for (int64_t p1 = 0; p1 <= n1; ++p1) {
        int64_t lo = 0, hi = n2;
        if (banded) {
            const int64_t center = n1 > 0 ? p1 * n2 / n1 : 0;
            lo = std::max<int64_t>(0, center - half);
            hi = std::min<int64_t>(n2, center + half);
        }
        for (int64_t p2 = lo; p2 <= hi; ++p2) {
            int d = capped_hamming(g1.substr(p1, L), g2.substr(p2, L),
                                   params.adaptive_max_mismatch);
            if (d <= params.adaptive_max_mismatch)
                out.push_back(Match{gap.s1_begin + p1, gap.s2_begin + p2, L, d,
                                    MatchKind::Adaptive});
        }
    }
    return out;
}

}  // namespace

std::vector<Match> find_adaptive_seeds(const Sequence& s1, const Sequence& s2,
                                       const GapRegion& gap,
                                       const SeedParams& params) {
    const int L = params.adaptive_length;
    if (gap.w1() < L || gap.w2() < L) return {};
    std::string_view g1 =
        std::string_view(s1.residues).substr(gap.s1_begin, gap.w1());
    std::string_view g2 =
        std::string_view(s2.residues).substr(gap.s2_begin, gap.w2());
    const int64_t area = gap.w1() * gap.w2();
    std::vector<Match> out;
    if (area <= params.descent_area_cap)
        out = adaptive_by_descent(g1, g2, gap, params);
    else
        out = adaptive_by_scan(g1, g2, gap, params,
                               /*banded=*/area > params.scan_area_cap);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All exact k-mer pairs in the sub-gap between features lo and hi that sit
// within fraction * span of the nearer feature in both sequences.
void collect_perfect(const Sequence& s1, const Sequence& s2, const Match& lo,
                     const Match& hi, int k, double fraction, int64_t area_cap,
                     std::vector<Match>& out) {
    const int64_t b1 = lo.end1(), e1 = hi.pos1;
    const int64_t b2 = lo.end2(), e2 = hi.pos2;
    const int64_t span1 = e1 - b1, span2 = e2 - b2;
    if (span1 < k || span2 < k) return;
    if (span1 * span2 > area_cap) return;
    const double r1 = fraction * static_cast<double>(span1);
    const double r2 = fraction * static_cast<double>(span2);
    const MatchKind kind = k >= 4 ? MatchKind::Perfect4 : MatchKind::Perfect2;
    for (int64_t p1 = b1; p1 + k <= e1; ++p1) {
        const double d1 = static_cast<double>(
            std::min(p1 - b1, e1 - (p1 + k)));
        if (d1 > r1) continue;
        for (int64_t p2 = b2; p2 + k <= e2; ++p2) {
            const double d2 = static_cast<double>(
                std::min(p2 - b2, e2 - (p2 + k)));
            if (d2 > r2) continue;
            bool equal = true;
            for (int t = 0; t < k && equal; ++t)
                equal = residues_equal(s1.residues[p1 + t], s2.residues[p2 + t]);
            if (equal)
                out.push_back(Match{p1, p2, k, 0, kind});
        }
    }
}

}  // namespace

std::vector<Match> find_perfect_seeds(const Sequence& s1, const Sequence& s2,
                                      const GapRegion& gap,
                                      const std::vector<Match>& placed,
                                      const SeedParams& params) {
    // features bounding sub-gaps: gap corners plus the placed seeds
    std::vector<Match> features;
    features.push_back(Match{gap.s1_begin, gap.s2_begin, 0});
    features.insert(features.end(), placed.begin(), placed.end());
    features.push_back(Match{gap.s1_end, gap.s2_end, 0});

    std::vector<Match> admitted;
    for (int k : params.perfect_lengths) {
        std::vector<Match> round;
        for (size_t i = 0; i + 1 < features.size(); ++i) {
            if (features[i].end1() > features[i + 1].pos1 ||
                features[i].end2() > features[i + 1].pos2)
                continue;  // degenerate flank order; nothing to bridge
            std::vector<Match> cands;
            collect_perfect(s1, s2, features[i], features[i + 1], k,
                            params.proximity_fraction, params.perfect_area_cap,
                            cands);
            auto kept = chaining::resolve_non_crossing(cands, features[i],
                                                       features[i + 1]);
            round.insert(round.end(), kept.begin(), kept.end());
        }
        admitted.insert(admitted.end(), round.begin(), round.end());
        // the next (finer) round works the sub-gaps left by this one
        features.insert(features.end(), round.begin(), round.end());
        std::sort(features.begin(), features.end());
    }
    std::sort(admitted.begin(), admitted.end());
    return admitted;
}

}  // namespace mmsaa::seeding
