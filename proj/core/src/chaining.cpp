#include "mmsaa/chaining.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

namespace mmsaa::chaining {

namespace {

struct ByPos1 {
    bool operator()(const Match& a, const Match& b) const {
        if (a.pos1 != b.pos1) return a.pos1 < b.pos1;
        return a.pos2 < b.pos2;
    }
};

using ChainSet = std::set<Match, ByPos1>;

bool fits_between(const Match& cand, const ChainSet& kept, const Match& lo,
                  const Match& hi) {
    if (cand.pos1 < lo.end1() || cand.pos2 < lo.end2()) return false;
    if (cand.end1() > hi.pos1 || cand.end2() > hi.pos2) return false;
    auto succ = kept.lower_bound(cand);
    if (succ != kept.end() &&
        (cand.end1() > succ->pos1 || cand.end2() > succ->pos2))
        return false;
    if (succ != kept.begin()) {
        auto pred = std::prev(succ);
        if (pred->end1() > cand.pos1 || pred->end2() > cand.pos2) return false;
    }
    return true;
}

double interpolated_diagonal(const Match& m, const Match& lf, const Match& rf) {
    const double d0 = static_cast<double>(diagonal(lf));
    const double d1 = static_cast<double>(diagonal(rf));
    const double x0 = static_cast<double>(lf.end1());
    const double x1 = static_cast<double>(rf.pos1);
    const double mid = static_cast<double>(m.pos1) +
                       static_cast<double>(m.length) / 2.0;
    if (x1 <= x0) return (d0 + d1) / 2.0;
    double t = (mid - x0) / (x1 - x0);
    t = std::clamp(t, 0.0, 1.0);
    return d0 + t * (d1 - d0);
}

}  // namespace

std::vector<Match> resolve_non_crossing(const std::vector<Match>& candidates,
                                        const Match& left_flank,
                                        const Match& right_flank) {
    struct Scored {
        double closeness;
        Match m;
    };
    std::vector<Scored> order;
    order.reserve(candidates.size());
    for (const auto& c : candidates)
        order.push_back({std::fabs(static_cast<double>(diagonal(c)) -
                                   interpolated_diagonal(c, left_flank,
                                                         right_flank)),
                         c});
    std::stable_sort(order.begin(), order.end(),
                     [](const Scored& a, const Scored& b) {
                         if (a.closeness != b.closeness)
                             return a.closeness < b.closeness;
                         if (a.m.length != b.m.length)
                             return a.m.length > b.m.length;
                         if (a.m.pos1 != b.m.pos1) return a.m.pos1 < b.m.pos1;
                         return a.m.pos2 < b.m.pos2;
                     });
    ChainSet kept;
    for (const auto& s : order)
        if (fits_between(s.m, kept, left_flank, right_flank)) kept.insert(s.m);
    return {kept.begin(), kept.end()};
}

ResolvedChain merge_chain(const anchoring::AnchorChain& anchors,
                          const std::vector<std::vector<Match>>& gap_seeds) {
    const auto& a = anchors.anchors;
    const size_t ngaps = a.size() + 1;
    assert(gap_seeds.empty() || gap_seeds.size() == ngaps);

    constexpr int64_t kFar = INT64_MAX / 4;
    auto gap_lo = [&](size_t g) -> Match {
        if (g == 0) return Match{0, 0, 0};
        return a[g - 1];
    };
    auto gap_hi = [&](size_t g) -> Match {
        if (g == a.size()) return Match{kFar, kFar, 0};
        return a[g];
    };

    ResolvedChain out;
    for (size_t g = 0; g < ngaps; ++g) {
        if (g > 0) out.items.push_back(a[g - 1]);
        if (g >= gap_seeds.size()) continue;
        const Match lo = gap_lo(g), hi = gap_hi(g);
        ChainSet kept;
        // adaptive seeds have priority; perfect seeds may not displace them
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& s : gap_seeds[g]) {
                const bool adaptive = s.kind == MatchKind::Adaptive;
                if ((pass == 0) != adaptive) continue;
                if (fits_between(s, kept, lo, hi)) kept.insert(s);
            }
        }
        out.items.insert(out.items.end(), kept.begin(), kept.end());
    }
    if (!anchoring::is_monotone(out.items))
        throw std::logic_error("merged chain violates monotonicity");
    return out;
}

}  // namespace mmsaa::chaining
