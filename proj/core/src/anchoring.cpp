#include "mmsaa/anchoring.hpp"

#include <algorithm>
#include <cassert>

namespace mmsaa::anchoring {

int64_t length_threshold(const std::vector<Match>& mmss, int64_t floor) {
    if (mmss.empty())
        throw Error(ErrorCode::EmptyMatchSet, "no MMSS to derive a threshold from");
    int64_t longest = 0;
    for (const auto& m : mmss) longest = std::max(longest, m.length);
    return std::max((longest + 2) / 3, floor);
}

bool is_monotone(const std::vector<Match>& items) {
    for (size_t i = 1; i < items.size(); ++i)
        if (items[i - 1].end1() > items[i].pos1 ||
            items[i - 1].end2() > items[i].pos2)
            return false;
    return true;
}

namespace {

// longer first, then smaller pos1, then smaller pos2
bool better_candidate(const Match& a, const Match& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.pos1 != b.pos1) return a.pos1 < b.pos1;
    return a.pos2 < b.pos2;
}

}  // namespace

AnchorChain build_neighborhood_chain(const std::vector<Match>& mmss,
                                     double fraction) {
    AnchorChain chain;
    if (mmss.empty()) return chain;

    const Match* origin = &mmss.front();
    for (const auto& m : mmss)
        if (better_candidate(m, *origin)) origin = &m;
    chain.origin = *origin;

    std::vector<Match> right, left;
    // forward side
    Match cur = *origin;
    for (;;) {
        const double reach = fraction * static_cast<double>(cur.length);
        const Match* best = nullptr;
        for (const auto& c : mmss) {
            if (c.pos1 < cur.end1() || c.pos2 < cur.end2()) continue;
            if (static_cast<double>(c.pos1 - cur.end1()) > reach) continue;
            if (static_cast<double>(c.pos2 - cur.end2()) > reach) continue;
            if (!best || better_candidate(c, *best)) best = &c;
        }
        if (!best) break;
        right.push_back(*best);
        cur = *best;
    }
    // backward side, mirrored: candidate's end within reach of cur's start
    cur = *origin;
    for (;;) {
        const double reach = fraction * static_cast<double>(cur.length);
        const Match* best = nullptr;
        for (const auto& c : mmss) {
            if (c.end1() > cur.pos1 || c.end2() > cur.pos2) continue;
            if (static_cast<double>(cur.pos1 - c.end1()) > reach) continue;
            if (static_cast<double>(cur.pos2 - c.end2()) > reach) continue;
            if (!best || better_candidate(c, *best)) best = &c;
        }
        if (!best) break;
        left.push_back(*best);
        cur = *best;
    }

    chain.anchors.assign(left.rbegin(), left.rend());
    chain.anchors.push_back(*origin);
    chain.anchors.insert(chain.anchors.end(), right.begin(), right.end());
    assert(is_monotone(chain.anchors));
    return chain;
}

}  // namespace mmsaa::anchoring
