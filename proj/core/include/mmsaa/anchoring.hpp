#ifndef MMSAA_ANCHORING_HPP
#define MMSAA_ANCHORING_HPP

#include <vector>

#include "mmsaa/types.hpp"

namespace mmsaa::anchoring {

/// Backbone chain of MMSS anchors, ordered by pos1, strictly increasing in
/// both coordinates (non-overlapping and non-crossing).
struct AnchorChain {
    std::vector<Match> anchors;
    Match origin;  // the longest MMSS the chain was grown from
};

/// Anchor admission threshold: max(ceil(longest / 3), floor).
/// Throws Error{EmptyMatchSet} when mmss is empty; the caller is expected to
/// fall back to seeding the whole sequence pair.
int64_t length_threshold(const std::vector<Match>& mmss, int64_t floor);

/// Greedy neighborhood chain. Starts at the longest MMSS and grows in both
/// directions; on each side the longest candidate is admitted whose start is
/// within fraction * current_anchor_length of the current anchor's end in
/// BOTH sequences and which keeps the chain strictly monotone. A side stops
/// when no candidate qualifies. Ties: longer first, then smaller pos1, pos2.
AnchorChain build_neighborhood_chain(const std::vector<Match>& mmss,
                                     double fraction = 0.6);

/// True iff consecutive items are strictly increasing in both coordinates.
bool is_monotone(const std::vector<Match>& items);

}  // namespace mmsaa::anchoring

#endif
