#ifndef MMSAA_CHAINING_HPP
#define MMSAA_CHAINING_HPP

#include <vector>

#include "mmsaa/anchoring.hpp"
#include "mmsaa/types.hpp"

namespace mmsaa::chaining {

/// The merged global chain: anchors plus admitted seeds, strictly increasing
/// in both coordinates, provenance retained per item.
struct ResolvedChain {
    std::vector<Match> items;
};

inline int64_t diagonal(const Match& m) { return m.pos2 - m.pos1; }

/// Pick a maximal non-crossing, non-overlapping subset of the candidates
/// lying between the two flanks. Conflicts are resolved by "closeness": the
/// candidate whose diagonal is nearer the diagonal interpolated between the
/// flanks (linearly, at the candidate's seq1 midpoint) wins; ties go to the
/// longer candidate, then smaller pos1, then smaller pos2. Flanks may be
/// zero-length sentinels marking gap corners. Result sorted by pos1.
std::vector<Match> resolve_non_crossing(const std::vector<Match>& candidates,
                                        const Match& left_flank,
                                        const Match& right_flank);

/// Merge the anchor chain with per-gap seed lists (gap_seeds[i] bridges the
/// i-th gap: leading, between anchors, trailing — one more list than there
/// are anchors; with no anchors, a single list). Adaptive seeds are admitted
/// before perfect seeds within each gap; anything violating monotonicity
/// against already-admitted items is dropped. Anchors are never displaced.
ResolvedChain merge_chain(const anchoring::AnchorChain& anchors,
                          const std::vector<std::vector<Match>>& gap_seeds);

}  // namespace mmsaa::chaining

#endif
