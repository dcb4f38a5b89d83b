#ifndef MMSAA_ORACLE_HPP
#define MMSAA_ORACLE_HPP

#include <vector>

#include "mmsaa/types.hpp"

namespace mmsaa::oracle {

/// Verification baselines only: intentionally simple, quadratic code.

constexpr int64_t kDefaultCellCap = 4'000'000;

/// Optimal local alignment score and one optimal traceback under affine
/// gaps (Gotoh three-matrix formulation; gap_open == gap_extend gives the
/// linear-gap textbook recurrence). Throws Error{SizeCap} when m*n exceeds
/// cell_cap.
std::pair<int64_t, AlignmentRecord> smith_waterman(
    const Sequence& s1, const Sequence& s2, const ScoringScheme& scoring,
    int64_t cell_cap = kDefaultCellCap);

/// All maximal exact match pairs by direct all-pairs extension with
/// left/right maximality checks. Throws Error{SizeCap} when |s1|*|s2|
/// exceeds cell_cap. Sorted by (pos1, pos2, length).
std::vector<Match> brute_force_mems(const Sequence& s1, const Sequence& s2,
                                    int64_t cell_cap = 1'000'000);

}  // namespace mmsaa::oracle

#endif
