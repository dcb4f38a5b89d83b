#ifndef MMSAA_STITCHING_HPP
#define MMSAA_STITCHING_HPP

#include <string_view>
#include <vector>

#include "mmsaa/chaining.hpp"
#include "mmsaa/types.hpp"

namespace mmsaa::stitching {

struct ExtensionParams {
    int x_drop = 10;    // ungapped extension stops x_drop below the running max
    int band_pad = 16;  // extra band half-width for the gap DP
    // hard ceiling on banded DP cells; beyond it a crude (valid but
    // suboptimal) fill is emitted instead of widening the band further
    int64_t fill_cell_cap = 500'000'000;
};

/// X-drop ungapped extension of a chain item, first right then left, within
/// [lb1,rb1) x [lb2,rb2). Each direction is trimmed back to its running
/// score maximum. Mismatch count of the result is recomputed.
Match extend_ungapped(const Sequence& s1, const Sequence& s2, const Match& m,
                      int64_t lb1, int64_t lb2, int64_t rb1, int64_t rb2,
                      const ExtensionParams& params,
                      const ScoringScheme& scoring);

/// Global affine-gap alignment of two residual gap slices, computed in a
/// diagonal band of half-width |len(a) - len(b)| + band_pad. The band is
/// widened and the fill re-run until the in-band optimum provably beats any
/// path leaving the band, so the returned score equals the unbanded optimum
/// (up to fill_cell_cap, beyond which a valid but crude fill is emitted).
std::vector<AlignmentBlock> fill_gap(std::string_view a, std::string_view b,
                                     const ScoringScheme& scoring,
                                     int band_pad,
                                     int64_t cell_cap = 500'000'000);

/// Score of a block list under the scheme (each gap run opens once).
int64_t score_blocks(const std::vector<AlignmentBlock>& blocks,
                     const ScoringScheme& scoring);

/// Left-to-right pass over the chain: extend every item, fill every residual
/// gap, concatenate the blocks, recompute score and identity. Unaligned
/// sequence tails are excluded (local alignment). Throws Error{EmptyChain}
/// when the chain has no items.
AlignmentRecord assemble(const Sequence& s1, const Sequence& s2,
                         const chaining::ResolvedChain& chain,
                         const ExtensionParams& params,
                         const ScoringScheme& scoring);

}  // namespace mmsaa::stitching

#endif
