#ifndef MMSAA_SEEDING_HPP
#define MMSAA_SEEDING_HPP

#include <vector>

#include "mmsaa/anchoring.hpp"
#include "mmsaa/types.hpp"

namespace mmsaa::seeding {

/// A region strictly between two consecutive chain anchors, or between a
/// sequence end and the terminal anchor. Half-open, absolute coordinates.
struct GapRegion {
    int64_t s1_begin, s1_end;
    int64_t s2_begin, s2_end;

    int64_t w1() const { return s1_end - s1_begin; }
    int64_t w2() const { return s2_end - s2_begin; }
};

struct SeedParams {
    int adaptive_length = 20;
    int adaptive_max_mismatch = 6;
    std::vector<int> perfect_lengths{4, 2};
    double proximity_fraction = 1.0 / 3.0;

    // Implementation strategy switches for adaptive seed search. Below
    // descent_area_cap (w1*w2) the suffix-tree descent is used; below
    // scan_area_cap a direct all-pairs Hamming scan; beyond that a scan
    // banded around the corner-to-corner diagonal with half-width
    // |w1 - w2| + adaptive_band_pad. The first two strategies return the
    // exact all-pairs answer.
    int64_t descent_area_cap = 1 << 18;
    int64_t scan_area_cap = 64'000'000;
    int64_t adaptive_band_pad = 64;

    // Perfect seeds are skipped in sub-gaps larger than this (w1*w2); such
    // regions fall through to the banded gap fill during stitching.
    int64_t perfect_area_cap = 4'000'000;
};

/// Gap regions induced by a chain over sequences of the given lengths:
/// leading, inter-anchor, and trailing. Zero-width regions are kept (they
/// simply yield no seeds).
std::vector<GapRegion> gap_regions(const anchoring::AnchorChain& chain,
                                   int64_t len1, int64_t len2);

/// All position pairs inside the gap whose adaptive_length-mers are within
/// adaptive_max_mismatch Hamming distance ('N' mismatches everything).
/// Absolute coordinates, sorted by (pos1, pos2), mismatch count recorded.
std::vector<Match> find_adaptive_seeds(const Sequence& s1, const Sequence& s2,
                                       const GapRegion& gap,
                                       const SeedParams& params);

/// Staged perfect seeds: exact 4-mers near the placed features (adaptive
/// seeds, or the gap boundary when there are none), resolved non-crossing;
/// then exact 2-mers in the sub-gaps still uncovered. A seed qualifies when,
/// in each sequence, its distance to the nearer enclosing feature is at most
/// proximity_fraction times the sub-gap span. Returned sorted by pos1 and
/// already consistent (non-crossing) with `placed`.
std::vector<Match> find_perfect_seeds(const Sequence& s1, const Sequence& s2,
                                      const GapRegion& gap,
                                      const std::vector<Match>& placed,
                                      const SeedParams& params);

}  // namespace mmsaa::seeding

#endif
