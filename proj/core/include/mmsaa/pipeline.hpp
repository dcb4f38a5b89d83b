#ifndef MMSAA_PIPELINE_HPP
#define MMSAA_PIPELINE_HPP

#include "mmsaa/seeding.hpp"
#include "mmsaa/stitching.hpp"
#include "mmsaa/types.hpp"

namespace mmsaa {

struct PipelineConfig {
    int64_t threshold_floor = 10;
    double neighborhood_fraction = 0.6;
    seeding::SeedParams seeds;
    stitching::ExtensionParams extension;
    ScoringScheme scoring;
    int threads = 1;
};

/// The full five-stage alignment: MMSS anchors, neighborhood chain, adaptive
/// and perfect seeding of the gaps, non-crossing merge, stitching. When no
/// MMSS clears the threshold the whole pair is seeded as a single gap. An
/// empty result (no anchors and no seeds at all) comes back as a record with
/// no blocks and score 0.
AlignmentRecord align_pair(const Sequence& s1, const Sequence& s2,
                           const PipelineConfig& config);

}  // namespace mmsaa

#endif
