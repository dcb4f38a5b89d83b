#ifndef MMSAA_EVALBENCH_HPP
#define MMSAA_EVALBENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mmsaa/pipeline.hpp"
#include "mmsaa/types.hpp"

namespace mmsaa::evalbench {

struct MutationModel {
    double substitution_rate = 0.0;  // per position; never rewrites to itself
    double indel_rate = 0.0;         // per position
    double indel_length_geometric_p = 0.5;  // mean length 1/p
    uint64_t rng_seed = 0;
};

struct BenchRow {
    int64_t length = 0;
    double wall_time_s = 0.0;
    int64_t assembled_score = 0;
    std::optional<int64_t> oracle_score;
    std::optional<double> score_ratio;
    std::optional<double> exon_coverage;
    std::string error;  // non-empty when the pipeline failed for this row
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Random base sequence of the given length plus a mutated copy. The exon
/// annotation records the conserved segment correspondences implied by the
/// applied indels. Fully deterministic for a fixed seed.
std::tuple<Sequence, Sequence, ExonAnnotation> generate_pair(
    int64_t length, const MutationModel& model);

/// Fraction of the seq1 exon length whose alignment columns (match or
/// mismatch) land inside the paired seq2 range. Always in [0, 1].
double exon_coverage(const AlignmentRecord& record,
                     const ExonAnnotation& annotation);

/// One pipeline run per length: generate, align, time, score against the
/// oracle when the instance fits its cell cap. Row errors are recorded, not
/// propagated.
BenchReport run_benchmark(const std::vector<int64_t>& lengths,
                          const MutationModel& model,
                          const PipelineConfig& config,
                          int64_t oracle_cell_cap = 4'000'000);

/// TSV serialization, header + one row per instance. Wall times are the one
/// nondeterministic column; with_times=false replaces them with "-" so the
/// report is byte-stable across runs.
std::string report_tsv(const BenchReport& report, bool with_times = true);

}  // namespace mmsaa::evalbench

#endif
