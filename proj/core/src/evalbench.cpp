#include "mmsaa/evalbench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "mmsaa/oracle.hpp"

namespace mmsaa::evalbench {

namespace {
constexpr char kBases[] = {'A', 'C', 'G', 'T'};
}

std::tuple<Sequence, Sequence, ExonAnnotation> generate_pair(
    int64_t length, const MutationModel& model) {
    std::mt19937_64 rng(model.rng_seed);
    std::uniform_int_distribution<int> base(0, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::geometric_distribution<int64_t> geo(model.indel_length_geometric_p);

    Sequence s1{"sim1", {}};
    s1.residues.reserve(length);
    for (int64_t i = 0; i < length; ++i) s1.residues.push_back(kBases[base(rng)]);

    Sequence s2{"sim2", {}};
    s2.residues.reserve(length);
    ExonAnnotation ann;

    int64_t seg1 = 0, seg2 = 0;  // start of the current conserved segment
    auto flush = [&](int64_t i) {
        const int64_t p = static_cast<int64_t>(s2.residues.size());
        if (i > seg1 && p > seg2)
            ann.intervals.push_back({seg1, i, seg2, p});
    };

    int64_t i = 0;
    while (i < length) {
        if (model.indel_rate > 0.0 && unit(rng) < model.indel_rate) {
            flush(i);
            const int64_t len = 1 + geo(rng);
            if (unit(rng) < 0.5) {
                i = std::min(length, i + len);  // deletion from s1's copy
            } else {
                for (int64_t k = 0; k < len; ++k)
                    s2.residues.push_back(kBases[base(rng)]);  // insertion
            }
            seg1 = i;
            seg2 = static_cast<int64_t>(s2.residues.size());
            continue;
        }
        char c = s1.residues[i];
        if (model.substitution_rate > 0.0 && unit(rng) < model.substitution_rate) {
            char r;
            do {
                r = kBases[base(rng)];
            } while (r == c);
            c = r;
        }
        s2.residues.push_back(c);
        ++i;
    }
    flush(length);
    return {std::move(s1), std::move(s2), std::move(ann)};
}

double exon_coverage(const AlignmentRecord& record,
                     const ExonAnnotation& annotation) {
    int64_t total = 0;
    for (const auto& iv : annotation.intervals) total += iv.s1_end - iv.s1_begin;
    if (total == 0) return 0.0;

    int64_t covered = 0;
    int64_t p1 = record.seq1_begin, p2 = record.seq2_begin;
    size_t iv_idx = 0;
    const auto& ivs = annotation.intervals;
    for (const auto& b : record.blocks) {
        switch (b.op) {
            case BlockOp::Match:
            case BlockOp::Mismatch:
                for (int64_t k = 0; k < b.length; ++k, ++p1, ++p2) {
                    while (iv_idx < ivs.size() && ivs[iv_idx].s1_end <= p1)
                        ++iv_idx;
                    if (iv_idx < ivs.size() && p1 >= ivs[iv_idx].s1_begin &&
                        p1 < ivs[iv_idx].s1_end && p2 >= ivs[iv_idx].s2_begin &&
                        p2 < ivs[iv_idx].s2_end)
                        ++covered;
                }
                break;
            case BlockOp::Insert1: p1 += b.length; break;
            case BlockOp::Insert2: p2 += b.length; break;
        }
    }
    return static_cast<double>(covered) / static_cast<double>(total);
}

BenchReport run_benchmark(const std::vector<int64_t>& lengths,
                          const MutationModel& model,
                          const PipelineConfig& config,
                          int64_t oracle_cell_cap) {
    BenchReport report;
    uint64_t seed = model.rng_seed;
    for (int64_t len : lengths) {
        BenchRow row;
        row.length = len;
        try {
            MutationModel m = model;
            m.rng_seed = seed++;
            auto [s1, s2, ann] = generate_pair(len, m);
            const auto t0 = std::chrono::steady_clock::now();
            AlignmentRecord rec = align_pair(s1, s2, config);
            const auto t1 = std::chrono::steady_clock::now();
            row.wall_time_s =
                std::chrono::duration<double>(t1 - t0).count();
            row.assembled_score = rec.score;
            if (s1.size() * s2.size() <= oracle_cell_cap) {
                auto [opt, orec] =
                    oracle::smith_waterman(s1, s2, config.scoring, oracle_cell_cap);
                (void)orec;
                row.oracle_score = opt;
                if (opt > 0)
                    row.score_ratio = std::max(
                        0.0, static_cast<double>(rec.score) /
                                 static_cast<double>(opt));
            }
            if (!rec.blocks.empty())
                row.exon_coverage = exon_coverage(rec, ann);
            else
                row.exon_coverage = 0.0;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_tsv(const BenchReport& report, bool with_times) {
    std::ostringstream out;
    out << "length\twall_time_s\tscore\toracle_score\tscore_ratio\t"
           "exon_coverage\terror\n";
    out.precision(6);
    out << std::fixed;
    for (const auto& r : report.rows) {
        out << r.length << '\t';
        if (with_times)
            out << r.wall_time_s;
        else
            out << '-';
        out << '\t' << r.assembled_score << '\t';
        if (r.oracle_score)
            out << *r.oracle_score;
        else
            out << '-';
        out << '\t';
        if (r.score_ratio)
            out << *r.score_ratio;
        else
            out << '-';
        out << '\t';
        if (r.exon_coverage)
            out << *r.exon_coverage;
        else
            out << '-';
        out << '\t' << (r.error.empty() ? "-" : r.error) << '\n';
    }
    return out.str();
}

}  // namespace mmsaa::evalbench
