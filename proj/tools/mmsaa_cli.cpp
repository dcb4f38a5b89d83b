#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmsaa/evalbench.hpp"
#include "mmsaa/oracle.hpp"
#include "mmsaa/pipeline.hpp"
#include "mmsaa/seqio.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResourceCap = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw mmsaa::Error(mmsaa::ErrorCode::BadArgument,
                           "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw mmsaa::Error(mmsaa::ErrorCode::BadArgument,
                           "cannot open output file: " + out_path);
    out << text;
}

std::pair<mmsaa::Sequence, mmsaa::Sequence> load_pair(const std::string& path) {
    auto seqs = mmsaa::seqio::parse_fasta(slurp(path));
    if (seqs.size() < 2)
        throw mmsaa::Error(mmsaa::ErrorCode::MalformedFasta,
                           path + ": need at least 2 FASTA records");
    return {std::move(seqs[0]), std::move(seqs[1])};
}

mmsaa::seqio::OutputFormat parse_format(const std::string& f) {
    if (f == "text") return mmsaa::seqio::OutputFormat::Text;
    if (f == "cigar") return mmsaa::seqio::OutputFormat::Cigar;
    if (f == "tsv") return mmsaa::seqio::OutputFormat::Tsv;
    throw mmsaa::Error(mmsaa::ErrorCode::BadArgument,
                       "unknown format: " + f);
}

struct CommonFlags {
    mmsaa::PipelineConfig config;
    std::vector<int> perfect_lens{4, 2};
    uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        auto& sc = config.scoring;
        cmd->add_option("--match", sc.match, "match score (default 1)");
        cmd->add_option("--mismatch", sc.mismatch, "mismatch score (default -1)");
        cmd->add_option("--gap-open", sc.gap_open, "gap open score (default -2)");
        cmd->add_option("--gap-extend", sc.gap_extend,
                        "gap extend score (default -1)");
        cmd->add_option("--threshold-floor", config.threshold_floor,
                        "minimum MMSS anchor length (default 10)");
        cmd->add_option("--neighborhood", config.neighborhood_fraction,
                        "anchor neighborhood fraction (default 0.6)")
            ->check(CLI::Range(0.0, 1e9));
        cmd->add_option("--adaptive-len", config.seeds.adaptive_length,
                        "adaptive seed length (default 20)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--adaptive-mm", config.seeds.adaptive_max_mismatch,
                        "adaptive seed mismatch budget (default 6)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--perfect-lens", perfect_lens,
                        "perfect seed lengths, coarse to fine (default 4 2)")
            ->delimiter(',');
        cmd->add_option("--proximity", config.seeds.proximity_fraction,
                        "perfect seed proximity fraction (default 1/3)")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--x-drop", config.extension.x_drop,
                        "ungapped extension x-drop (default 10)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--band-pad", config.extension.band_pad,
                        "gap fill band pad (default 16)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--threads", config.threads,
                        "parallel gap seeding threads (default 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "random seed (default 0)");
    }

    mmsaa::PipelineConfig finish() {
        config.seeds.perfect_lengths = perfect_lens;
        return config;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmsaa: staged local DNA sequence aligner"};
    app.require_subcommand(1);

    // align
    auto* align = app.add_subcommand("align", "align the first two FASTA records");
    std::string align_fasta, align_format = "text", align_out;
    CommonFlags align_flags;
    align->add_option("fasta", align_fasta, "input FASTA with >= 2 records")
        ->required();
    align->add_option("--format", align_format, "text|cigar|tsv (default text)");
    align->add_option("--out", align_out, "output path (default stdout)");
    align_flags.attach(align);

    // bench
    auto* bench = app.add_subcommand("bench", "speed/sensitivity protocol on simulated pairs");
    std::vector<int64_t> bench_lengths{1000};
    double bench_sub = 0.05, bench_indel = 0.0, bench_geo = 0.5;
    bool bench_no_times = false;
    std::string bench_out;
    CommonFlags bench_flags;
    bench->add_option("--lengths", bench_lengths, "sequence lengths to run")
        ->delimiter(',');
    bench->add_option("--sub", bench_sub, "substitution rate (default 0.05)")
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--indel", bench_indel, "indel rate (default 0)")
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--indel-geo-p", bench_geo,
                      "geometric indel length parameter (default 0.5)")
        ->check(CLI::Range(1e-9, 1.0));
    bench->add_flag("--no-times", bench_no_times,
                    "omit wall times for byte-stable output");
    bench->add_option("--out", bench_out, "output path (default stdout)");
    bench_flags.attach(bench);

    // oracle
    auto* orc = app.add_subcommand("oracle", "optimal Smith-Waterman baseline");
    std::string orc_fasta, orc_format = "text", orc_out;
    int64_t orc_cap = mmsaa::oracle::kDefaultCellCap;
    CommonFlags orc_flags;
    orc->add_option("fasta", orc_fasta, "input FASTA with >= 2 records")
        ->required();
    orc->add_option("--format", orc_format, "text|cigar|tsv (default text)");
    orc->add_option("--cell-cap", orc_cap, "DP cell cap (default 4e6)");
    orc->add_option("--out", orc_out, "output path (default stdout)");
    orc_flags.attach(orc);

    // eval
    auto* eval = app.add_subcommand("eval", "align and report exon coverage");
    std::string eval_fasta, eval_exons;
    CommonFlags eval_flags;
    eval->add_option("fasta", eval_fasta, "input FASTA with >= 2 records")
        ->required();
    eval->add_option("exons", eval_exons, "exon annotation TSV")->required();
    eval_flags.attach(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    try {
        if (*align) {
            auto [s1, s2] = load_pair(align_fasta);
            auto rec = mmsaa::align_pair(s1, s2, align_flags.finish());
            if (rec.blocks.empty()) {
                write_out("NO_ALIGNMENT\n", align_out);
                return 0;
            }
            write_out(mmsaa::seqio::emit_alignment(rec, parse_format(align_format),
                                                   &s1, &s2),
                      align_out);
        } else if (*bench) {
            mmsaa::evalbench::MutationModel model;
            model.substitution_rate = bench_sub;
            model.indel_rate = bench_indel;
            model.indel_length_geometric_p = bench_geo;
            model.rng_seed = bench_flags.seed;
            auto report = mmsaa::evalbench::run_benchmark(
                bench_lengths, model, bench_flags.finish());
            write_out(mmsaa::evalbench::report_tsv(report, !bench_no_times),
                      bench_out);
        } else if (*orc) {
            auto [s1, s2] = load_pair(orc_fasta);
            auto [score, rec] = mmsaa::oracle::smith_waterman(
                s1, s2, orc_flags.finish().scoring, orc_cap);
            std::ostringstream out;
            out << "score\t" << score << "\n";
            if (!rec.blocks.empty())
                out << mmsaa::seqio::emit_alignment(
                    rec, parse_format(orc_format), &s1, &s2);
            write_out(out.str(), orc_out);
        } else if (*eval) {
            auto [s1, s2] = load_pair(eval_fasta);
            auto ann = mmsaa::seqio::parse_exon_annotation(slurp(eval_exons));
            mmsaa::seqio::validate_annotation(ann, s1.size(), s2.size());
            auto rec = mmsaa::align_pair(s1, s2, eval_flags.finish());
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f\n",
                          rec.blocks.empty()
                              ? 0.0
                              : mmsaa::evalbench::exon_coverage(rec, ann));
            std::cout << buf;
        }
    } catch (const mmsaa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == mmsaa::ErrorCode::SizeCap ? kExitResourceCap
                                                     : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
