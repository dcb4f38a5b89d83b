#include "mmsaa/seqio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mmsaa::seqio {

std::vector<Sequence> parse_fasta(std::string_view text) {
    std::vector<Sequence> out;
    bool in_record = false;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        size_t eol = text.find('\n', i);
        if (eol == std::string_view::npos) eol = n;
        std::string_view line = text.substr(i, eol - i);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            if (line.front() == '>') {
                Sequence s;
                s.id = std::string(line.substr(1));
                // id is the first whitespace-delimited token
                size_t ws = s.id.find_first_of(" \t");
                if (ws != std::string::npos) s.id.resize(ws);
                out.push_back(std::move(s));
                in_record = true;
            } else {
                if (!in_record)
                    throw Error(ErrorCode::MalformedFasta,
                                "FASTA: residue line before any '>' header");
                std::string& res = out.back().residues;
                for (size_t k = 0; k < line.size(); ++k) {
                    char c = static_cast<char>(std::toupper(
                        static_cast<unsigned char>(line[k])));
                    if (c == 'U') c = 'T';
                    if (c != 'A' && c != 'C' && c != 'G' && c != 'T' && c != 'N')
                        throw Error(ErrorCode::IllegalResidue,
                                    "illegal residue '" + std::string(1, line[k]) +
                                        "' at offset " +
                                        std::to_string(res.size()) +
                                        " of record '" + out.back().id + "'");
                    res.push_back(c);
                }
            }
        }
        i = eol + 1;
    }
    return out;
}

std::string emit_fasta(const std::vector<Sequence>& seqs) {
    std::string out;
    for (const auto& s : seqs) {
        out += '>';
        out += s.id;
        out += '\n';
        for (size_t i = 0; i < s.residues.size(); i += 60) {
            out += s.residues.substr(i, 60);
            out += '\n';
        }
        if (s.residues.empty()) out += '\n';
    }
    return out;
}

ExonAnnotation parse_exon_annotation(std::string_view text) {
    ExonAnnotation ann;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        ExonAnnotation::Interval iv{};
        if (!(ls >> iv.s1_begin >> iv.s1_end >> iv.s2_begin >> iv.s2_end))
            throw Error(ErrorCode::BadInterval,
                        "annotation line " + std::to_string(lineno) +
                            ": expected 4 integer columns");
        if (iv.s1_begin < 0 || iv.s2_begin < 0 || iv.s1_begin >= iv.s1_end ||
            iv.s2_begin >= iv.s2_end)
            throw Error(ErrorCode::BadInterval,
                        "annotation line " + std::to_string(lineno) +
                            ": empty or inverted interval");
        ann.intervals.push_back(iv);
    }
    std::sort(ann.intervals.begin(), ann.intervals.end(),
              [](const auto& a, const auto& b) { return a.s1_begin < b.s1_begin; });
    for (size_t k = 1; k < ann.intervals.size(); ++k) {
        if (ann.intervals[k].s1_begin < ann.intervals[k - 1].s1_end)
            throw Error(ErrorCode::OverlappingIntervals,
                        "exon intervals overlap on seq1");
    }
    // seq2 side: sort a copy of the ranges and check pairwise
    std::vector<std::pair<int64_t, int64_t>> r2;
    r2.reserve(ann.intervals.size());
    for (const auto& iv : ann.intervals) r2.emplace_back(iv.s2_begin, iv.s2_end);
    std::sort(r2.begin(), r2.end());
    for (size_t k = 1; k < r2.size(); ++k)
        if (r2[k].first < r2[k - 1].second)
            throw Error(ErrorCode::OverlappingIntervals,
                        "exon intervals overlap on seq2");
    return ann;
}

void validate_annotation(const ExonAnnotation& ann, int64_t len1, int64_t len2) {
    for (const auto& iv : ann.intervals) {
        if (iv.s1_end > len1 || iv.s2_end > len2)
            throw Error(ErrorCode::BadInterval,
                        "exon interval exceeds sequence bounds");
    }
}

void check_record(const AlignmentRecord& rec) {
    int64_t w1 = 0, w2 = 0;
    for (const auto& b : rec.blocks) {
        if (b.length <= 0)
            throw Error(ErrorCode::BadArgument, "alignment block with length <= 0");
        if (b.op != BlockOp::Insert2) w1 += b.length;
        if (b.op != BlockOp::Insert1) w2 += b.length;
    }
    if (w1 != rec.seq1_end - rec.seq1_begin || w2 != rec.seq2_end - rec.seq2_begin)
        throw Error(ErrorCode::BadArgument,
                    "alignment blocks do not cover the stated spans");
}

namespace {

char cigar_op(BlockOp op) {
    switch (op) {
        case BlockOp::Match: return 'M';
        case BlockOp::Mismatch: return 'X';
        case BlockOp::Insert1: return 'I';
        case BlockOp::Insert2: return 'D';
    }
    return '?';
}

std::string emit_text(const AlignmentRecord& rec, const Sequence& s1,
                      const Sequence& s2) {
    std::string row1, mid, row2;
    int64_t p1 = rec.seq1_begin, p2 = rec.seq2_begin;
    for (const auto& b : rec.blocks) {
        for (int64_t k = 0; k < b.length; ++k) {
            switch (b.op) {
                case BlockOp::Match:
                    row1 += s1.residues[p1];
                    row2 += s2.residues[p2];
                    mid += '|';
                    ++p1, ++p2;
                    break;
                case BlockOp::Mismatch:
                    row1 += s1.residues[p1];
                    row2 += s2.residues[p2];
                    mid += ' ';
                    ++p1, ++p2;
                    break;
                case BlockOp::Insert1:
                    row1 += s1.residues[p1];
                    row2 += '-';
                    mid += ' ';
                    ++p1;
                    break;
                case BlockOp::Insert2:
                    row1 += '-';
                    row2 += s2.residues[p2];
                    mid += ' ';
                    ++p2;
                    break;
            }
        }
    }
    std::ostringstream out;
    out << rec.seq1_id << " [" << rec.seq1_begin << "," << rec.seq1_end << ") x "
        << rec.seq2_id << " [" << rec.seq2_begin << "," << rec.seq2_end
        << ") score=" << rec.score << " identity=" << rec.identity << "\n";
    constexpr size_t width = 60;
    for (size_t i = 0; i < row1.size(); i += width) {
        out << row1.substr(i, width) << '\n'
            << mid.substr(i, width) << '\n'
            << row2.substr(i, width) << '\n';
        if (i + width < row1.size()) out << '\n';
    }
    return out.str();
}

}  // namespace

std::string emit_alignment(const AlignmentRecord& rec, OutputFormat format,
                           const Sequence* s1, const Sequence* s2) {
    check_record(rec);
    switch (format) {
        case OutputFormat::Cigar: {
            std::string out;
            for (const auto& b : rec.blocks)
                out += std::to_string(b.length) + cigar_op(b.op);
            out += '\n';
            return out;
        }
        case OutputFormat::Tsv: {
            std::ostringstream out;
            out << rec.seq1_id << '\t' << rec.seq2_id << '\t' << rec.seq1_begin
                << '\t' << rec.seq1_end << '\t' << rec.seq2_begin << '\t'
                << rec.seq2_end << '\t' << rec.score << '\t' << rec.identity
                << '\n';
            return out.str();
        }
        case OutputFormat::Text: {
            if (!s1 || !s2)
                throw Error(ErrorCode::BadArgument,
                            "text output requires both sequences");
            return emit_text(rec, *s1, *s2);
        }
    }
    return {};
}

}  // namespace mmsaa::seqio
