#ifndef MMSAA_TYPES_HPP
#define MMSAA_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmsaa {

enum class ErrorCode {
    MalformedFasta,
    IllegalResidue,
    BadInterval,
    OverlappingIntervals,
    EmptyMatchSet,
    SizeCap,
    EmptyChain,
    BadArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// A validated DNA sequence over {A,C,G,T,N}, uppercase.
struct Sequence {
    std::string id;
    std::string residues;

    int64_t size() const { return static_cast<int64_t>(residues.size()); }
};

/// Corresponding exon regions on both sequences, half-open coordinates,
/// sorted by seq1_begin, non-overlapping within each sequence.
struct ExonAnnotation {
    struct Interval {
        int64_t s1_begin, s1_end;
        int64_t s2_begin, s2_end;
    };
    std::vector<Interval> intervals;
};

enum class MatchKind : uint8_t { Mmss, Adaptive, Perfect4, Perfect2 };

/// A pair of equal-length regions, one per sequence. The currency of every
/// pipeline stage: MMSS anchors, adaptive seeds and perfect seeds all use it.
struct Match {
    int64_t pos1 = 0;
    int64_t pos2 = 0;
    int64_t length = 0;
    int32_t mismatches = 0;
    MatchKind kind = MatchKind::Mmss;

    int64_t end1() const { return pos1 + length; }
    int64_t end2() const { return pos2 + length; }
    int64_t diagonal() const { return pos2 - pos1; }

    friend bool operator==(const Match& a, const Match& b) {
        return a.pos1 == b.pos1 && a.pos2 == b.pos2 && a.length == b.length;
    }
    friend auto operator<=>(const Match& a, const Match& b) {
        if (auto c = a.pos1 <=> b.pos1; c != 0) return c;
        if (auto c = a.pos2 <=> b.pos2; c != 0) return c;
        return a.length <=> b.length;
    }
};

enum class BlockOp : uint8_t {
    Match,     // equal residues, one column
    Mismatch,  // differing residues, one column
    Insert1,   // residue in seq1 only (gap in the seq2 row; CIGAR 'I')
    Insert2,   // residue in seq2 only (gap in the seq1 row; CIGAR 'D')
};

struct AlignmentBlock {
    BlockOp op;
    int64_t length;

    friend bool operator==(const AlignmentBlock&, const AlignmentBlock&) = default;
};

/// Final column-level alignment as run-length blocks plus spans and stats.
/// Coordinates are 0-based half-open.
struct AlignmentRecord {
    std::string seq1_id, seq2_id;
    std::vector<AlignmentBlock> blocks;
    int64_t seq1_begin = 0, seq1_end = 0;
    int64_t seq2_begin = 0, seq2_end = 0;
    int64_t score = 0;
    double identity = 0.0;
};

/// match > 0, mismatch < 0, gap_open < 0, gap_extend < 0.
/// A gap of length k costs gap_open + (k - 1) * gap_extend; setting
/// gap_open == gap_extend gives linear gap costs.
struct ScoringScheme {
    int match = 1;
    int mismatch = -1;
    int gap_open = -2;
    int gap_extend = -1;

    int64_t gap_cost(int64_t len) const {
        return len <= 0 ? 0 : gap_open + (len - 1) * static_cast<int64_t>(gap_extend);
    }
};

/// Residue equality for alignment purposes: 'N' matches nothing, not even
/// another 'N'.
inline bool residues_equal(char a, char b) {
    return a == b && a != 'N';
}

}  // namespace mmsaa

#endif
