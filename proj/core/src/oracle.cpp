#include "mmsaa/oracle.hpp"

#include <algorithm>
#include <limits>

namespace mmsaa::oracle {

namespace {
constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min() / 4;

void push_block(std::vector<AlignmentBlock>& blocks, BlockOp op, int64_t len) {
    if (len <= 0) return;
    if (!blocks.empty() && blocks.back().op == op)
        blocks.back().length += len;
    else
        blocks.push_back(AlignmentBlock{op, len});
}
}  // namespace

std::pair<int64_t, AlignmentRecord> smith_waterman(const Sequence& s1,
                                                   const Sequence& s2,
                                                   const ScoringScheme& sc,
                                                   int64_t cell_cap) {
    const int64_t m = s1.size(), n = s2.size();
    if (m * n > cell_cap)
        throw Error(ErrorCode::SizeCap,
                    "instance of " + std::to_string(m * n) +
                        " cells exceeds the oracle cap of " +
                        std::to_string(cell_cap));

    AlignmentRecord rec;
    rec.seq1_id = s1.id;
    rec.seq2_id = s2.id;
    if (m == 0 || n == 0) return {0, rec};

    const size_t cols = static_cast<size_t>(n) + 1;
    auto at = [cols](int64_t i, int64_t j) {
        return static_cast<size_t>(i) * cols + static_cast<size_t>(j);
    };
    std::vector<int64_t> H((m + 1) * cols, 0);
    std::vector<int64_t> E((m + 1) * cols, kNegInf);  // gap in s2 (Insert1)
    std::vector<int64_t> F((m + 1) * cols, kNegInf);  // gap in s1 (Insert2)

    int64_t best = 0, bi = 0, bj = 0;
    for (int64_t i = 1; i <= m; ++i) {
        for (int64_t j = 1; j <= n; ++j) {
            E[at(i, j)] = std::max(H[at(i - 1, j)] + sc.gap_open,
                                   E[at(i - 1, j)] + sc.gap_extend);
            F[at(i, j)] = std::max(H[at(i, j - 1)] + sc.gap_open,
                                   F[at(i, j - 1)] + sc.gap_extend);
            const int64_t diag =
                H[at(i - 1, j - 1)] +
                (residues_equal(s1.residues[i - 1], s2.residues[j - 1])
                     ? sc.match
                     : sc.mismatch);
            int64_t h = std::max<int64_t>(0, diag);
            h = std::max(h, E[at(i, j)]);
            h = std::max(h, F[at(i, j)]);
            H[at(i, j)] = h;
            if (h > best) {
                best = h;
                bi = i;
                bj = j;
            }
        }
    }
    if (best == 0) return {0, rec};

    // traceback from the best cell down to the first zero H cell
    std::vector<AlignmentBlock> rev;
    int64_t i = bi, j = bj;
    enum class St { H, E, F } st = St::H;
    while (true) {
        if (st == St::H) {
            if (H[at(i, j)] == 0) break;
            if (H[at(i, j)] == E[at(i, j)]) {
                st = St::E;
            } else if (H[at(i, j)] == F[at(i, j)]) {
                st = St::F;
            } else {
                push_block(rev,
                           residues_equal(s1.residues[i - 1], s2.residues[j - 1])
                               ? BlockOp::Match
                               : BlockOp::Mismatch,
                           1);
                --i;
                --j;
            }
        } else if (st == St::E) {
            push_block(rev, BlockOp::Insert1, 1);
            st = E[at(i, j)] == H[at(i - 1, j)] + sc.gap_open ? St::H : St::E;
            --i;
        } else {
            push_block(rev, BlockOp::Insert2, 1);
            st = F[at(i, j)] == H[at(i, j - 1)] + sc.gap_open ? St::H : St::F;
            --j;
        }
    }
    std::reverse(rev.begin(), rev.end());
    for (const auto& b : rev) push_block(rec.blocks, b.op, b.length);
    rec.seq1_begin = i;
    rec.seq2_begin = j;
    rec.seq1_end = bi;
    rec.seq2_end = bj;
    rec.score = best;
    int64_t match_cols = 0, total = 0;
    for (const auto& b : rec.blocks) {
        total += b.length;
        if (b.op == BlockOp::Match) match_cols += b.length;
    }
    rec.identity = total ? static_cast<double>(match_cols) / total : 0.0;
    return {best, rec};
}

std::vector<Match> brute_force_mems(const Sequence& s1, const Sequence& s2,
                                    int64_t cell_cap) {
    const int64_t m = s1.size(), n = s2.size();
    if (m * n > cell_cap)
        throw Error(ErrorCode::SizeCap, "brute-force MEM instance too large");
    std::vector<Match> out;
    for (int64_t i = 0; i < m; ++i) {
        for (int64_t j = 0; j < n; ++j) {
            if (!residues_equal(s1.residues[i], s2.residues[j])) continue;
            // left-maximal start?
            if (i > 0 && j > 0 &&
                residues_equal(s1.residues[i - 1], s2.residues[j - 1]))
                continue;
            int64_t len = 1;
            while (i + len < m && j + len < n &&
                   residues_equal(s1.residues[i + len], s2.residues[j + len]))
                ++len;
            out.push_back(Match{i, j, len, 0, MatchKind::Mmss});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mmsaa::oracle
