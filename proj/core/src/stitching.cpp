#include "mmsaa/stitching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace mmsaa::stitching {

namespace {

constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min() / 4;

void push_block(std::vector<AlignmentBlock>& blocks, BlockOp op, int64_t len) {
    if (len <= 0) return;
    if (!blocks.empty() && blocks.back().op == op)
        blocks.back().length += len;
    else
        blocks.push_back(AlignmentBlock{op, len});
}

std::vector<AlignmentBlock> crude_fill(std::string_view a, std::string_view b,
                                       const ScoringScheme&) {
    // valid but not optimal; used only above the cell cap
    std::vector<AlignmentBlock> blocks;
    const int64_t la = static_cast<int64_t>(a.size());
    const int64_t lb = static_cast<int64_t>(b.size());
    const int64_t diag = std::min(la, lb);
    for (int64_t i = 0; i < diag; ++i)
        push_block(blocks,
                   residues_equal(a[i], b[i]) ? BlockOp::Match : BlockOp::Mismatch,
                   1);
    push_block(blocks, BlockOp::Insert1, la - diag);
    push_block(blocks, BlockOp::Insert2, lb - diag);
    return blocks;
}

struct BandedResult {
    std::vector<AlignmentBlock> blocks;
    bool touched_edge = false;
};

BandedResult banded_global(std::string_view a, std::string_view b,
                           const ScoringScheme& sc, int64_t pad) {
    const int64_t la = static_cast<int64_t>(a.size());
    const int64_t lb = static_cast<int64_t>(b.size());
    const int64_t shift = lb - la;
    const int64_t dmin = std::min<int64_t>(0, shift) - pad;
    const int64_t dmax = std::max<int64_t>(0, shift) + pad;
    const int64_t W = dmax - dmin + 1;
    const bool full_band = dmin <= -la && dmax >= lb;

    auto in_band = [&](int64_t i, int64_t j) {
        return i >= 0 && i <= la && j >= 0 && j <= lb && j - i >= dmin &&
               j - i <= dmax;
    };
    auto idx = [&](int64_t i, int64_t j) { return i * W + (j - i - dmin); };

    std::vector<int64_t> H(static_cast<size_t>((la + 1) * W), kNegInf);
    std::vector<int64_t> E(H.size(), kNegInf), F(H.size(), kNegInf);
    // tb bits: 0-1 H source (0 diag, 1 E, 2 F), 2 E opened, 3 F opened
    std::vector<uint8_t> tb(H.size(), 0);

    for (int64_t i = 0; i <= la; ++i) {
        const int64_t jlo = std::max<int64_t>(0, i + dmin);
        const int64_t jhi = std::min<int64_t>(lb, i + dmax);
        for (int64_t j = jlo; j <= jhi; ++j) {
            const size_t k = idx(i, j);
            if (i == 0 && j == 0) {
                H[k] = 0;
                continue;
            }
            int64_t e = kNegInf, f = kNegInf, hd = kNegInf;
            uint8_t code = 0;
            if (i > 0 && in_band(i - 1, j)) {
                const size_t up = idx(i - 1, j);
                const int64_t open = H[up] == kNegInf ? kNegInf : H[up] + sc.gap_open;
                const int64_t ext = E[up] == kNegInf ? kNegInf : E[up] + sc.gap_extend;
                if (open >= ext) {
                    e = open;
                    code |= 1 << 2;
                } else {
                    e = ext;
                }
            }
            if (j > 0 && in_band(i, j - 1)) {
                const size_t lt = idx(i, j - 1);
                const int64_t open = H[lt] == kNegInf ? kNegInf : H[lt] + sc.gap_open;
                const int64_t ext = F[lt] == kNegInf ? kNegInf : F[lt] + sc.gap_extend;
                if (open >= ext) {
                    f = open;
                    code |= 1 << 3;
                } else {
                    f = ext;
                }
            }
            if (i > 0 && j > 0 && in_band(i - 1, j - 1)) {
                const size_t dg = idx(i - 1, j - 1);
                if (H[dg] != kNegInf)
                    hd = H[dg] + (residues_equal(a[i - 1], b[j - 1]) ? sc.match
                                                                     : sc.mismatch);
            }
            E[k] = e;
            F[k] = f;
            int64_t h = hd;
            uint8_t src = 0;
            if (e > h) {
                h = e;
                src = 1;
            }
            if (f > h) {
                h = f;
                src = 2;
            }
            H[k] = h;
            tb[k] = code | src;
        }
    }

    BandedResult res;
    int64_t i = la, j = lb;
    enum class St { H, E, F } st = St::H;
    std::vector<AlignmentBlock> rev;
    while (i != 0 || j != 0) {
        if (!full_band && (j - i == dmin || j - i == dmax))
            res.touched_edge = true;
        const size_t k = idx(i, j);
        switch (st) {
            case St::H: {
                const uint8_t src = tb[k] & 3;
                if (src == 1) {
                    st = St::E;
                } else if (src == 2) {
                    st = St::F;
                } else {
                    push_block(rev,
                               residues_equal(a[i - 1], b[j - 1])
                                   ? BlockOp::Match
                                   : BlockOp::Mismatch,
                               1);
                    --i;
                    --j;
                }
                break;
            }
            case St::E:
                push_block(rev, BlockOp::Insert1, 1);
                st = (tb[k] & (1 << 2)) ? St::H : St::E;
                --i;
                break;
            case St::F:
                push_block(rev, BlockOp::Insert2, 1);
                st = (tb[k] & (1 << 3)) ? St::H : St::F;
                --j;
                break;
        }
    }
    std::reverse(rev.begin(), rev.end());
    // reversal can leave split runs adjacent; merge them
    std::vector<AlignmentBlock> blocks;
    for (const auto& bl : rev) push_block(blocks, bl.op, bl.length);
    res.blocks = std::move(blocks);
    return res;
}

}  // namespace

std::vector<AlignmentBlock> fill_gap(std::string_view a, std::string_view b,
                                     const ScoringScheme& scoring, int band_pad,
                                     int64_t cell_cap) {
    std::vector<AlignmentBlock> blocks;
    if (a.empty() && b.empty()) return blocks;
    if (a.empty()) {
        push_block(blocks, BlockOp::Insert2, static_cast<int64_t>(b.size()));
        return blocks;
    }
    if (b.empty()) {
        push_block(blocks, BlockOp::Insert1, static_cast<int64_t>(a.size()));
        return blocks;
    }
    const int64_t la = static_cast<int64_t>(a.size());
    const int64_t lb = static_cast<int64_t>(b.size());
    const int64_t shift = lb - la;
    int64_t pad = std::max(1, band_pad);
    for (;;) {
        const int64_t width =
            std::llabs(lb - la) + 2 * pad + 1;
        if ((la + 1) * width > cell_cap) return crude_fill(a, b, scoring);
        BandedResult res = banded_global(a, b, scoring, pad);
        const bool full_band =
            std::min<int64_t>(0, shift) - pad <= -la &&
            std::max<int64_t>(0, shift) + pad >= lb;
        if (full_band) return res.blocks;
        // Any path leaving the band carries at least |shift| + 2*(pad+1) gap
        // columns split over >= 2 runs; if the in-band optimum already beats
        // the best score such a path could reach, it is the global optimum.
        const int64_t subst_best = std::max(scoring.match, scoring.mismatch);
        const int64_t g = std::llabs(shift) + 2 * (pad + 1);
        const int64_t escape_bound =
            std::min(la, lb) * std::max<int64_t>(0, subst_best) +
            std::max(2 * scoring.gap_open + (g - 2) * scoring.gap_extend,
                     g * scoring.gap_open);
        if (score_blocks(res.blocks, scoring) >= escape_bound)
            return res.blocks;
        pad = std::min(pad * 2 + 16, la + lb);  // la+lb covers the full matrix
    }
}

int64_t score_blocks(const std::vector<AlignmentBlock>& blocks,
                     const ScoringScheme& scoring) {
    int64_t score = 0;
    for (const auto& b : blocks) {
        switch (b.op) {
            case BlockOp::Match: score += scoring.match * b.length; break;
            case BlockOp::Mismatch: score += scoring.mismatch * b.length; break;
            case BlockOp::Insert1:
            case BlockOp::Insert2: score += scoring.gap_cost(b.length); break;
        }
    }
    return score;
}

Match extend_ungapped(const Sequence& s1, const Sequence& s2, const Match& m,
                      int64_t lb1, int64_t lb2, int64_t rb1, int64_t rb2,
                      const ExtensionParams& params,
                      const ScoringScheme& scoring) {
    Match out = m;
    // right
    {
        const int64_t limit = std::min(rb1 - m.end1(), rb2 - m.end2());
        int64_t run = 0, best = 0, best_len = 0;
        for (int64_t i = 0; i < limit; ++i) {
            run += residues_equal(s1.residues[m.end1() + i],
                                  s2.residues[m.end2() + i])
                       ? scoring.match
                       : scoring.mismatch;
            if (run > best) {
                best = run;
                best_len = i + 1;
            }
            if (run <= best - params.x_drop) break;
        }
        out.length += best_len;
    }
    // left
    {
        const int64_t limit = std::min(m.pos1 - lb1, m.pos2 - lb2);
        int64_t run = 0, best = 0, best_len = 0;
        for (int64_t i = 1; i <= limit; ++i) {
            run += residues_equal(s1.residues[m.pos1 - i],
                                  s2.residues[m.pos2 - i])
                       ? scoring.match
                       : scoring.mismatch;
            if (run > best) {
                best = run;
                best_len = i;
            }
            if (run <= best - params.x_drop) break;
        }
        out.pos1 -= best_len;
        out.pos2 -= best_len;
        out.length += best_len;
    }
    int32_t mism = 0;
    for (int64_t i = 0; i < out.length; ++i)
        if (!residues_equal(s1.residues[out.pos1 + i],
                            s2.residues[out.pos2 + i]))
            ++mism;
    out.mismatches = mism;
    return out;
}

AlignmentRecord assemble(const Sequence& s1, const Sequence& s2,
                         const chaining::ResolvedChain& chain,
                         const ExtensionParams& params,
                         const ScoringScheme& scoring) {
    if (chain.items.empty())
        throw Error(ErrorCode::EmptyChain, "no anchors or seeds to stitch");
    const auto& items = chain.items;

    std::vector<Match> ext;
    ext.reserve(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        const int64_t lb1 = i == 0 ? 0 : ext[i - 1].end1();
        const int64_t lb2 = i == 0 ? 0 : ext[i - 1].end2();
        const int64_t rb1 = i + 1 < items.size() ? items[i + 1].pos1 : s1.size();
        const int64_t rb2 = i + 1 < items.size() ? items[i + 1].pos2 : s2.size();
        ext.push_back(extend_ungapped(s1, s2, items[i], lb1, lb2, rb1, rb2,
                                      params, scoring));
    }

    AlignmentRecord rec;
    rec.seq1_id = s1.id;
    rec.seq2_id = s2.id;
    rec.seq1_begin = ext.front().pos1;
    rec.seq2_begin = ext.front().pos2;
    rec.seq1_end = ext.back().end1();
    rec.seq2_end = ext.back().end2();

    auto emit_columns = [&](const Match& m) {
        for (int64_t i = 0; i < m.length;) {
            const bool eq = residues_equal(s1.residues[m.pos1 + i],
                                           s2.residues[m.pos2 + i]);
            int64_t run = 1;
            while (i + run < m.length &&
                   residues_equal(s1.residues[m.pos1 + i + run],
                                  s2.residues[m.pos2 + i + run]) == eq)
                ++run;
            push_block(rec.blocks, eq ? BlockOp::Match : BlockOp::Mismatch, run);
            i += run;
        }
    };

    for (size_t i = 0; i < ext.size(); ++i) {
        if (i > 0) {
            std::string_view ga = std::string_view(s1.residues)
                                      .substr(ext[i - 1].end1(),
                                              ext[i].pos1 - ext[i - 1].end1());
            std::string_view gb = std::string_view(s2.residues)
                                      .substr(ext[i - 1].end2(),
                                              ext[i].pos2 - ext[i - 1].end2());
            for (const auto& bl :
                 fill_gap(ga, gb, scoring, params.band_pad, params.fill_cell_cap))
                push_block(rec.blocks, bl.op, bl.length);
        }
        emit_columns(ext[i]);
    }

    rec.score = score_blocks(rec.blocks, scoring);
    int64_t match_cols = 0, total_cols = 0;
    for (const auto& b : rec.blocks) {
        total_cols += b.length;
        if (b.op == BlockOp::Match) match_cols += b.length;
    }
    rec.identity = total_cols == 0
                       ? 0.0
                       : static_cast<double>(match_cols) /
                             static_cast<double>(total_cols);
    return rec;
}

}  // namespace mmsaa::stitching
